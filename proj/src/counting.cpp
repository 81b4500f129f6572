#include "dragon/counting.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

namespace dragon {

namespace {

using Mask = unsigned __int128;

struct MaskHash {
  std::size_t operator()(Mask m) const {
    const auto lo = static_cast<std::uint64_t>(m);
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

constexpr std::size_t kMaxWindow = 127;

struct PlainCount {
  using Value = BigInt;
  static Value one() { return 1; }
  static Value zero() { return 0; }
  static void addWeighted(Value& acc, const Value& v, int) { acc += v; }
  static Value scaled(Value v, int) { return v; }
};

struct PolyCount {
  using Value = WeightPoly;
  static Value one() { return WeightPoly::constant(1); }
  static Value zero() { return {}; }
  static void addWeighted(Value& acc, const Value& v, int exp) {
    if (exp == 0) {
      acc += v;
    } else {
      Value s = v;
      acc += s.shift(exp);
    }
  }
  static Value scaled(Value v, int exp) {
    v.shift(exp);
    return v;
  }
};

// Local view of one component with vertices renumbered in sweep order.
struct Banded {
  std::vector<std::vector<std::pair<std::size_t, int>>> forward;  // (offset to later vertex, weight)
  std::size_t window = 0;
};

std::vector<std::size_t> cuthillMcKee(const DualGraph& g, const std::vector<std::size_t>& comp) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(g.size(), false);
  std::size_t start = comp.front();
  for (std::size_t v : comp) {
    if (g.degree(v) < g.degree(start)) start = v;
  }
  order.push_back(start);
  seen[start] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<std::size_t> next;
    for (const auto& arc : g.arcs(order[k])) {
      if (!seen[arc.to]) {
        seen[arc.to] = true;
        next.push_back(arc.to);
      }
    }
    std::ranges::sort(next, [&](std::size_t x, std::size_t y) {
      return std::pair(g.degree(x), x) < std::pair(g.degree(y), y);
    });
    order.insert(order.end(), next.begin(), next.end());
  }
  return order;
}

std::size_t bandwidthOf(const DualGraph& g, const std::vector<std::size_t>& order,
                        std::vector<std::size_t>& rank) {
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  std::size_t width = 0;
  for (std::size_t v : order) {
    for (const auto& arc : g.arcs(v)) {
      if (rank[arc.to] > rank[v]) width = std::max(width, rank[arc.to] - rank[v]);
    }
  }
  return width;
}

Banded sweepOrder(const DualGraph& g, const std::vector<std::size_t>& comp) {
  static constexpr std::array<std::pair<int, int>, 12> kDirections = {{
      {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {2, -1}, {1, -2},
      {3, 1}, {1, 3}, {3, -1}, {1, -3},
  }};
  std::vector<std::vector<std::size_t>> candidates;
  for (auto [dx, dy] : kDirections) {
    std::vector<std::size_t> order = comp;
    std::ranges::sort(order, [&](std::size_t x, std::size_t y) {
      const SixthPoint px = g.vertex(x).position;
      const SixthPoint py = g.vertex(y).position;
      const std::int64_t kx = px.x * dx + px.y * dy;
      const std::int64_t ky = py.x * dx + py.y * dy;
      if (kx != ky) return kx < ky;
      const std::int64_t tx = px.y * dx - px.x * dy;
      const std::int64_t ty = py.y * dx - py.x * dy;
      if (tx != ty) return tx < ty;
      return x < y;
    });
    candidates.push_back(std::move(order));
  }
  candidates.push_back(cuthillMcKee(g, comp));

  std::vector<std::size_t> rank(g.size(), 0);
  std::size_t best = 0;
  std::size_t bestWidth = std::numeric_limits<std::size_t>::max();
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const std::size_t w = bandwidthOf(g, candidates[c], rank);
    if (w < bestWidth) {
      bestWidth = w;
      best = c;
    }
  }
  if (bestWidth > kMaxWindow) {
    throw std::length_error(fmt::format("sweep window {} exceeds {}", bestWidth, kMaxWindow));
  }
  const auto& order = candidates[best];
  bandwidthOf(g, order, rank);
  Banded b;
  b.window = bestWidth;
  b.forward.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& arc : g.arcs(order[k])) {
      if (rank[arc.to] > k) b.forward[k].emplace_back(rank[arc.to] - k, arc.weightExp);
    }
    std::ranges::sort(b.forward[k]);
  }
  return b;
}

template <class S>
typename S::Value sweepCount(const Banded& b) {
  std::unordered_map<Mask, typename S::Value, MaskHash> states;
  std::unordered_map<Mask, typename S::Value, MaskHash> next;
  states.emplace(Mask{0}, S::one());
  for (std::size_t i = 0; i < b.forward.size(); ++i) {
    next.clear();
    next.reserve(states.size() * 2);
    for (auto& [mask, value] : states) {
      if (mask & 1) {
        auto [it, inserted] = next.try_emplace(mask >> 1, S::zero());
        S::addWeighted(it->second, value, 0);
        continue;
      }
      for (const auto& [offset, w] : b.forward[i]) {
        const Mask bit = Mask{1} << offset;
        if (mask & bit) continue;
        auto [it, inserted] = next.try_emplace((mask | bit) >> 1, S::zero());
        S::addWeighted(it->second, value, w);
      }
    }
    std::swap(states, next);
    if (states.empty()) return S::zero();
  }
  auto it = states.find(Mask{0});
  return it == states.end() ? S::zero() : it->second;
}

template <class S>
typename S::Value countBySweep(const DualGraph& g) {
  if (g.size() % 2 != 0) return S::zero();
  if (g.countColor(Color::Black) != g.countColor(Color::White)) return S::zero();
  const ReductionResult red = reduceForced(g);
  if (!red.feasible) return S::zero();
  typename S::Value total = S::scaled(S::one(), red.forcedWeightExp);
  for (const auto& comp : connectedComponents(red.reduced)) {
    if (comp.size() % 2 != 0) return S::zero();
    total = total * sweepCount<S>(sweepOrder(red.reduced, comp));
    if (total == S::zero()) return total;
  }
  return total;
}

// Signs for every edge (indexed like g.edges()) satisfying the Kasteleyn
// condition on each bounded face: the product of signs around a face walk
// with l darts is (-1)^(l/2 + 1).
std::vector<int> kasteleynSigns(const DualGraph& g, const std::vector<GraphEdge>& edges) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edgeIndex;
  for (std::size_t k = 0; k < edges.size(); ++k) edgeIndex.emplace(std::pair(edges[k].u, edges[k].v), k);
  auto idx = [&](std::size_t a, std::size_t b) { return edgeIndex.at({std::min(a, b), std::max(a, b)}); };

  std::vector<int> sign(edges.size(), 0);
  // Spanning forest edges get +1.
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& arc : g.arcs(v)) {
        if (!seen[arc.to]) {
          seen[arc.to] = true;
          sign[idx(v, arc.to)] = 1;
          queue.push_back(arc.to);
        }
      }
    }
  }

  const std::vector<FaceWalk> faces = faceWalks(g);
  // Each remaining edge borders two distinct faces; they form a tree in the
  // dual rooted at each component's outer face.
  std::vector<std::array<std::size_t, 2>> edgeFaces(edges.size(), {SIZE_MAX, SIZE_MAX});
  std::vector<std::vector<std::size_t>> faceEdges(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& walk = faces[f].vertices;
    for (std::size_t t = 0; t < walk.size(); ++t) {
      const std::size_t e = idx(walk[t], walk[(t + 1) % walk.size()]);
      faceEdges[f].push_back(e);
      auto& slot = edgeFaces[e];
      (slot[0] == SIZE_MAX ? slot[0] : slot[1]) = f;
    }
  }
  std::vector<std::size_t> parentEdge(faces.size(), SIZE_MAX);
  std::vector<bool> reached(faces.size(), false);
  std::vector<std::size_t> order;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (!faces[f].outer) continue;
    reached[f] = true;
    order.push_back(f);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t f = order[k];
    for (std::size_t e : faceEdges[f]) {
      if (sign[e] != 0) continue;
      const std::size_t other = edgeFaces[e][0] == f ? edgeFaces[e][1] : edgeFaces[e][0];
      if (other == SIZE_MAX || reached[other]) continue;
      reached[other] = true;
      parentEdge[other] = e;
      order.push_back(other);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t f = *it;
    if (faces[f].outer) continue;
    int product = 1;
    for (std::size_t e : faceEdges[f]) {
      if (e != parentEdge[f]) product *= sign[e];
    }
    if (product == 0 || parentEdge[f] == SIZE_MAX) {
      throw KasteleynSignError(fmt::format("face {} cannot be signed", f));
    }
    const int target = (faces[f].vertices.size() / 2) % 2 == 0 ? -1 : 1;
    sign[parentEdge[f]] = target * product;
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].outer) continue;
    int product = 1;
    for (std::size_t e : faceEdges[f]) product *= sign[e];
    const int target = (faces[f].vertices.size() / 2) % 2 == 0 ? -1 : 1;
    if (product != target) throw KasteleynSignError(fmt::format("face {} violates the sign rule", f));
  }
  if (std::ranges::find(sign, 0) != sign.end()) throw KasteleynSignError("unsigned edge left over");
  return sign;
}

}  // namespace

std::string counterName(Counter c) { return c == Counter::Brute ? "brute" : "kasteleyn"; }

BigInt countBrute(const DualGraph& g) { return countBySweep<PlainCount>(g); }

WeightPoly countWeighted(const DualGraph& g) { return countBySweep<PolyCount>(g); }

BigInt countKasteleyn(const DualGraph& g) {
  if (g.size() % 2 != 0) return 0;
  if (g.countColor(Color::Black) != g.countColor(Color::White)) return 0;
  if (g.empty()) return 1;
  const std::vector<GraphEdge> edges = g.edges();
  const std::vector<int> sign = kasteleynSigns(g, edges);

  std::vector<std::size_t> slot(g.size(), 0);
  std::size_t blacks = 0;
  std::size_t whites = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    slot[i] = g.vertex(i).color == Color::Black ? blacks++ : whites++;
  }
  std::vector<std::vector<BigInt>> k(blacks, std::vector<BigInt>(whites, 0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::size_t b = edges[e].u;
    std::size_t w = edges[e].v;
    if (g.vertex(b).color != Color::Black) std::swap(b, w);
    k[slot[b]][slot[w]] = sign[e];
  }
  return abs(bareissDeterminant(std::move(k)));
}

BigInt countMatchings(const DualGraph& g, Counter counter) {
  return counter == Counter::Brute ? countBrute(g) : countKasteleyn(g);
}

BigInt bareissDeterminant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int parity = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      parity = -parity;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m[i][j] = (m[k][k] m[i][j] - m[i][k] m[k][j]) / prev, exact.
        BigInt& x = m[i][j];
        x *= m[k][k];
        mpz_submul(x.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return parity * m[n - 1][n - 1];
}

ResidualFactor::ResidualFactor(BigInt residual)
    : std::domain_error("residual factor " + toDecimal(residual)), residual_(std::move(residual)) {}

std::pair<unsigned long, unsigned long> factorize23(const BigInt& n) {
  if (n < 1) throw std::domain_error("factorize23 needs n >= 1");
  BigInt r = n;
  const unsigned long alpha = mpz_scan1(r.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), alpha);
  unsigned long beta = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), 3)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 3);
    ++beta;
  }
  if (r != 1) throw ResidualFactor(r);
  return {alpha, beta};
}

}  // namespace dragon
