#include "dragon/dual_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

namespace dragon {

namespace {

// Counterclockwise angular order of direction vectors, starting at the
// positive x axis.
bool angleLess(SixthPoint a, SixthPoint b) {
  auto half = [](SixthPoint v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

std::string rationalText(std::int64_t sixths) {
  std::int64_t num = sixths;
  std::int64_t den = 6;
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
  return fmt::format("{}/{}", num, den);
}

std::int64_t parseSixths(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw GraphError("coordinate must be num/den: " + text);
  const std::int64_t num = std::stoll(text.substr(0, slash));
  const std::int64_t den = std::stoll(text.substr(slash + 1));
  if (den <= 0 || (num * 6) % den != 0) throw GraphError("coordinate not a multiple of 1/6: " + text);
  return num * 6 / den;
}

}  // namespace

DualGraph DualGraph::build(std::vector<GraphVertex> vertices, std::span<const GraphEdge> edges) {
  DualGraph g;
  g.vertices_ = std::move(vertices);
  g.adjacency_.resize(g.vertices_.size());
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    auto [it, inserted] = g.byLabel_.emplace(g.vertices_[i].label, i);
    if (!inserted) throw GraphError(fmt::format("duplicate vertex label {}", g.vertices_[i].label));
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.u >= g.size() || e.v >= g.size()) throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("self-loop");
    if (g.vertices_[e.u].color == g.vertices_[e.v].color) {
      throw GraphError(fmt::format("edge {}-{} joins equal colors", e.u, e.v));
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw GraphError(fmt::format("parallel edge {}-{}", e.u, e.v));
    }
    g.adjacency_[e.u].push_back({e.v, e.weightExp});
    g.adjacency_[e.v].push_back({e.u, e.weightExp});
  }
  g.edgeCount_ = seen.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const SixthPoint o = g.vertices_[i].position;
    std::ranges::sort(g.adjacency_[i], [&](const Arc& x, const Arc& y) {
      const SixthPoint px = g.vertices_[x.to].position;
      const SixthPoint py = g.vertices_[y.to].position;
      return angleLess({px.x - o.x, px.y - o.y}, {py.x - o.x, py.y - o.y});
    });
  }
  return g;
}

std::optional<std::size_t> DualGraph::indexOfLabel(VertexLabel label) const {
  auto it = byLabel_.find(label);
  if (it == byLabel_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DualGraph::indexOfFace(const FaceId& face) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].face == face) return i;
  }
  return std::nullopt;
}

std::vector<GraphEdge> DualGraph::edges() const {
  std::vector<GraphEdge> out;
  out.reserve(edgeCount_);
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    for (const auto& arc : adjacency_[i]) {
      if (i < arc.to) out.push_back({i, arc.to, arc.weightExp});
    }
  }
  std::ranges::sort(out);
  return out;
}

std::size_t DualGraph::countColor(Color c) const {
  return static_cast<std::size_t>(
      std::ranges::count_if(vertices_, [c](const GraphVertex& v) { return v.color == c; }));
}

DualGraph dualOf(const std::vector<FaceId>& faces) {
  std::vector<FaceId> sorted = faces;
  std::ranges::sort(sorted);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_map<FaceId, std::size_t, FaceIdHash> index;
  std::vector<GraphVertex> vertices;
  vertices.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    index.emplace(sorted[i], i);
    vertices.push_back({static_cast<VertexLabel>(i), sorted[i], faceColor(sorted[i]),
                        latticeCentroid(sorted[i])});
  }
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (const auto& nb : faceNeighbors(sorted[i])) {
      auto it = index.find(nb);
      if (it != index.end() && i < it->second) edges.push_back({i, it->second, 0});
    }
  }
  return DualGraph::build(std::move(vertices), edges);
}

DualGraph dualOf(const Region& region) { return dualOf(region.faces); }

int tileWeightExp(const FaceId& x, const FaceId& y) {
  const FaceId& square = isSquare(x.kind) ? x : y;
  const FaceId& other = isSquare(x.kind) ? y : x;
  switch (square.kind) {
    case FaceKind::SquareE:
    case FaceKind::SquareNW:
      return other.kind == FaceKind::Hex ? 1 : 0;
    case FaceKind::SquareNE:
      return isTriangle(other.kind) ? 1 : 0;
    default:
      throw GraphError("a tile needs one square");
  }
}

DualGraph weightedDualOf(const Region& region) {
  const DualGraph g = dualOf(region);
  return g.withWeights([&](std::size_t u, std::size_t v) {
    return tileWeightExp(*g.vertex(u).face, *g.vertex(v).face);
  });
}

DualGraph deleteVertices(const DualGraph& g, const std::set<VertexLabel>& labels) {
  std::vector<bool> drop(g.size(), false);
  for (VertexLabel l : labels) {
    auto i = g.indexOfLabel(l);
    if (!i) throw GraphError(fmt::format("unknown vertex label {}", l));
    drop[*i] = true;
  }
  std::vector<std::size_t> remap(g.size(), 0);
  DualGraph out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (drop[i]) continue;
    remap[i] = out.vertices_.size();
    out.byLabel_.emplace(g.vertices_[i].label, out.vertices_.size());
    out.vertices_.push_back(g.vertices_[i]);
  }
  out.adjacency_.resize(out.vertices_.size());
  std::size_t arcs = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (drop[i]) continue;
    auto& list = out.adjacency_[remap[i]];
    for (const auto& arc : g.adjacency_[i]) {
      if (!drop[arc.to]) list.push_back({remap[arc.to], arc.weightExp});
    }
    arcs += list.size();
  }
  out.edgeCount_ = arcs / 2;
  return out;
}

ReductionResult reduceForced(const DualGraph& g) {
  ReductionResult res;
  std::vector<bool> gone(g.size(), false);
  std::vector<std::size_t> deg(g.size());
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < g.size(); ++i) {
    deg[i] = g.degree(i);
    if (deg[i] <= 1) queue.push_back(i);
  }
  std::set<VertexLabel> removed;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (gone[v]) continue;
    if (deg[v] == 0) {
      res.feasible = false;
      break;
    }
    if (deg[v] != 1) continue;
    std::size_t partner = 0;
    int w = 0;
    for (const auto& arc : g.arcs(v)) {
      if (!gone[arc.to]) {
        partner = arc.to;
        w = arc.weightExp;
        break;
      }
    }
    gone[v] = gone[partner] = true;
    removed.insert(g.vertex(v).label);
    removed.insert(g.vertex(partner).label);
    res.forcedWeightExp += w;
    res.forcedEdges.emplace_back(g.vertex(v).label, g.vertex(partner).label);
    for (std::size_t x : {v, partner}) {
      for (const auto& arc : g.arcs(x)) {
        if (gone[arc.to]) continue;
        if (--deg[arc.to] <= 1) queue.push_back(arc.to);
      }
    }
  }
  res.reduced = deleteVertices(g, removed);
  if (!res.feasible) {
    res.forcedWeightExp = 0;
    res.forcedEdges.clear();
  }
  return res;
}

std::vector<std::vector<std::size_t>> connectedComponents(const DualGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (const auto& arc : g.arcs(comp[k])) {
        if (!seen[arc.to]) {
          seen[arc.to] = true;
          comp.push_back(arc.to);
        }
      }
    }
    std::ranges::sort(comp);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<FaceWalk> faceWalks(const DualGraph& g) {
  const std::size_t n = g.size();
  // Position of each dart's reverse in the head's rotation.
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    reverse[i].resize(g.degree(i));
    for (std::size_t k = 0; k < g.degree(i); ++k) {
      const std::size_t j = g.arcs(i)[k].to;
      const auto arcs = g.arcs(j);
      const auto it = std::ranges::find_if(arcs, [i](const Arc& a) { return a.to == i; });
      reverse[i][k] = static_cast<std::size_t>(it - arcs.begin());
    }
  }
  std::vector<std::size_t> compOf(n, 0);
  const auto comps = connectedComponents(g);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t v : comps[c]) compOf[v] = c;
  }

  std::vector<FaceWalk> faces;
  std::vector<std::vector<bool>> used(n);
  for (std::size_t i = 0; i < n; ++i) used[i].assign(g.degree(i), false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < g.degree(i); ++k) {
      if (used[i][k]) continue;
      FaceWalk face;
      face.component = compOf[i];
      std::size_t v = i;
      std::size_t pos = k;
      while (!used[v][pos]) {
        used[v][pos] = true;
        face.vertices.push_back(v);
        const std::size_t w = g.arcs(v)[pos].to;
        const std::size_t back = reverse[v][pos];
        const std::size_t deg = g.degree(w);
        pos = (back + deg - 1) % deg;
        v = w;
      }
      if (v != i || pos != k) throw EmbeddingInvalid("face traversal did not close");
      for (std::size_t t = 0; t < face.vertices.size(); ++t) {
        const SixthPoint a = g.vertex(face.vertices[t]).position;
        const SixthPoint b = g.vertex(face.vertices[(t + 1) % face.vertices.size()]).position;
        face.twiceArea += a.x * b.y - a.y * b.x;
      }
      faces.push_back(std::move(face));
    }
  }

  // One outer face per component: the most negative signed area.
  std::vector<std::optional<std::size_t>> outer(comps.size());
  std::vector<std::size_t> faceCount(comps.size(), 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto& best = outer[faces[f].component];
    ++faceCount[faces[f].component];
    if (!best || faces[f].twiceArea < faces[*best].twiceArea) best = f;
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (outer[c]) faces[*outer[c]].outer = true;
    std::size_t edgesHere = 0;
    for (std::size_t v : comps[c]) edgesHere += g.degree(v);
    edgesHere /= 2;
    if (edgesHere == 0) continue;
    const auto euler = static_cast<long>(comps[c].size()) - static_cast<long>(edgesHere) +
                       static_cast<long>(faceCount[c]);
    if (euler != 2) {
      throw EmbeddingInvalid(fmt::format("component {} has V-E+F = {}, not 2", c, euler));
    }
  }
  return faces;
}

std::string writeGraphText(const DualGraph& g) {
  std::string out = fmt::format("mg {} {}\n", g.size(), g.edgeCount());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    const char color = v.color == Color::Black ? 'B' : 'W';
    if (v.face) {
      out += fmt::format("v {} {} {} {} {} {} {}\n", i, color, kindName(v.face->kind), v.face->p,
                         v.face->q, rationalText(v.position.x), rationalText(v.position.y));
    } else {
      out += fmt::format("v {} {} Node {} 0 {} {}\n", i, color, v.label, rationalText(v.position.x),
                         rationalText(v.position.y));
    }
  }
  for (const auto& e : g.edges()) out += fmt::format("e {} {} {}\n", e.u, e.v, e.weightExp);
  return out;
}

DualGraph readGraphText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> tag >> n >> m) || tag != "mg") throw GraphError("missing 'mg <n> <m>' header");
  std::vector<GraphVertex> vertices(n);
  std::vector<bool> present(n, false);
  std::vector<GraphEdge> edges;
  while (in >> tag) {
    if (tag == "v") {
      std::size_t idx = 0;
      std::string color;
      std::string kind;
      int p = 0;
      int q = 0;
      std::string cx;
      std::string cy;
      if (!(in >> idx >> color >> kind >> p >> q >> cx >> cy) || idx >= n) {
        throw GraphError("malformed vertex line");
      }
      GraphVertex& v = vertices[idx];
      if (color != "B" && color != "W") throw GraphError("vertex color must be B or W");
      v.color = color == "B" ? Color::Black : Color::White;
      v.position = {parseSixths(cx), parseSixths(cy)};
      if (kind == "Node") {
        v.label = p;
      } else {
        auto k = parseKind(kind);
        if (!k) throw GraphError("unknown face kind " + kind);
        v.face = FaceId{*k, p, q};
        v.label = static_cast<VertexLabel>(idx);
      }
      present[idx] = true;
    } else if (tag == "e") {
      GraphEdge e;
      if (!(in >> e.u >> e.v >> e.weightExp)) throw GraphError("malformed edge line");
      edges.push_back(e);
    } else {
      throw GraphError("unknown record '" + tag + "'");
    }
  }
  if (std::ranges::find(present, false) != present.end()) throw GraphError("missing vertex line");
  if (edges.size() != m) throw GraphError("edge count does not match header");
  return DualGraph::build(std::move(vertices), edges);
}

DualGraph cycleGraph(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw GraphError("cycle length must be even and at least 4");
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    // Points on a parabola are in convex position.
    const auto x = static_cast<std::int64_t>(i);
    vertices.push_back({static_cast<VertexLabel>(i), std::nullopt,
                        i % 2 == 0 ? Color::White : Color::Black, {6 * x, 6 * x * x}});
    edges.push_back({i, (i + 1) % n, 0});
  }
  return DualGraph::build(std::move(vertices), edges);
}

DualGraph gridGraph(std::size_t rows, std::size_t cols) {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t id = r * cols + c;
      vertices.push_back({static_cast<VertexLabel>(id), std::nullopt,
                          (r + c) % 2 == 0 ? Color::White : Color::Black,
                          {6 * static_cast<std::int64_t>(c), 6 * static_cast<std::int64_t>(r)}});
      if (c + 1 < cols) edges.push_back({id, id + 1, 0});
      if (r + 1 < rows) edges.push_back({id, id + cols, 0});
    }
  }
  return DualGraph::build(std::move(vertices), edges);
}

}  // namespace dragon
