#pragma once

// Planar bipartite graphs with a combinatorial embedding. Vertices carry a
// label that survives deletions; lattice graphs also remember their face.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "dragon/lattice.hpp"
#include "dragon/region.hpp"

namespace dragon {

using VertexLabel = int;

struct GraphVertex {
  VertexLabel label = 0;
  std::optional<FaceId> face;
  Color color = Color::White;
  // Position in any orientation-preserving frame. Lattice vertices use the
  // exact face centroid (sixths of the v2, v1 basis).
  SixthPoint position;
};

struct Arc {
  std::size_t to = 0;
  int weightExp = 0;  // edge weight x^weightExp
};

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  int weightExp = 0;

  auto operator<=>(const GraphEdge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DualGraph {
 public:
  DualGraph() = default;

  // Neighbor orders are sorted counterclockwise by position. Labels must be
  // unique; edges must join opposite colors, with no loops or repeats.
  static DualGraph build(std::vector<GraphVertex> vertices, std::span<const GraphEdge> edges);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::size_t edgeCount() const { return edgeCount_; }

  const GraphVertex& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  std::span<const Arc> arcs(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

  std::optional<std::size_t> indexOfLabel(VertexLabel label) const;
  std::optional<std::size_t> indexOfFace(const FaceId& face) const;

  // Edges with u < v, sorted.
  std::vector<GraphEdge> edges() const;

  // Copy with every edge weight replaced by weightOf(u, v).
  template <class F>
  DualGraph withWeights(F&& weightOf) const {
    DualGraph g = *this;
    for (std::size_t i = 0; i < g.adjacency_.size(); ++i) {
      for (auto& arc : g.adjacency_[i]) {
        arc.weightExp = i < arc.to ? weightOf(i, arc.to) : weightOf(arc.to, i);
      }
    }
    return g;
  }

  std::size_t countColor(Color c) const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<std::vector<Arc>> adjacency_;
  std::unordered_map<VertexLabel, std::size_t> byLabel_;
  std::size_t edgeCount_ = 0;

  friend DualGraph deleteVertices(const DualGraph& g, const std::set<VertexLabel>& labels);
};

// One vertex per face, in (kind, p, q) order; labels are those indices.
DualGraph dualOf(const std::vector<FaceId>& faces);
DualGraph dualOf(const Region& region);

// Exponent of the tile made of two adjacent faces in the weighted regions:
// x for an east square with a hexagon, a northeast square with a triangle,
// or a northwest square with a hexagon; 1 for every other tile.
int tileWeightExp(const FaceId& x, const FaceId& y);
DualGraph weightedDualOf(const Region& region);

// Induced subgraph on the remaining vertices; embedding orders are filtered.
// Throws GraphError for labels not in the graph.
DualGraph deleteVertices(const DualGraph& g, const std::set<VertexLabel>& labels);

struct ReductionResult {
  DualGraph reduced;
  int forcedWeightExp = 0;
  bool feasible = true;
  std::vector<std::pair<VertexLabel, VertexLabel>> forcedEdges;
};

// Strips edges at degree-one vertices until none remain. An isolated vertex
// makes the graph unmatchable.
ReductionResult reduceForced(const DualGraph& g);

// Connected components as sorted vertex index lists.
std::vector<std::vector<std::size_t>> connectedComponents(const DualGraph& g);

struct FaceWalk {
  std::vector<std::size_t> vertices;  // tail of each dart, in walk order
  std::int64_t twiceArea = 0;         // signed, in position units
  std::size_t component = 0;
  bool outer = false;
};

class EmbeddingInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Faces of the rotation system, each traced with the face on the left of
// every dart so bounded faces come out counterclockwise. Each connected
// component gets exactly one outer face. Throws EmbeddingInvalid when a
// component violates Euler's formula.
std::vector<FaceWalk> faceWalks(const DualGraph& g);

// Line-oriented text format:
//   mg <nVertices> <nEdges>
//   v <index> <B|W> <kind> <p> <q> <cx> <cy>
//   e <i> <j> <weightExp>
// Vertices without a face use kind "Node" with p = label, q = 0.
std::string writeGraphText(const DualGraph& g);
DualGraph readGraphText(std::string_view text);

// Small generic graphs for tests and fuzzing.
DualGraph cycleGraph(std::size_t n);                 // n even, drawn as a regular polygon
DualGraph gridGraph(std::size_t rows, std::size_t cols);

}  // namespace dragon
