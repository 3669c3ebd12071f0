#ifndef HDM_HASSE_HPP
#define HDM_HASSE_HPP

#include "hdm/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace hdm {

/// Directed edge from a weight to the weight one simple root below it.
struct Edge {
  std::size_t upper = 0;
  std::size_t lower = 0;
  int label = 0; ///< 0-based node index of the simple root upper - lower.

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Level-graded Hasse diagram of the weight set of an irreducible
/// representation. Vertex 0 is the highest weight, the last vertex the lowest;
/// vertices are ordered as in WeightSet. Multiplicities are not tracked: every
/// weight appears once.
class HasseDiagram {
public:
  /// Builds vertices and edges from a weight set.
  explicit HasseDiagram(const WeightSet& ws);

  /// Assembles a diagram from explicit parts (used by deserialization).
  /// Validates the edge rule, the level function and the label/depth relation;
  /// throws Error on any violation.
  HasseDiagram(const RootSystem& rs, const IntVector& highest, std::vector<IntVector> depths,
               std::vector<Edge> edges);

  const RootSystem& system() const { return m_system; }
  const IntVector& highest() const { return m_highest; }
  std::size_t vertex_count() const { return m_depths.size(); }
  const std::vector<Edge>& edges() const { return m_edges; }

  const IntVector& depth(std::size_t v) const { return m_depths[v]; }
  const IntVector& labels(std::size_t v) const { return m_labels[v]; }
  int level(std::size_t v) const { return m_levels[v]; }
  int level_count() const { return m_levels.empty() ? 0 : m_levels.back(); }
  std::size_t top() const { return 0; }
  std::size_t bottom() const { return m_depths.size() - 1; }

  /// Edge indices leaving / entering a vertex, sorted by label.
  const std::vector<std::size_t>& down_edges(std::size_t v) const { return m_down[v]; }
  const std::vector<std::size_t>& up_edges(std::size_t v) const { return m_up[v]; }

  std::optional<std::size_t> find(const IntVector& depth) const;
  bool contains(const IntVector& depth) const { return find(depth).has_value(); }

  bool operator==(const HasseDiagram& other) const;

private:
  void index_and_link();

  RootSystem m_system;
  IntVector m_highest;
  std::vector<IntVector> m_depths;
  std::vector<IntVector> m_labels;
  std::vector<int> m_levels;
  std::vector<Edge> m_edges;
  std::vector<std::vector<std::size_t>> m_down;
  std::vector<std::vector<std::size_t>> m_up;
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> m_index;
};

inline HasseDiagram build_hasse(const RootSystem& rs, const IntVector& highest) {
  return HasseDiagram(WeightSet(rs, highest));
}

inline int level_count(const HasseDiagram& d) { return d.level_count(); }

/// Per level, the sorted downward degrees of its vertices.
std::map<int, std::vector<int>> out_degree_profile(const HasseDiagram& d);

/// First level containing a vertex with more than one downward edge, or 0 if
/// the diagram is a chain.
int first_branching_level(const HasseDiagram& d);

/// Vertex name used in exports: "k=[1,0,2]".
std::string vertex_name(const IntVector& depth);
std::string format_vector(const IntVector& v);

/// Deterministic Graphviz digraph. Vertices are named by depth vector,
/// labeled by Dynkin labels and grouped by level; edges carry 1-based node
/// numbers.
std::string export_dot(const HasseDiagram& d);

} // namespace hdm

#endif // HDM_HASSE_HPP
