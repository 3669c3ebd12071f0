#include "hdm/hasse.hpp"

#include <algorithm>
#include <sstream>

namespace hdm {

HasseDiagram::HasseDiagram(const WeightSet& ws) : m_system(ws.system()), m_highest(ws.highest()) {
  m_depths.reserve(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    m_depths.push_back(ws.depth(i));
    m_labels.push_back(ws.labels(i));
    m_levels.push_back(ws.level(i));
  }
  const int n = m_system.rank();
  for (std::size_t v = 0; v < ws.size(); ++v) {
    IntVector below = m_depths[v];
    for (int j = 0; j < n; ++j) {
      below(j) += 1;
      if (const auto w = ws.find(below)) m_edges.push_back({v, *w, j});
      below(j) -= 1;
    }
  }
  std::sort(m_edges.begin(), m_edges.end());
  index_and_link();
}

HasseDiagram::HasseDiagram(const RootSystem& rs, const IntVector& highest, std::vector<IntVector> depths,
                           std::vector<Edge> edges)
    : m_system(rs), m_highest(highest), m_depths(std::move(depths)), m_edges(std::move(edges)) {
  if (m_highest.size() != rs.rank()) throw Error("highest weight length mismatch");
  if (m_depths.empty() || !m_depths.front().isZero()) throw Error("first vertex must be the highest weight");
  for (const auto& d : m_depths) {
    if (d.size() != rs.rank() || (d.array() < 0).any()) throw Error("invalid depth vector " + format_vector(d));
    m_labels.push_back(m_highest - rs.cartan() * d);
    m_levels.push_back(1 + d.sum());
  }
  for (std::size_t i = 1; i < m_levels.size(); ++i)
    if (m_levels[i] < m_levels[i - 1]) throw Error("vertices not ordered by level");
  std::sort(m_edges.begin(), m_edges.end());
  index_and_link();
  if (m_index.size() != m_depths.size()) throw Error("duplicate vertex");
  for (const auto& e : m_edges) {
    if (e.upper >= m_depths.size() || e.lower >= m_depths.size() || e.label < 0 || e.label >= rs.rank())
      throw Error("edge out of range");
    IntVector diff = m_depths[e.lower] - m_depths[e.upper];
    diff(e.label) -= 1;
    if (!diff.isZero()) throw Error("edge does not join weights differing by its simple root");
  }
  std::size_t expected = 0;
  for (std::size_t v = 0; v < m_depths.size(); ++v) {
    IntVector below = m_depths[v];
    for (int j = 0; j < rs.rank(); ++j) {
      below(j) += 1;
      expected += m_index.contains(below) ? 1 : 0;
      below(j) -= 1;
    }
  }
  if (expected != m_edges.size()) throw Error("edge set is not the full Hasse relation");
}

void HasseDiagram::index_and_link() {
  m_index.clear();
  for (std::size_t v = 0; v < m_depths.size(); ++v) m_index.emplace(m_depths[v], v);
  m_down.assign(m_depths.size(), {});
  m_up.assign(m_depths.size(), {});
  for (std::size_t e = 0; e < m_edges.size(); ++e) {
    if (m_edges[e].upper >= m_depths.size() || m_edges[e].lower >= m_depths.size()) continue;
    m_down[m_edges[e].upper].push_back(e);
    m_up[m_edges[e].lower].push_back(e);
  }
}

std::optional<std::size_t> HasseDiagram::find(const IntVector& depth) const {
  if (depth.size() != m_system.rank()) return std::nullopt;
  const auto it = m_index.find(depth);
  if (it == m_index.end()) return std::nullopt;
  return it->second;
}

bool HasseDiagram::operator==(const HasseDiagram& other) const {
  if (!(m_system == other.m_system) || m_highest != other.m_highest) return false;
  if (m_depths.size() != other.m_depths.size() || m_edges != other.m_edges || m_levels != other.m_levels)
    return false;
  for (std::size_t v = 0; v < m_depths.size(); ++v)
    if (m_depths[v] != other.m_depths[v]) return false;
  return true;
}

std::map<int, std::vector<int>> out_degree_profile(const HasseDiagram& d) {
  std::map<int, std::vector<int>> out;
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    out[d.level(v)].push_back(static_cast<int>(d.down_edges(v).size()));
  for (auto& [level, degrees] : out) std::sort(degrees.begin(), degrees.end());
  return out;
}

int first_branching_level(const HasseDiagram& d) {
  for (const auto& [level, degrees] : out_degree_profile(d))
    if (degrees.back() > 1) return level;
  return 0;
}

std::string format_vector(const IntVector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v(i));
  }
  return s + "]";
}

std::string vertex_name(const IntVector& depth) { return "k=" + format_vector(depth); }

std::string export_dot(const HasseDiagram& d) {
  std::ostringstream os;
  os << "digraph \"" << d.system().type().name() << ' ' << format_vector(d.highest()) << "\" {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    os << "  \"" << vertex_name(d.depth(v)) << "\" [label=\"" << format_vector(d.labels(v)) << "\", level=\""
       << d.level(v) << "\"];\n";
  std::size_t v = 0;
  while (v < d.vertex_count()) {
    const int level = d.level(v);
    os << "  subgraph { rank=same;";
    for (; v < d.vertex_count() && d.level(v) == level; ++v) os << " \"" << vertex_name(d.depth(v)) << "\";";
    os << " }\n";
  }
  for (const auto& e : d.edges())
    os << "  \"" << vertex_name(d.depth(e.upper)) << "\" -> \"" << vertex_name(d.depth(e.lower))
       << "\" [label=\"" << e.label + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace hdm
