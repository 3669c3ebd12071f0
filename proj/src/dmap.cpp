#include "hdm/dmap.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hdm {

// ---------------------------------------------------------------- Labeling

void Labeling::validate() const {
  if (!source.admissible() || !target.admissible()) throw Error("labeling between inadmissible systems");
  if (static_cast<int>(image.size()) != source.rank)
    throw Error("labeling has " + std::to_string(image.size()) + " entries, expected " +
                std::to_string(source.rank));
  for (int t : image)
    if (t < 0 || t >= target.rank) throw Error("labeling value out of range for " + target.name());
}

IntMatrix Labeling::matrix() const {
  IntMatrix f = IntMatrix::Zero(target.rank, source.rank);
  for (int j = 0; j < source.rank; ++j) f(image[j], j) = 1;
  return f;
}

bool Labeling::onto() const {
  const auto sizes = fiber_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; });
}

std::vector<int> Labeling::fiber_sizes() const {
  std::vector<int> sizes(target.rank, 0);
  for (int t : image) ++sizes[t];
  return sizes;
}

Labeling Labeling::precompose(const std::vector<int>& perm) const {
  Labeling out = *this;
  for (std::size_t j = 0; j < image.size(); ++j) out.image[j] = image[perm[j]];
  return out;
}

std::string Labeling::str() const {
  std::string s = "[";
  for (std::size_t j = 0; j < image.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(image[j] + 1);
  }
  return s + "]";
}

Labeling Labeling::identity(SystemType t) {
  Labeling f{t, t, std::vector<int>(t.rank)};
  std::iota(f.image.begin(), f.image.end(), 0);
  return f;
}

IntVector image_depth(const Labeling& f, const IntVector& depth) {
  IntVector out = IntVector::Zero(f.target.rank);
  for (int j = 0; j < f.source.rank; ++j) out(f.image[j]) += depth(j);
  return out;
}

// ------------------------------------------------------------- induce_map

std::optional<DiagramMap> induce_map(const Labeling& f, std::shared_ptr<const HasseDiagram> src,
                                     std::shared_ptr<const HasseDiagram> tgt) {
  f.validate();
  if (!(src->system().type() == f.source) || !(tgt->system().type() == f.target))
    throw Error("labeling " + f.source.name() + "->" + f.target.name() + " does not match diagrams " +
                src->system().type().name() + "->" + tgt->system().type().name());
  const IntMatrix fm = f.matrix();
  DiagramMap m{f, src, tgt, {}, false};
  m.vertex_map.reserve(src->vertex_count());
  std::vector<char> hit(tgt->vertex_count(), 0);
  std::size_t covered = 0;
  for (std::size_t v = 0; v < src->vertex_count(); ++v) {
    const auto w = tgt->find(fm * src->depth(v));
    if (!w) return std::nullopt;
    m.vertex_map.push_back(*w);
    if (!hit[*w]) {
      hit[*w] = 1;
      ++covered;
    }
  }
  m.surjective = covered == tgt->vertex_count();
  return m;
}

std::optional<std::string> check_diagram_map(const DiagramMap& m) {
  const auto& src = *m.source;
  const auto& tgt = *m.target;
  if (m.vertex_map.size() != src.vertex_count()) return "vertex map has wrong size";
  if (m.vertex_map[src.top()] != tgt.top()) return "top is not sent to top";
  for (std::size_t v = 0; v < src.vertex_count(); ++v) {
    if (m.vertex_map[v] >= tgt.vertex_count()) return "vertex map out of range";
    if (src.level(v) != tgt.level(m.vertex_map[v])) return "level not preserved at " + vertex_name(src.depth(v));
  }
  for (const auto& e : src.edges()) {
    const IntVector diff = tgt.depth(m.vertex_map[e.lower]) - tgt.depth(m.vertex_map[e.upper]);
    IntVector expected = IntVector::Zero(tgt.system().rank());
    expected(m.labeling.image[e.label]) = 1;
    if (diff != expected)
      return "edge " + vertex_name(src.depth(e.upper)) + " -> " + vertex_name(src.depth(e.lower)) +
             " not sent to an edge labeled " + std::to_string(m.labeling.image[e.label] + 1);
  }
  std::set<std::size_t> image(m.vertex_map.begin(), m.vertex_map.end());
  if ((image.size() == tgt.vertex_count()) != m.surjective) return "surjectivity flag is wrong";
  return std::nullopt;
}

// ----------------------------------------------------------- DiagramCache

std::shared_ptr<const RootSystem> DiagramCache::system(SystemType t) {
  std::lock_guard lock(m_mutex);
  auto& rs = m_systems[t];
  if (!rs) rs = std::make_shared<const RootSystem>(t);
  return rs;
}

std::shared_ptr<const HasseDiagram> DiagramCache::get(SystemType t, const IntVector& highest) {
  const auto rs = system(t);
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(m_mutex);
    auto& s = m_diagrams[{t, std::vector<int>(highest.data(), highest.data() + highest.size())}];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->diagram = std::make_shared<const HasseDiagram>(build_hasse(*rs, highest)); });
  return slot->diagram;
}

std::shared_ptr<const HasseDiagram> DiagramCache::fundamental(SystemType t, int node) {
  const auto rs = system(t);
  return get(t, fundamental_weight(*rs, node).labels);
}

int DiagramCache::fundamental_level_count(SystemType t, int node) {
  const auto rs = system(t);
  {
    std::lock_guard lock(m_mutex);
    if (const auto it = m_levels.find({t, node}); it != m_levels.end()) return it->second;
  }
  const int levels = predicted_level_count(*rs, fundamental_weight(*rs, node).labels);
  std::lock_guard lock(m_mutex);
  m_levels[{t, node}] = levels;
  return levels;
}

// ------------------------------------------------------------ the search

std::string reason_name(Reason r) {
  switch (r) {
  case Reason::RankTooLarge: return "rank-too-large";
  case Reason::ExtremalViolation: return "extremal-violation";
  case Reason::LevelMismatch: return "level-mismatch";
  case Reason::NotOnto: return "not-onto";
  case Reason::MissingImage: return "missing-image";
  case Reason::NotSurjective: return "not-surjective";
  }
  return "unknown";
}

namespace {

/// One diagram whose induced map is checked along the search. Its target is
/// either fixed, or the fundamental-weight diagram of f(anchor).
struct Constraint {
  std::shared_ptr<const HasseDiagram> source;
  int anchor = -1;
  std::shared_ptr<const HasseDiagram> fixed_target;
};

struct EngineOptions {
  bool extremal_constraint = false;
  bool require_onto = false;
  bool require_surjective = false;
};

struct Leaf {
  Labeling labeling;
  std::vector<bool> surjective;
};

class Engine {
public:
  Engine(const RootSystem& src, const RootSystem& tgt, std::vector<Constraint> constraints, EngineOptions opts,
         DiagramCache* cache)
      : m_src(src), m_tgt(tgt), m_constraints(std::move(constraints)), m_opts(opts), m_cache(cache) {
    const int n = src.rank();
    // Breadth-first order from the first anchor (or node 0).
    int start = 0;
    for (const auto& c : m_constraints)
      if (c.anchor >= 0) {
        start = c.anchor;
        break;
      }
    std::vector<bool> seen(n, false);
    m_order.push_back(start);
    seen[start] = true;
    for (std::size_t i = 0; i < m_order.size(); ++i)
      for (int nb : src.neighbors(m_order[i]))
        if (!seen[nb]) {
          seen[nb] = true;
          m_order.push_back(nb);
        }
    m_position.assign(n, 0);
    for (int p = 0; p < n; ++p) m_position[m_order[p]] = p;

    m_ready.assign(n, {});
    for (std::size_t c = 0; c < m_constraints.size(); ++c) {
      const auto& d = *m_constraints[c].source;
      for (std::size_t v = 1; v < d.vertex_count(); ++v) {
        int ready = 0;
        for (int j = 0; j < n; ++j)
          if (d.depth(v)(j) > 0) ready = std::max(ready, m_position[j]);
        m_ready[ready].push_back({c, v});
      }
    }
    m_targets.resize(m_constraints.size());
    for (std::size_t c = 0; c < m_constraints.size(); ++c) m_targets[c] = m_constraints[c].fixed_target;
    m_f.assign(n, -1);
    m_hits.assign(tgt.rank(), 0);
  }

  void run() { assign(0); }

  std::vector<Leaf> leaves;
  std::vector<Rejection> rejections;
  std::size_t branches = 0;

private:
  void reject(Reason r, int node, std::string detail) {
    rejections.push_back({m_f, r, node, std::move(detail)});
  }

  Labeling current() const { return {m_src.type(), m_tgt.type(), m_f}; }

  // Checks the constraints that become decidable once position `pos` is assigned.
  bool admissible_at(int pos) {
    const int node = m_order[pos];
    const int b = m_f[node];
    if (m_opts.extremal_constraint && m_src.is_extremal(node) && !m_tgt.is_extremal(b)) {
      reject(Reason::ExtremalViolation, node,
             "extremal node " + std::to_string(node + 1) + " sent to non-extremal node " + std::to_string(b + 1));
      return false;
    }
    for (std::size_t c = 0; c < m_constraints.size(); ++c) {
      if (m_constraints[c].anchor != node) continue;
      const int src_levels = m_constraints[c].source->level_count();
      if (m_opts.require_surjective) {
        const int tgt_levels = m_cache->fundamental_level_count(m_tgt.type(), b);
        if (src_levels != tgt_levels) {
          reject(Reason::LevelMismatch, node,
                 "diagram of node " + std::to_string(node + 1) + " has " + std::to_string(src_levels) +
                     " levels, diagram of node " + std::to_string(b + 1) + " has " + std::to_string(tgt_levels));
          return false;
        }
      }
      m_targets[c] = m_cache->fundamental(m_tgt.type(), b);
    }
    if (m_opts.require_onto) {
      const int missing = static_cast<int>(std::count(m_hits.begin(), m_hits.end(), 0));
      const int remaining = m_src.rank() - pos - 1;
      if (missing > remaining) {
        reject(Reason::NotOnto, -1, std::to_string(missing) + " target nodes uncovered with " +
                                        std::to_string(remaining) + " source nodes left");
        return false;
      }
    }
    IntVector image(m_tgt.rank());
    for (const auto& [c, v] : m_ready[pos]) {
      const auto& d = *m_constraints[c].source;
      image.setZero();
      const IntVector& k = d.depth(v);
      for (int j = 0; j < m_src.rank(); ++j)
        if (k(j) != 0) image(m_f[j]) += k(j);
      if (!m_targets[c]->contains(image)) {
        reject(Reason::MissingImage, m_constraints[c].anchor,
               "vertex " + vertex_name(k) + " maps to " + vertex_name(image) + ", not a target vertex");
        return false;
      }
    }
    return true;
  }

  void leaf() {
    Leaf out{current(), {}};
    for (std::size_t c = 0; c < m_constraints.size(); ++c) {
      const auto m = induce_map(out.labeling, m_constraints[c].source, m_targets[c]);
      const bool surjective = m && m->surjective;
      if (m_opts.require_surjective && !surjective) {
        reject(Reason::NotSurjective, m_constraints[c].anchor,
               "induced map covers fewer than " + std::to_string(m_targets[c]->vertex_count()) + " target vertices");
        return;
      }
      out.surjective.push_back(surjective);
    }
    leaves.push_back(std::move(out));
  }

  void assign(int pos) {
    if (pos == m_src.rank()) {
      leaf();
      return;
    }
    const int node = m_order[pos];
    for (int b = 0; b < m_tgt.rank(); ++b) {
      ++branches;
      m_f[node] = b;
      ++m_hits[b];
      const auto saved = m_targets;
      if (admissible_at(pos)) assign(pos + 1);
      m_targets = saved;
      --m_hits[b];
    }
    m_f[node] = -1;
  }

  const RootSystem& m_src;
  const RootSystem& m_tgt;
  std::vector<Constraint> m_constraints;
  EngineOptions m_opts;
  DiagramCache* m_cache;
  std::vector<int> m_order;
  std::vector<int> m_position;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> m_ready;
  std::vector<std::shared_ptr<const HasseDiagram>> m_targets;
  std::vector<int> m_f;
  std::vector<int> m_hits;
};

} // namespace

SearchResult find_surjective_labelings(SystemType src, SystemType tgt, bool extremal_constraint,
                                       DiagramCache& cache) {
  const auto rs_src = cache.system(src);
  const auto rs_tgt = cache.system(tgt);
  SearchResult result;
  if (tgt.rank > src.rank) {
    result.rejections.push_back({std::vector<int>(src.rank, -1), Reason::RankTooLarge, -1,
                                 tgt.name() + " has larger rank than " + src.name()});
    return result;
  }
  std::vector<Constraint> constraints;
  for (int a : rs_src->extremal_nodes()) constraints.push_back({cache.fundamental(src, a), a, nullptr});
  Engine engine(*rs_src, *rs_tgt, std::move(constraints), {extremal_constraint, true, true}, &cache);
  engine.run();
  for (auto& l : engine.leaves) result.labelings.push_back(std::move(l.labeling));
  std::sort(result.labelings.begin(), result.labelings.end());
  result.rejections = std::move(engine.rejections);
  result.branches_visited = engine.branches;
  return result;
}

std::vector<MapCandidate> find_maps(std::shared_ptr<const HasseDiagram> src, std::shared_ptr<const HasseDiagram> tgt) {
  std::vector<MapCandidate> out;
  Engine engine(src->system(), tgt->system(), {{src, -1, tgt}}, {}, nullptr);
  engine.run();
  for (auto& l : engine.leaves) out.push_back({std::move(l.labeling), l.surjective.front()});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.labeling < b.labeling; });
  return out;
}

// ----------------------------------------------------- classes and folding

std::vector<int> standard_involution(SystemType t) {
  std::vector<int> perm(t.rank);
  std::iota(perm.begin(), perm.end(), 0);
  const int n = t.rank;
  if (t.family == Family::A) {
    for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
  } else if (t.family == Family::D) {
    std::swap(perm[n - 2], perm[n - 1]);
  } else if (t.family == Family::E && n == 6) {
    perm = {5, 1, 4, 3, 2, 0};
  }
  return perm;
}

std::vector<std::vector<Labeling>> labeling_classes(const std::vector<Labeling>& labelings) {
  std::map<Labeling, std::vector<Labeling>> classes;
  for (const auto& f : labelings) {
    const Labeling twisted = f.precompose(standard_involution(f.source));
    classes[std::min(f, twisted)].push_back(f);
  }
  std::vector<std::vector<Labeling>> out;
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

Labeling folding_labeling(SystemType src, const std::vector<std::vector<int>>& orbits) {
  const RootSystem rs(src);
  const int n = rs.rank();
  std::vector<int> block(n, -1);
  for (std::size_t b = 0; b < orbits.size(); ++b) {
    if (orbits[b].empty()) throw Error("empty orbit in partition");
    for (int i : orbits[b]) {
      rs.check_node(i);
      if (block[i] >= 0) throw Error("node " + std::to_string(i + 1) + " appears in two orbits");
      block[i] = static_cast<int>(b);
    }
  }
  if (std::count(block.begin(), block.end(), -1) > 0) throw Error("partition does not cover every node");

  for (const auto& orbit : orbits)
    for (int i : orbit)
      for (int j : orbit)
        if (rs.adjacent(i, j)) throw Error("orbit contains adjacent nodes " + std::to_string(i + 1) + ", " +
                                           std::to_string(j + 1));

  // The largest automorphism group preserving every block is a group; its
  // orbits equal the partition iff some automorphism group induces it.
  std::vector<std::vector<int>> stabilizer;
  for (const auto& perm : diagram_automorphisms(rs)) {
    bool keeps = true;
    for (int i = 0; i < n && keeps; ++i) keeps = block[perm[i]] == block[i];
    if (keeps) stabilizer.push_back(perm);
  }
  for (const auto& orbit : orbits)
    for (int i : orbit)
      for (int j : orbit) {
        const bool joined = std::any_of(stabilizer.begin(), stabilizer.end(), [&](const auto& p) { return p[i] == j; });
        if (!joined) throw Error("partition is not the orbit partition of a diagram automorphism group");
      }

  if (static_cast<int>(orbits.size()) == n) {
    Labeling f = Labeling::identity(src);
    for (int i = 0; i < n; ++i) f.image[i] = block[i];
    return f;
  }

  SystemType quotient{};
  switch (src.family) {
  case Family::A: quotient = {Family::C, (n + 1) / 2}; break;
  case Family::D: quotient = orbits.size() == 2 ? SystemType{Family::G, 2} : SystemType{Family::B, n - 1}; break;
  case Family::E: quotient = {Family::F, 4}; break;
  default: throw Error("no folding defined for " + src.name());
  }
  if (!quotient.admissible())
    throw Error("folding " + src.name() + " gives " + quotient.name() + ", which is not an admissible canonical type");

  const int m = static_cast<int>(orbits.size());
  if (m != quotient.rank) throw Error("orbit count does not match quotient rank");
  IntMatrix folded = 2 * IntMatrix::Identity(m, m);
  for (int bi = 0; bi < m; ++bi)
    for (int bj = 0; bj < m; ++bj) {
      if (bi == bj) continue;
      int sum = 0;
      for (int i : orbits[bi]) sum += rs.cartan()(i, orbits[bj].front());
      folded(bi, bj) = sum;
    }

  const IntMatrix target = cartan_matrix(quotient);
  std::vector<int> to_node(m);
  std::iota(to_node.begin(), to_node.end(), 0);
  do {
    bool match = true;
    for (int bi = 0; bi < m && match; ++bi)
      for (int bj = 0; bj < m && match; ++bj) match = folded(bi, bj) == target(to_node[bi], to_node[bj]);
    if (match) {
      Labeling f{src, quotient, std::vector<int>(n)};
      for (int i = 0; i < n; ++i) f.image[i] = to_node[block[i]];
      return f;
    }
  } while (std::next_permutation(to_node.begin(), to_node.end()));
  throw Error("quotient Cartan matrix does not match " + quotient.name());
}

} // namespace hdm
