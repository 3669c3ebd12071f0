#ifndef HDM_WEIGHTS_HPP
#define HDM_WEIGHTS_HPP

#include "hdm/rational.hpp"
#include "hdm/rootsys.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace hdm {

/// A weight given by its Dynkin labels <chi, alpha_i>. When it belongs to a
/// WeightSet it also carries its depth k relative to the highest weight
/// lambda: chi = lambda - sum_i k_i alpha_i.
struct Weight {
  IntVector labels;
  std::optional<IntVector> depth;

  bool operator==(const Weight& other) const { return labels == other.labels; }
};

struct VectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
      h ^= static_cast<std::size_t>(v(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct VectorEqual {
  bool operator()(const IntVector& a, const IntVector& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

Weight fundamental_weight(const RootSystem& rs, int j);

bool is_dominant(const RootSystem& rs, const IntVector& labels);

/// Simple-root coordinates of a weight, solved exactly over the rationals.
Vector<Rational> root_coordinates(const RootSystem& rs, const IntVector& labels);

/// chi >= psi in the dominance order: chi - psi is a non-negative integer
/// combination of simple roots.
bool dominance_leq(const RootSystem& rs, const IntVector& psi, const IntVector& chi);

/// The unique antidominant weight of the Weyl orbit of `labels`, reached by
/// reflecting in any simple root with a positive label until none remains.
/// For dominant lambda this is w0(lambda).
IntVector lowest_weight(const RootSystem& rs, const IntVector& labels);

/// 1 + height(lambda - w0 lambda): the number of levels of the diagram with
/// highest weight lambda, computed without building it.
int predicted_level_count(const RootSystem& rs, const IntVector& highest);

/// Set of weights of the irreducible representation with a given dominant
/// highest weight. Members are identified by depth vector and ordered by
/// depth height, then lexicographically by depth.
///
/// Construction is breadth-first by level. A member chi at the frontier
/// spawns chi - alpha_j iff p + <chi, alpha_j> >= 1, where p counts the
/// members chi + alpha_j, chi + 2 alpha_j, ... already present. Those all
/// have strictly smaller depth height, so they were built by earlier levels
/// and the string length is known when chi is processed.
class WeightSet {
public:
  WeightSet(const RootSystem& rs, const IntVector& highest);

  const RootSystem& system() const { return m_system; }
  const IntVector& highest() const { return m_highest; }
  std::size_t size() const { return m_depths.size(); }

  const IntVector& depth(std::size_t i) const { return m_depths[i]; }
  const IntVector& labels(std::size_t i) const { return m_labels[i]; }
  Weight member(std::size_t i) const { return {m_labels[i], m_depths[i]}; }
  /// 1 + sum of depth entries.
  int level(std::size_t i) const { return m_levels[i]; }
  int level_count() const { return m_levels.back(); }

  std::optional<std::size_t> find(const IntVector& depth) const;
  bool contains(const IntVector& depth) const { return find(depth).has_value(); }
  /// Membership by Dynkin labels (solves for the depth first).
  bool contains_labels(const IntVector& labels) const;

private:
  RootSystem m_system;
  IntVector m_highest;
  std::vector<IntVector> m_depths;
  std::vector<IntVector> m_labels;
  std::vector<int> m_levels;
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> m_index;
};

inline WeightSet weight_set(const RootSystem& rs, const IntVector& highest) { return WeightSet(rs, highest); }

} // namespace hdm

#endif // HDM_WEIGHTS_HPP
