#include "hdm/weights.hpp"

#include <algorithm>
#include <unordered_set>

namespace hdm {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

void check_length(const RootSystem& rs, const IntVector& v) {
  if (v.size() != rs.rank())
    throw Error("weight of length " + std::to_string(v.size()) + " does not match " + rs.type().name());
}

} // namespace

Weight fundamental_weight(const RootSystem& rs, int j) {
  rs.check_node(j);
  IntVector labels = IntVector::Zero(rs.rank());
  labels(j) = 1;
  return {labels, std::nullopt};
}

bool is_dominant(const RootSystem& rs, const IntVector& labels) {
  check_length(rs, labels);
  return (labels.array() >= 0).all();
}

Vector<Rational> root_coordinates(const RootSystem& rs, const IntVector& labels) {
  check_length(rs, labels);
  const Matrix<Rational> a = rs.cartan().cast<std::int64_t>().unaryExpr([](std::int64_t x) { return Rational(x); });
  const Vector<Rational> b = labels.cast<std::int64_t>().unaryExpr([](std::int64_t x) { return Rational(x); });
  return solve_exact<Rational>(a, b);
}

bool dominance_leq(const RootSystem& rs, const IntVector& psi, const IntVector& chi) {
  const Vector<Rational> k = root_coordinates(rs, chi - psi);
  return std::all_of(k.data(), k.data() + k.size(),
                     [](const Rational& x) { return x.denominator() == 1 && x.numerator() >= 0; });
}

IntVector lowest_weight(const RootSystem& rs, const IntVector& labels) {
  check_length(rs, labels);
  IntVector chi = labels;
  for (;;) {
    int j = 0;
    while (j < rs.rank() && chi(j) <= 0) ++j;
    if (j == rs.rank()) return chi;
    chi = simple_reflection(rs, j, chi);
  }
}

int predicted_level_count(const RootSystem& rs, const IntVector& highest) {
  const Vector<Rational> k = root_coordinates(rs, highest - lowest_weight(rs, highest));
  Rational total = 0;
  for (Eigen::Index i = 0; i < k.size(); ++i) total += k(i);
  if (total.denominator() != 1) throw Error("non-integral level count");
  return 1 + static_cast<int>(total.numerator());
}

WeightSet::WeightSet(const RootSystem& rs, const IntVector& highest) : m_system(rs), m_highest(highest) {
  check_length(rs, highest);
  if (!is_dominant(rs, highest)) throw Error("highest weight is not dominant");
  if (highest.isZero()) throw Error("highest weight must be nonzero");
  const int n = rs.rank();
  const IntMatrix& a = rs.cartan();

  auto add = [&](const IntVector& depth, int level) {
    m_index.emplace(depth, m_depths.size());
    m_depths.push_back(depth);
    m_labels.push_back(highest - a * depth);
    m_levels.push_back(level);
  };

  std::vector<IntVector> frontier{IntVector::Zero(n)};
  int level = 1;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), lex_less);
    const std::size_t begin = m_depths.size();
    for (const auto& d : frontier) add(d, level);
    std::vector<IntVector> next;
    std::unordered_set<IntVector, VectorHash, VectorEqual> seen;
    for (std::size_t idx = begin; idx < m_depths.size(); ++idx) {
      const IntVector depth = m_depths[idx];
      const IntVector& lab = m_labels[idx];
      for (int j = 0; j < n; ++j) {
        int p = 0;
        IntVector up = depth;
        while (up(j) > 0) {
          up(j) -= 1;
          if (!m_index.contains(up)) break;
          ++p;
        }
        if (p + lab(j) >= 1) {
          IntVector down = depth;
          down(j) += 1;
          if (seen.insert(down).second) next.push_back(std::move(down));
        }
      }
    }
    frontier = std::move(next);
    ++level;
  }
}

std::optional<std::size_t> WeightSet::find(const IntVector& depth) const {
  if (depth.size() != m_system.rank()) return std::nullopt;
  const auto it = m_index.find(depth);
  if (it == m_index.end()) return std::nullopt;
  return it->second;
}

bool WeightSet::contains_labels(const IntVector& labels) const {
  const Vector<Rational> k = root_coordinates(m_system, m_highest - labels);
  IntVector depth(k.size());
  for (Eigen::Index i = 0; i < k.size(); ++i) {
    if (k(i).denominator() != 1 || k(i).numerator() < 0) return false;
    depth(i) = static_cast<int>(k(i).numerator());
  }
  return contains(depth);
}

} // namespace hdm
