#include "hdm/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

namespace hdm {

namespace {

std::vector<int> as_std(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

void bond(IntMatrix& m, int i, int j) {
  m(i, j) = -1;
  m(j, i) = -1;
}

// Closure under the string rule: beta + alpha_i is a root iff q > 0 where
// q = p - <beta, alpha_i> and p is the length of the alpha_i-string below beta.
std::vector<IntVector> enumerate_positive_roots(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::set<std::vector<int>> known;
  std::vector<IntVector> all;
  std::vector<IntVector> level;
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e(i) = 1;
    level.push_back(e);
    known.insert(as_std(e));
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), lex_less);
    all.insert(all.end(), level.begin(), level.end());
    std::vector<IntVector> next;
    std::set<std::vector<int>> seen_next;
    for (const auto& beta : level) {
      const IntVector lab = cartan * beta;
      for (int i = 0; i < n; ++i) {
        int p = 0;
        IntVector below = beta;
        while (true) {
          below(i) -= 1;
          if (below(i) < 0 || !known.contains(as_std(below))) break;
          ++p;
        }
        if (p - lab(i) > 0) {
          IntVector up = beta;
          up(i) += 1;
          if (seen_next.insert(as_std(up)).second) next.push_back(up);
        }
      }
    }
    for (const auto& r : next) known.insert(as_std(r));
    level = std::move(next);
  }
  return all;
}

} // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

bool SystemType::admissible() const {
  switch (family) {
  case Family::A: return rank >= 1;
  case Family::B: return rank >= 2;
  case Family::C: return rank >= 3;
  case Family::D: return rank >= 4;
  case Family::E: return rank >= 6 && rank <= 8;
  case Family::F: return rank == 4;
  case Family::G: return rank == 2;
  }
  return false;
}

std::string SystemType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

SystemType SystemType::parse(std::string_view token) {
  if (token.size() < 2) throw Error("malformed system type '" + std::string(token) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(token.front())));
  if (c < 'A' || c > 'G') throw Error("unknown family in '" + std::string(token) + "'");
  int rank = 0;
  const auto digits = token.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw Error("malformed rank in '" + std::string(token) + "'");
  SystemType t{static_cast<Family>(c - 'A'), rank};
  if (!t.admissible()) throw Error("inadmissible system type '" + std::string(token) + "'");
  return t;
}

std::vector<SystemType> admissible_types(int max_rank) {
  std::vector<SystemType> out;
  for (int f = 0; f < 7; ++f)
    for (int r = 1; r <= max_rank; ++r)
      if (SystemType t{static_cast<Family>(f), r}; t.admissible()) out.push_back(t);
  return out;
}

IntMatrix cartan_matrix(SystemType t) {
  if (!t.admissible()) throw Error("inadmissible system type " + t.name());
  const int n = t.rank;
  IntMatrix m = 2 * IntMatrix::Identity(n, n);
  switch (t.family) {
  case Family::A:
    for (int i = 0; i + 1 < n; ++i) bond(m, i, i + 1);
    break;
  case Family::B:
    for (int i = 0; i + 1 < n; ++i) bond(m, i, i + 1);
    m(n - 1, n - 2) = -2; // alpha_n short
    break;
  case Family::C:
    for (int i = 0; i + 1 < n; ++i) bond(m, i, i + 1);
    m(n - 2, n - 1) = -2; // alpha_n long
    break;
  case Family::D:
    for (int i = 0; i + 2 < n; ++i) bond(m, i, i + 1);
    bond(m, n - 3, n - 1);
    break;
  case Family::E:
    bond(m, 0, 2);
    bond(m, 1, 3);
    for (int i = 2; i + 1 < n; ++i) bond(m, i, i + 1);
    break;
  case Family::F:
    bond(m, 0, 1);
    bond(m, 1, 2);
    bond(m, 2, 3);
    m(2, 1) = -2; // alpha_3, alpha_4 short
    break;
  case Family::G:
    bond(m, 0, 1);
    m(0, 1) = -3; // alpha_1 short
    break;
  }
  return m;
}

int classical_positive_root_count(SystemType t) {
  const int n = t.rank;
  switch (t.family) {
  case Family::A: return n * (n + 1) / 2;
  case Family::B:
  case Family::C: return n * n;
  case Family::D: return n * (n - 1);
  case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  case Family::F: return 24;
  case Family::G: return 6;
  }
  return 0;
}

RootSystem::RootSystem(SystemType t) : m_type(t), m_cartan(cartan_matrix(t)) {
  const int n = t.rank;
  m_positive = enumerate_positive_roots(m_cartan);
  m_adjacency.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m_cartan(i, j) != 0) m_adjacency[i].push_back(j);
  if (n == 1) {
    m_extremal = {0};
  } else {
    for (int i = 0; i < n; ++i)
      if (m_adjacency[i].size() == 1) m_extremal.push_back(i);
  }
}

void RootSystem::check_node(int node) const {
  if (node < 0 || node >= rank())
    throw Error("node index " + std::to_string(node) + " out of range for " + m_type.name());
}

const std::vector<int>& RootSystem::neighbors(int node) const {
  check_node(node);
  return m_adjacency[node];
}

bool RootSystem::adjacent(int i, int j) const {
  check_node(i);
  check_node(j);
  return i != j && m_cartan(i, j) != 0;
}

bool RootSystem::is_extremal(int node) const {
  check_node(node);
  return std::find(m_extremal.begin(), m_extremal.end(), node) != m_extremal.end();
}

int pairing(const RootSystem& rs, const IntVector& chi_labels, int j) {
  rs.check_node(j);
  if (chi_labels.size() != rs.rank()) throw Error("weight has wrong length for " + rs.type().name());
  return chi_labels(j);
}

IntVector simple_reflection(const RootSystem& rs, int j, const IntVector& chi_labels) {
  const int c = pairing(rs, chi_labels, j);
  return chi_labels - c * rs.cartan().col(j);
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs) {
  const int n = rs.rank();
  const IntMatrix& a = rs.cartan();
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  // Assign perm[0..pos) and check every pair among assigned nodes.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      out.push_back(perm);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img]) continue;
      bool ok = true;
      for (int k = 0; k < pos && ok; ++k)
        ok = a(perm[k], img) == a(k, pos) && a(img, perm[k]) == a(pos, k);
      if (!ok) continue;
      perm[pos] = img;
      used[img] = true;
      self(self, pos + 1);
      used[img] = false;
    }
    perm[pos] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace hdm
