#include "hdm/classify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace hdm {

ClassificationEntry classify_pair(SystemType src, SystemType tgt, DiagramCache& cache, const ClassifyOptions& opts) {
  ClassificationEntry e;
  e.source = src;
  e.target = tgt;
  e.identity_pair = src == tgt;
  SearchResult r = find_surjective_labelings(src, tgt, opts.extremal_constraint, cache);
  e.labelings = std::move(r.labelings);
  e.certificate = std::move(r.rejections);
  e.branches_visited = r.branches_visited;
  e.status = e.labelings.empty() ? Status::Empty : Status::Found;
  e.classes = labeling_classes(e.labelings);
  const auto rs = cache.system(src);
  for (const auto& f : e.labelings)
    for (int a : rs->extremal_nodes()) {
      auto m = induce_map(f, cache.fundamental(src, a), cache.fundamental(tgt, f.image[a]));
      if (!m || !m->surjective) throw std::logic_error("search returned a labeling without a surjective witness");
      e.witnesses.push_back({f, a, std::move(*m)});
    }
  return e;
}

std::vector<ClassificationEntry> classify_all(int max_rank, const ClassifyOptions& opts) {
  DiagramCache cache;
  return classify_all(max_rank, cache, opts);
}

std::vector<ClassificationEntry> classify_all(int max_rank, DiagramCache& cache, const ClassifyOptions& opts) {
  if (max_rank < kMinClassifyRank || max_rank > kMaxClassifyRank)
    throw Error("max rank " + std::to_string(max_rank) + " outside [" + std::to_string(kMinClassifyRank) + ", " +
                std::to_string(kMaxClassifyRank) + "]");
  std::vector<std::pair<SystemType, SystemType>> pairs;
  const auto types = admissible_types(max_rank);
  for (const auto& s : types)
    for (const auto& t : types)
      if (t.rank <= s.rank) pairs.emplace_back(s, t);

  std::vector<ClassificationEntry> out(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++)
      out[i] = classify_pair(pairs[i].first, pairs[i].second, cache, opts);
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(pairs.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  return out;
}

// ------------------------------------------------------------ the table

namespace {

SystemType sys(Family f, int n) { return {f, n}; }

std::vector<int> repeat(int value, int count) { return std::vector<int>(count, value); }

ExpectedTable build_table() {
  ExpectedTable t;

  ExpectedRow a_even{"A(2n)", "B(n), all n", "i and 2n+1-i identified", {}};
  for (int n = 2; 2 * n <= kMaxClassifyRank; ++n)
    a_even.instances.push_back({sys(Family::A, 2 * n), sys(Family::B, n), {repeat(2, n)}, 1, "A(2n) -> B(n)"});
  t.push_back(a_even);

  t.push_back({"A(2n)", "G2 if n = 3", "1,3,4,6 -> short; 2,5 -> long",
               {{sys(Family::A, 6), sys(Family::G, 2), {{4, 2}}, 1, "A6 -> G2"}}});

  ExpectedRow a_odd{"A(2n-1)", "C(n)", "i and 2n-i identified", {}};
  a_odd.instances.push_back({sys(Family::A, 3), sys(Family::B, 2), {{1, 2}}, 1, "A(2n-1) -> C(n), n = 2 as B2"});
  for (int n = 3; 2 * n - 1 <= kMaxClassifyRank; ++n) {
    std::vector<int> fib = repeat(2, n);
    fib.back() = 1;
    a_odd.instances.push_back({sys(Family::A, 2 * n - 1), sys(Family::C, n), {fib}, 1, "A(2n-1) -> C(n)"});
  }
  t.push_back(a_odd);

  t.push_back({"B3", "G2", "1 and 3 identified", {{sys(Family::B, 3), sys(Family::G, 2), {{2, 1}}, 1, "B3 -> G2"}}});

  ExpectedRow d_row{"D(n)", "B(n-1), all n; B3 twice if n = 4", "the two fork nodes identified", {}};
  d_row.instances.push_back(
      {sys(Family::D, 4), sys(Family::B, 3), {{1, 1, 2}, {1, 1, 2}, {1, 1, 2}}, 2, "D(n) -> B(n-1), n = 4"});
  for (int n = 5; n <= kMaxClassifyRank; ++n) {
    std::vector<int> fib = repeat(1, n - 1);
    fib.back() = 2;
    d_row.instances.push_back({sys(Family::D, n), sys(Family::B, n - 1), {fib}, 1, "D(n) -> B(n-1)"});
  }
  t.push_back(d_row);

  t.push_back({"D4", "G2", "1, 3, 4 identified", {{sys(Family::D, 4), sys(Family::G, 2), {{3, 1}}, 1, "D4 -> G2"}}});

  t.push_back({"E6", "F4", "1~6 and 3~5 identified",
               {{sys(Family::E, 6), sys(Family::F, 4), {{1, 1, 2, 2}}, 1, "E6 -> F4"}}});
  return t;
}

std::string pair_text(const ExpectedPair& p) {
  std::ostringstream os;
  os << p.source.name() << " -> " << p.target.name() << " (" << p.fibers.size() << " labeling"
     << (p.fibers.size() == 1 ? "" : "s") << ", " << p.classes << " class" << (p.classes == 1 ? "" : "es")
     << ", fibers";
  for (const auto& f : p.fibers) {
    os << " [";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "]";
  }
  os << ")";
  if (!p.row.empty()) os << "  row: " << p.row;
  return os.str();
}

} // namespace

const ExpectedTable& expected_table() {
  static const ExpectedTable table = build_table();
  return table;
}

std::vector<ExpectedPair> expected_pairs(const ExpectedTable& table, int max_rank) {
  std::vector<ExpectedPair> out;
  for (const auto& row : table)
    for (const auto& p : row.instances)
      if (p.source.rank <= max_rank) out.push_back(p);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return std::tie(a.source, a.target) < std::tie(b.source, b.target); });
  return out;
}

ExpectedPair observed_pair(const ClassificationEntry& e) {
  ExpectedPair p{e.source, e.target, {}, static_cast<int>(e.classes.size()), ""};
  for (const auto& f : e.labelings) p.fibers.push_back(f.fiber_sizes());
  std::sort(p.fibers.begin(), p.fibers.end());
  return p;
}

VerificationReport verify_against_expected(const std::vector<ClassificationEntry>& entries,
                                           const std::vector<ExpectedPair>& expected) {
  VerificationReport r;
  std::vector<ExpectedPair> observed;
  for (const auto& e : entries) {
    if (e.identity_pair) {
      const Labeling id = Labeling::identity(e.source);
      if (std::find(e.labelings.begin(), e.labelings.end(), id) == e.labelings.end())
        r.identity_failures.push_back(e.source.name() + " -> " + e.source.name());
      continue;
    }
    if (e.status == Status::Found) observed.push_back(observed_pair(e));
  }
  std::vector<bool> used(observed.size(), false);
  for (const auto& want : expected) {
    bool hit = false;
    for (std::size_t i = 0; i < observed.size() && !hit; ++i)
      if (!used[i] && observed[i] == want) {
        used[i] = hit = true;
        r.matched.push_back(want);
      }
    if (!hit) r.missing.push_back(want);
  }
  for (std::size_t i = 0; i < observed.size(); ++i)
    if (!used[i]) r.unexpected.push_back(observed[i]);
  return r;
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream os;
  os << "matched " << r.matched.size() << ", missing " << r.missing.size() << ", unexpected " << r.unexpected.size()
     << ", identity failures " << r.identity_failures.size() << "\n";
  for (const auto& p : r.matched) os << "  = " << pair_text(p) << "\n";
  for (const auto& p : r.missing) os << "  - missing    " << pair_text(p) << "\n";
  for (const auto& p : r.unexpected) os << "  + unexpected " << pair_text(p) << "\n";
  for (const auto& s : r.identity_failures) os << "  ! identity labeling not found for " << s << "\n";
  return os.str();
}

} // namespace hdm
