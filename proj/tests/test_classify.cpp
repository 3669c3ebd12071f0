#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdm/classify.hpp"
#include "hdm/io.hpp"

#include <set>

using namespace hdm;

namespace {

const SystemType A3{Family::A, 3}, A4{Family::A, 4}, A5{Family::A, 5}, A6{Family::A, 6}, B2{Family::B, 2},
    B3{Family::B, 3}, B4{Family::B, 4}, B5{Family::B, 5}, C3{Family::C, 3}, C4{Family::C, 4}, D4{Family::D, 4},
    D5{Family::D, 5}, D6{Family::D, 6}, E6{Family::E, 6}, F4{Family::F, 4}, G2{Family::G, 2};

std::set<std::pair<SystemType, SystemType>> found_pairs(const std::vector<ClassificationEntry>& entries) {
  std::set<std::pair<SystemType, SystemType>> out;
  for (const auto& e : entries)
    if (!e.identity_pair && e.status == Status::Found) out.insert({e.source, e.target});
  return out;
}

// One full rank-8 run shared by the tests below.
const std::vector<ClassificationEntry>& rank8() {
  static const auto entries = classify_all(8);
  return entries;
}

} // namespace

TEST_CASE("classify_pair examples") {
  DiagramCache cache;
  SUBCASE("B3 onto G2 merges the two chain ends") {
    const auto e = classify_pair(B3, G2, cache);
    CHECK(e.status == Status::Found);
    REQUIRE(e.labelings.size() == 1);
    CHECK(e.labelings.front().str() == "[1,2,1]");
    CHECK(e.witnesses.size() == 2);
  }
  SUBCASE("D4 onto B3 has two labeling classes") {
    const auto e = classify_pair(D4, B3, cache);
    CHECK(e.status == Status::Found);
    CHECK(e.labelings.size() == 3);
    CHECK(e.classes.size() == 2);
  }
  SUBCASE("C4 onto anything smaller is empty") {
    for (const auto& t : admissible_types(4)) {
      if (t == C4) continue;
      CAPTURE(t.name());
      const auto e = classify_pair(C4, t, cache);
      CHECK(e.status == Status::Empty);
      CHECK(e.witnesses.empty());
    }
  }
}

TEST_CASE("classify_all range") {
  CHECK_THROWS_AS(classify_all(1), Error);
  CHECK_THROWS_AS(classify_all(9), Error);
  const auto entries = classify_all(2);
  // A1, A2, B2, G2: pairs with rank(target) <= rank(source)
  CHECK(entries.size() == 1 + 3 * 4);
}

TEST_CASE("found pairs by rank") {
  using P = std::pair<SystemType, SystemType>;
  const std::set<P> four{{A3, B2}, {A4, B2}, {B3, G2}, {D4, B3}, {D4, G2}};
  CHECK(found_pairs(classify_all(4)) == four);
  std::set<P> six = four;
  for (const auto& p : std::vector<P>{{A5, C3}, {A6, B3}, {A6, G2}, {D5, B4}, {D6, B5}, {E6, F4}}) six.insert(p);
  CHECK(found_pairs(classify_all(6)) == six);
  for (const auto& p : found_pairs(rank8())) {
    CHECK_FALSE((p.first.family == Family::E && p.first.rank > 6));
    CHECK(p.first.family != Family::C);
  }
}

TEST_CASE("the rank 8 run matches the built-in table") {
  const auto report = verify_against_expected(rank8(), expected_pairs(expected_table(), 8));
  INFO(format_report(report));
  CHECK(report.ok());
  CHECK(report.matched.size() == 15);
}

TEST_CASE("witnesses revalidate") {
  std::size_t count = 0;
  for (const auto& e : rank8()) {
    std::size_t extremal = 0;
    for (const auto& t : admissible_types(8))
      if (t == e.source) extremal = RootSystem(t).extremal_nodes().size();
    CHECK(e.witnesses.size() == e.labelings.size() * extremal);
    for (const auto& w : e.witnesses) {
      ++count;
      CHECK(w.map.surjective);
      CHECK(w.map.labeling == w.labeling);
      const auto problem = check_diagram_map(w.map);
      CHECK_MESSAGE(!problem, e.source.name(), " -> ", e.target.name(), ": ", problem.value_or(""));
    }
  }
  CHECK(count > 0);
}

TEST_CASE("identity pairs return the diagram automorphisms") {
  for (const auto& e : rank8()) {
    if (!e.identity_pair) continue;
    CAPTURE(e.source.name());
    std::set<std::vector<int>> got, want;
    for (const auto& f : e.labelings) got.insert(f.image);
    for (const auto& p : diagram_automorphisms(RootSystem(e.source))) want.insert(p);
    CHECK(got == want);
  }
}

TEST_CASE("D(n) onto B(n-1) identifies the fork") {
  for (int n = 5; n <= 8; ++n) {
    for (const auto& e : rank8()) {
      if (!(e.source == SystemType{Family::D, n} && e.target == SystemType{Family::B, n - 1})) continue;
      REQUIRE(e.labelings.size() == 1);
      std::vector<int> want(n);
      for (int i = 0; i < n - 1; ++i) want[i] = i;
      want[n - 1] = n - 2;
      CHECK(e.labelings.front().image == want);
    }
  }
}

TEST_CASE("dropping the extremal constraint only adds labelings") {
  const auto with = classify_all(4);
  const auto without = classify_all(4, ClassifyOptions{false, 0});
  REQUIRE(with.size() == without.size());
  for (std::size_t i = 0; i < with.size(); ++i) {
    REQUIRE(with[i].source == without[i].source);
    REQUIRE(with[i].target == without[i].target);
    for (const auto& f : with[i].labelings)
      CHECK(std::find(without[i].labelings.begin(), without[i].labelings.end(), f) != without[i].labelings.end());
  }
}

TEST_CASE("serialized output is deterministic across runs and thread counts") {
  const ClassificationOutput out{6, true, true, true};
  const std::string one = dump(classification_to_json(classify_all(6, ClassifyOptions{true, 1}), out));
  const std::string again = dump(classification_to_json(classify_all(6, ClassifyOptions{true, 1}), out));
  const std::string four = dump(classification_to_json(classify_all(6, ClassifyOptions{true, 4}), out));
  CHECK(one == again);
  CHECK(one == four);
  CHECK(classification_to_text(classify_all(6, ClassifyOptions{true, 3}), out) ==
        classification_to_text(classify_all(6, ClassifyOptions{true, 1}), out));
}

TEST_CASE("verify diff mechanics") {
  SUBCASE("empty against empty") {
    const auto r = verify_against_expected({}, {});
    CHECK(r.ok());
    CHECK(r.matched.empty());
  }
  const auto entries = classify_all(4);
  const auto expected = expected_pairs(expected_table(), 4);
  REQUIRE(expected.size() == 5);
  SUBCASE("a deleted entry is missing") {
    auto fewer = entries;
    std::erase_if(fewer, [](const auto& e) { return e.source == D4 && e.target == G2; });
    const auto r = verify_against_expected(fewer, expected);
    CHECK_FALSE(r.ok());
    REQUIRE(r.missing.size() == 1);
    CHECK(r.missing.front().target == G2);
    CHECK(r.unexpected.empty());
  }
  SUBCASE("a deleted row is unexpected") {
    auto rows = expected;
    std::erase_if(rows, [](const auto& p) { return p.source == B3; });
    const auto r = verify_against_expected(entries, rows);
    REQUIRE(r.unexpected.size() == 1);
    CHECK(r.unexpected.front().source == B3);
    CHECK(r.missing.empty());
  }
  SUBCASE("a wrong class count is both") {
    auto rows = expected;
    for (auto& p : rows)
      if (p.source == D4 && p.target == B3) p.classes = 1;
    const auto r = verify_against_expected(entries, rows);
    CHECK(r.missing.size() == 1);
    CHECK(r.unexpected.size() == 1);
    CHECK(format_report(r).find("- missing") != std::string::npos);
  }
  SUBCASE("a lost identity labeling is reported") {
    auto broken = entries;
    for (auto& e : broken)
      if (e.identity_pair && e.source == A3) e.labelings.clear();
    const auto r = verify_against_expected(broken, expected);
    CHECK(r.identity_failures.size() == 1);
    CHECK_FALSE(r.ok());
  }
}

TEST_CASE("the built-in table") {
  const auto& table = expected_table();
  CHECK(table.size() == 7);
  CHECK(expected_pairs(table, 8).size() == 15);
  CHECK(expected_pairs(table, 4).size() == 5);
  for (const auto& p : expected_pairs(table, 8)) {
    CHECK(p.source.admissible());
    CHECK(p.target.admissible());
    for (const auto& fib : p.fibers) {
      CHECK(static_cast<int>(fib.size()) == p.target.rank);
      int total = 0;
      for (int x : fib) total += x;
      CHECK(total == p.source.rank);
    }
  }
}
