#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdm/io.hpp"

using namespace hdm;
using nlohmann::json;

namespace {

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

int node(const char* system, const char* token) { return resolve_node(SystemType::parse(system), token); }

} // namespace

TEST_CASE("node tokens") {
  CHECK(node("A3", "1") == 0);
  CHECK(node("A3", "3") == 2);
  CHECK(node("G2", "short") == 0);
  CHECK(node("G2", "long") == 1);
  CHECK(node("G2", "short-end") == 0);
  CHECK(node("B4", "long-end") == 0);
  CHECK(node("B4", "short-end") == 3);
  CHECK(node("C4", "long-end") == 3);
  CHECK(node("C4", "short-end") == 0);
  CHECK(node("F4", "long") == 0);
  CHECK(node("F4", "short") == 3);
  CHECK(node("D5", "arm") == 0);
  CHECK(node("D5", "fork") == 3);
  CHECK(node("D5", "fork2") == 4);
  CHECK(node("E7", "arm") == 0);
  CHECK(node("E7", "fork") == 1);
  CHECK(node("E7", "tail") == 6);
  CHECK_THROWS_AS(node("A3", "0"), ParseError);
  CHECK_THROWS_AS(node("A3", "4"), ParseError);
  CHECK_THROWS_AS(node("A3", "fork"), ParseError);
  CHECK_THROWS_AS(node("A3", "x1"), ParseError);
  CHECK_THROWS_AS(node("A3", ""), ParseError);
}

TEST_CASE("diagram specs") {
  CHECK(parse_diagram_spec("G2", "fund:short").highest == vec({1, 0}));
  CHECK(parse_diagram_spec("A3", "[0,1,0]").highest == vec({0, 1, 0}));
  CHECK(parse_diagram_spec("A3", "[ 2, 0 ,1 ]").highest == vec({2, 0, 1}));
  CHECK(parse_diagram_spec("E6", "fund:1").system == SystemType{Family::E, 6});
  CHECK_THROWS_AS(parse_diagram_spec("X3", "fund:1"), ParseError);
  CHECK_THROWS_AS(parse_diagram_spec("C2", "fund:1"), ParseError);
  CHECK_THROWS_AS(parse_diagram_spec("A3", "fund:9"), ParseError);
  CHECK_THROWS_AS(parse_diagram_spec("A3", "[1,0"), ParseError);
  CHECK_THROWS_AS(parse_diagram_spec("A3", "[1,0]"), ParseError);
  CHECK_THROWS_AS(parse_diagram_spec("A3", "[1,a,0]"), ParseError);
  CHECK_THROWS_AS(parse_diagram_spec("A3", "fundamental"), ParseError);
  CHECK_THROWS_AS(parse_diagram_spec("A3", "[0,-1,0]"), WeightError);
  CHECK_THROWS_AS(parse_diagram_spec("A3", "[0,0,0]"), WeightError);
}

TEST_CASE("diagram JSON round trip") {
  for (const auto& [sys, w] : {std::pair{"G2", "fund:long"}, std::pair{"D4", "fund:1"}, std::pair{"A3", "[1,0,1]"},
                               std::pair{"F4", "fund:short"}, std::pair{"E6", "fund:arm"}}) {
    const auto spec = parse_diagram_spec(sys, w);
    const auto d = build_hasse(RootSystem(spec.system), spec.highest);
    const json j = diagram_to_json(d);
    CHECK(j.at("schema") == kSchemaVersion);
    CHECK(j.at("level_count") == d.level_count());
    CHECK(j.at("vertices").size() == d.vertex_count());
    CHECK(j.at("edges").size() == d.edges().size());
    const auto back = diagram_from_json(j);
    CHECK(back == d);
    CHECK(dump(diagram_to_json(back)) == dump(j));
    CHECK(dump(json::parse(dump(j))) == dump(j));
  }
}

TEST_CASE("tampered diagram JSON is rejected") {
  const auto d = build_hasse(RootSystem({Family::B, 3}), vec({0, 0, 1}));
  const json good = diagram_to_json(d);
  auto bad_label = good;
  bad_label["edges"][0]["label"] = 1;
  CHECK_THROWS_AS(diagram_from_json(bad_label), Error);
  auto missing_edge = good;
  missing_edge["edges"].erase(missing_edge["edges"].size() - 1);
  CHECK_THROWS_AS(diagram_from_json(missing_edge), Error);
  auto wrong_labels = good;
  wrong_labels["vertices"][1]["labels"] = json::array({9, 9, 9});
  CHECK_THROWS_AS(diagram_from_json(wrong_labels), Error);
  auto schema = good;
  schema["schema"] = 99;
  CHECK_THROWS_AS(diagram_from_json(schema), Error);
}

TEST_CASE("text rendering") {
  const auto d = build_hasse(RootSystem({Family::G, 2}), vec({1, 0}));
  const std::string text = diagram_to_text(d);
  CHECK(text.find("G2") != std::string::npos);
  CHECK(text == diagram_to_text(build_hasse(RootSystem({Family::G, 2}), vec({1, 0}))));
}

TEST_CASE("expected table JSON round trip") {
  const auto pairs = expected_pairs(expected_table(), 8);
  const auto back = expected_from_json(expected_to_json(pairs));
  CHECK(back == pairs);
  CHECK_THROWS(expected_from_json(json{{"schema", 1}}));
}

TEST_CASE("classification JSON layout") {
  const auto entries = classify_all(3);
  const json plain = classification_to_json(entries, {3, true, false, false});
  CHECK(plain.at("max_rank") == 3);
  CHECK(!plain.contains("identities"));
  CHECK(!plain.at("entries").empty());
  for (const auto& e : plain.at("entries")) {
    CHECK(e.contains("certificate"));
    CHECK(!e.at("certificate").contains("rejections"));
    CHECK(!e.contains("witnesses"));
  }
  const json full = classification_to_json(entries, {3, true, true, true});
  CHECK(!full.at("identities").empty());
  std::vector<json> found;
  for (const auto& e : full.at("entries")) {
    CHECK(e.at("certificate").contains("rejections"));
    if (e.at("status") == "found") {
      found.push_back(e.at("labelings"));
      CHECK(!e.at("witnesses").empty());
    }
  }
  // A3 -> B2 and B3 -> G2
  CHECK(found == std::vector<json>{json::array({json::array({2, 1, 2})}), json::array({json::array({1, 2, 1})})});
}

TEST_CASE("map listing") {
  DiagramCache cache;
  const auto src = cache.fundamental({Family::A, 6}, 0);
  const auto tgt = cache.fundamental({Family::G, 2}, 0);
  const auto maps = find_maps(src, tgt);
  const json j = maps_to_json(*src, *tgt, maps);
  bool chain = false;
  for (const auto& m : j.at("maps"))
    chain = chain || (m.at("labeling") == json::array({1, 2, 1, 1, 2, 1}) && m.at("surjective"));
  CHECK(chain);
  CHECK(maps_to_text(maps).find("[1,2,1,1,2,1]") != std::string::npos);
  CHECK(maps_to_text({}).empty());
}
