#ifndef HDM_IO_HPP
#define HDM_IO_HPP

#include "hdm/classify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hdm {

inline constexpr int kSchemaVersion = 1;

/// Malformed command-line token; what() names the token.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Well-formed weight that is not dominant (or is zero).
class WeightError : public Error {
public:
  using Error::Error;
};

/// A diagram requested on the command line: system token plus weight token.
struct DiagramSpec {
  SystemType system;
  IntVector highest;
};

/// Resolves a node token to a 0-based index. Accepts 1-based Bourbaki numbers
/// and the aliases:
///   B, C, F4, G2: "long-end", "short-end" (F4, G2 also "long", "short")
///   D(n): "arm" = 1, "fork" = n-1, "fork2" = n
///   E(n): "arm" = 1, "fork" = 2, "tail" = n
int resolve_node(SystemType t, std::string_view token);

/// Parses "G2" + "fund:short" or "A3" + "[1,0,0]". Throws ParseError for
/// malformed tokens and WeightError for non-dominant or zero weights.
DiagramSpec parse_diagram_spec(std::string_view system, std::string_view weight);

nlohmann::json system_to_json(SystemType t);
SystemType system_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const IntVector& v);
IntVector vector_from_json(const nlohmann::json& j);
/// Labeling as an array of 1-based target nodes indexed by source node.
nlohmann::json labeling_to_json(const Labeling& f);

nlohmann::json diagram_to_json(const HasseDiagram& d);
HasseDiagram diagram_from_json(const nlohmann::json& j);
std::string diagram_to_text(const HasseDiagram& d);

nlohmann::json maps_to_json(const HasseDiagram& src, const HasseDiagram& tgt, const std::vector<MapCandidate>& maps);
std::string maps_to_text(const std::vector<MapCandidate>& maps);

struct ClassificationOutput {
  int max_rank = 8;
  bool extremal_constraint = true;
  bool include_identity = false;
  bool witnesses = false;
};

nlohmann::json classification_to_json(const std::vector<ClassificationEntry>& entries,
                                      const ClassificationOutput& opts);
std::string classification_to_text(const std::vector<ClassificationEntry>& entries,
                                   const ClassificationOutput& opts);

nlohmann::json expected_to_json(const std::vector<ExpectedPair>& pairs);
std::vector<ExpectedPair> expected_from_json(const nlohmann::json& j);

/// Canonical rendering used for every JSON artifact: 2-space indent,
/// trailing newline.
std::string dump(const nlohmann::json& j);

} // namespace hdm

#endif // HDM_IO_HPP
