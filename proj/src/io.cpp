#include "hdm/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace hdm {

using nlohmann::json;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Alias table: (family, token) -> 1-based node, with n = rank.
std::optional<int> alias_node(SystemType t, const std::string& token) {
  const int n = t.rank;
  switch (t.family) {
  case Family::B:
    if (token == "long-end") return 1;
    if (token == "short-end") return n;
    break;
  case Family::C:
    if (token == "long-end") return n;
    if (token == "short-end") return 1;
    break;
  case Family::F:
    if (token == "long-end" || token == "long") return 1;
    if (token == "short-end" || token == "short") return 4;
    break;
  case Family::G:
    if (token == "short-end" || token == "short") return 1;
    if (token == "long-end" || token == "long") return 2;
    break;
  case Family::D:
    if (token == "arm") return 1;
    if (token == "fork") return n - 1;
    if (token == "fork2") return n;
    break;
  case Family::E:
    if (token == "arm") return 1;
    if (token == "fork") return 2;
    if (token == "tail") return n;
    break;
  case Family::A: break;
  }
  return std::nullopt;
}

json reasons_summary(const std::vector<Rejection>& rejections) {
  std::map<std::string, int> counts;
  for (const auto& r : rejections) ++counts[reason_name(r.reason)];
  json j = json::object();
  for (const auto& [k, v] : counts) j[k] = v;
  return j;
}

json entry_to_json(const ClassificationEntry& e, bool witnesses) {
  json j;
  j["source"] = system_to_json(e.source);
  j["target"] = system_to_json(e.target);
  j["status"] = e.status == Status::Found ? "found" : "empty";
  j["labelings"] = json::array();
  for (const auto& f : e.labelings) j["labelings"].push_back(labeling_to_json(f));
  j["classes"] = json::array();
  for (const auto& c : e.classes) {
    json cls = json::array();
    for (const auto& f : c) cls.push_back(labeling_to_json(f));
    j["classes"].push_back(cls);
  }
  json cert;
  cert["branches_visited"] = e.branches_visited;
  cert["rejections_by_reason"] = reasons_summary(e.certificate);
  if (witnesses) {
    cert["rejections"] = json::array();
    for (const auto& r : e.certificate) {
      json prefix = json::array();
      for (int v : r.prefix) prefix.push_back(v < 0 ? json(nullptr) : json(v + 1));
      cert["rejections"].push_back({{"prefix", prefix},
                                    {"reason", reason_name(r.reason)},
                                    {"node", r.node < 0 ? json(nullptr) : json(r.node + 1)},
                                    {"detail", r.detail}});
    }
    j["witnesses"] = json::array();
    for (const auto& w : e.witnesses) {
      json vm = json::array();
      for (auto v : w.map.vertex_map) vm.push_back(v);
      j["witnesses"].push_back({{"labeling", labeling_to_json(w.labeling)},
                                {"extremal_node", w.extremal_node + 1},
                                {"target_node", w.labeling.image[w.extremal_node] + 1},
                                {"source_vertices", w.map.source->vertex_count()},
                                {"target_vertices", w.map.target->vertex_count()},
                                {"levels", w.map.source->level_count()},
                                {"vertex_map", vm}});
    }
  }
  j["certificate"] = cert;
  return j;
}

} // namespace

int resolve_node(SystemType t, std::string_view token) {
  if (const auto n = parse_int(token)) {
    if (*n < 1 || *n > t.rank)
      throw ParseError("node '" + std::string(token) + "' out of range for " + t.name());
    return *n - 1;
  }
  if (const auto n = alias_node(t, lower(token))) return *n - 1;
  throw ParseError("unknown node '" + std::string(token) + "' for " + t.name());
}

DiagramSpec parse_diagram_spec(std::string_view system, std::string_view weight) {
  DiagramSpec spec;
  try {
    spec.system = SystemType::parse(system);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  const int n = spec.system.rank;
  if (weight.starts_with("fund:")) {
    const int node = resolve_node(spec.system, weight.substr(5));
    spec.highest = IntVector::Zero(n);
    spec.highest(node) = 1;
    return spec;
  }
  if (weight.size() < 2 || weight.front() != '[' || weight.back() != ']')
    throw ParseError("malformed weight '" + std::string(weight) + "'");
  std::vector<int> values;
  std::string_view body = weight.substr(1, weight.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    const auto v = parse_int(body.substr(0, comma));
    if (!v) throw ParseError("malformed weight '" + std::string(weight) + "'");
    values.push_back(*v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (static_cast<int>(values.size()) != n)
    throw ParseError("weight '" + std::string(weight) + "' needs " + std::to_string(n) + " labels for " +
                     spec.system.name());
  spec.highest = Eigen::Map<const IntVector>(values.data(), n);
  if ((spec.highest.array() < 0).any()) throw WeightError("weight " + std::string(weight) + " is not dominant");
  if (spec.highest.isZero()) throw WeightError("weight " + std::string(weight) + " is zero");
  return spec;
}

json system_to_json(SystemType t) { return {{"family", std::string(1, family_letter(t.family))}, {"rank", t.rank}}; }

SystemType system_from_json(const json& j) {
  return SystemType::parse(j.at("family").get<std::string>() + std::to_string(j.at("rank").get<int>()));
}

json vector_to_json(const IntVector& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

IntVector vector_from_json(const json& j) {
  const auto values = j.get<std::vector<int>>();
  return Eigen::Map<const IntVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

json labeling_to_json(const Labeling& f) {
  json out = json::array();
  for (int t : f.image) out.push_back(t + 1);
  return out;
}

json diagram_to_json(const HasseDiagram& d) {
  json j;
  j["schema"] = kSchemaVersion;
  j["system"] = system_to_json(d.system().type());
  j["highest"] = vector_to_json(d.highest());
  j["level_count"] = d.level_count();
  j["vertices"] = json::array();
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    j["vertices"].push_back({{"id", v},
                             {"depth", vector_to_json(d.depth(v))},
                             {"labels", vector_to_json(d.labels(v))},
                             {"level", d.level(v)}});
  j["edges"] = json::array();
  for (const auto& e : d.edges()) j["edges"].push_back({{"from", e.upper}, {"to", e.lower}, {"label", e.label + 1}});
  return j;
}

HasseDiagram diagram_from_json(const json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) throw Error("unsupported schema version");
  const RootSystem rs(system_from_json(j.at("system")));
  const IntVector highest = vector_from_json(j.at("highest"));
  std::vector<IntVector> depths;
  for (const auto& v : j.at("vertices")) {
    if (v.at("id").get<std::size_t>() != depths.size()) throw Error("vertex ids must be consecutive");
    depths.push_back(vector_from_json(v.at("depth")));
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(), e.at("label").get<int>() - 1});
  HasseDiagram d(rs, highest, std::move(depths), std::move(edges));
  std::size_t v = 0;
  for (const auto& jv : j.at("vertices")) {
    if (vector_from_json(jv.at("labels")) != d.labels(v) || jv.at("level").get<int>() != d.level(v))
      throw Error("vertex " + std::to_string(v) + " labels or level inconsistent with its depth");
    ++v;
  }
  return d;
}

std::string diagram_to_text(const HasseDiagram& d) {
  std::ostringstream os;
  os << d.system().type().name() << " highest " << format_vector(d.highest()) << ": " << d.vertex_count()
     << " vertices, " << d.edges().size() << " edges, " << d.level_count() << " levels\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    os << "  level " << d.level(v) << "  " << vertex_name(d.depth(v)) << "  labels " << format_vector(d.labels(v));
    if (!d.down_edges(v).empty()) {
      os << "  down:";
      for (auto e : d.down_edges(v)) os << ' ' << d.edges()[e].label + 1;
    }
    os << '\n';
  }
  return os.str();
}

json maps_to_json(const HasseDiagram& src, const HasseDiagram& tgt, const std::vector<MapCandidate>& maps) {
  json j;
  j["schema"] = kSchemaVersion;
  j["source"] = {{"system", system_to_json(src.system().type())}, {"highest", vector_to_json(src.highest())}};
  j["target"] = {{"system", system_to_json(tgt.system().type())}, {"highest", vector_to_json(tgt.highest())}};
  j["maps"] = json::array();
  for (const auto& m : maps) j["maps"].push_back({{"labeling", labeling_to_json(m.labeling)}, {"surjective", m.surjective}});
  return j;
}

std::string maps_to_text(const std::vector<MapCandidate>& maps) {
  std::ostringstream os;
  for (const auto& m : maps) os << m.labeling.str() << (m.surjective ? "  surjective" : "  not surjective") << '\n';
  return os.str();
}

json classification_to_json(const std::vector<ClassificationEntry>& entries, const ClassificationOutput& opts) {
  json j;
  j["schema"] = kSchemaVersion;
  j["max_rank"] = opts.max_rank;
  j["extremal_constraint"] = opts.extremal_constraint;
  j["entries"] = json::array();
  j["identities"] = json::array();
  for (const auto& e : entries) {
    if (!e.identity_pair) {
      j["entries"].push_back(entry_to_json(e, opts.witnesses));
    } else if (opts.include_identity) {
      j["identities"].push_back(entry_to_json(e, opts.witnesses));
    }
  }
  if (!opts.include_identity) j.erase("identities");
  return j;
}

std::string classification_to_text(const std::vector<ClassificationEntry>& entries, const ClassificationOutput& opts) {
  std::ostringstream os;
  std::size_t found = 0;
  for (const auto& e : entries) {
    if (e.identity_pair && !opts.include_identity) continue;
    if (!e.identity_pair && e.status == Status::Empty) continue;
    ++found;
    os << (e.identity_pair ? "identity " : "") << e.source.name() << " -> " << e.target.name() << ":";
    for (const auto& f : e.labelings) os << ' ' << f.str();
    os << "  (" << e.classes.size() << " class" << (e.classes.size() == 1 ? "" : "es") << ")\n";
  }
  os << found << " pair(s) with surjective labelings among " << entries.size() << " searched (max rank "
     << opts.max_rank << ")\n";
  return os.str();
}

json expected_to_json(const std::vector<ExpectedPair>& pairs) {
  json j;
  j["schema"] = kSchemaVersion;
  j["pairs"] = json::array();
  for (const auto& p : pairs)
    j["pairs"].push_back({{"source", system_to_json(p.source)},
                          {"target", system_to_json(p.target)},
                          {"fibers", p.fibers},
                          {"classes", p.classes},
                          {"row", p.row}});
  return j;
}

std::vector<ExpectedPair> expected_from_json(const json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) throw Error("unsupported schema version");
  std::vector<ExpectedPair> out;
  for (const auto& p : j.at("pairs")) {
    ExpectedPair e{system_from_json(p.at("source")), system_from_json(p.at("target")),
                   p.at("fibers").get<std::vector<std::vector<int>>>(), p.at("classes").get<int>(),
                   p.value("row", std::string{})};
    std::sort(e.fibers.begin(), e.fibers.end());
    out.push_back(std::move(e));
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace hdm
