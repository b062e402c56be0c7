#include "demorgan/site_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace demorgan {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const json& field(const json& obj, const char* key, const std::string& context) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(context + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string string_at(const json& value, const std::string& context) {
  if (!value.is_string()) throw ParseError(context + ": expected a string, got " + value.dump());
  return value.get<std::string>();
}

std::string string_field(const json& obj, const char* key, const std::string& context) {
  return string_at(field(obj, key, context), context + "." + key);
}

const json& array_at(const json& value, const std::string& context) {
  if (!value.is_array()) throw ParseError(context + ": expected an array");
  return value;
}

bool has_category(const json& doc) { return doc.is_object() && doc.contains("objects"); }

RawCategory raw_category(const json& doc) {
  if (!doc.is_object()) throw ParseError("site document must be a JSON object");
  if (doc.contains("version") && doc.at("version") != 1) {
    throw ParseError("unsupported site document version " + doc.at("version").dump());
  }
  RawCategory raw;
  for (const auto& o : array_at(field(doc, "objects", "site"), "objects")) raw.objects.push_back(string_at(o, "objects"));
  if (doc.contains("arrows")) {
    for (const auto& a : array_at(doc.at("arrows"), "arrows")) {
      raw.arrows.push_back({string_field(a, "name", "arrow"), string_field(a, "dom", "arrow"),
                            string_field(a, "cod", "arrow")});
    }
  }
  if (doc.contains("compose")) {
    for (const auto& c : array_at(doc.at("compose"), "compose")) {
      raw.compose.push_back({string_field(c, "first", "compose"), string_field(c, "then", "compose"),
                             string_field(c, "equals", "compose")});
    }
  }
  if (doc.contains("identities")) {
    const auto& ids = doc.at("identities");
    if (!ids.is_object()) throw ParseError("identities: expected an object");
    for (const auto& [obj, arr] : ids.items()) raw.identities.emplace_back(obj, string_at(arr, "identities." + obj));
  }
  return raw;
}

const json* covers_of(const json& doc) {
  if (!doc.is_object()) return nullptr;
  if (doc.contains("covers")) return &doc.at("covers");
  if (doc.contains("topology")) return covers_of(doc.at("topology"));
  return nullptr;
}

std::vector<Sieve> seeds_from(const json& covers, const SieveSpace& space) {
  const auto& C = space.category();
  if (!covers.is_object()) throw ParseError("covers: expected an object keyed by object name");
  std::vector<Sieve> seeds;
  for (const auto& [obj, list] : covers.items()) {
    const auto c = C.find_object(obj);
    if (!c) throw ParseError("covers: unknown object '" + obj + "'");
    for (const auto& gens : array_at(list, "covers." + obj)) {
      ArrowSet set;
      for (const auto& g : array_at(gens, "covers." + obj)) {
        const auto name = string_at(g, "covers." + obj);
        const auto f = C.find_arrow(name);
        if (!f) throw ParseError("covers." + obj + ": unknown arrow '" + name + "'");
        set.insert(*f);
      }
      seeds.push_back(generate_sieve(C, *c, set));
    }
  }
  return seeds;
}

}  // namespace

SiteDocument parse_site(std::string_view text, std::size_t max_sieve_arrows) {
  const auto doc = parse_json(text);
  SiteDocument site{SieveSpace::build(validate_category(raw_category(doc)), max_sieve_arrows), std::nullopt,
                    std::nullopt};
  if (const auto* covers = covers_of(doc)) {
    site.cover_seeds = seeds_from(*covers, *site.space);
    site.topology = generate_topology(site.space, *site.cover_seeds);
  }
  return site;
}

SiteDocument read_site(const std::filesystem::path& path, std::size_t max_sieve_arrows) {
  return parse_site(slurp(path), max_sieve_arrows);
}

GrothendieckTopology parse_topology(std::string_view text, std::shared_ptr<const SieveSpace> space) {
  const auto doc = parse_json(text);
  if (has_category(doc) && !(validate_category(raw_category(doc)) == space->category())) {
    throw ValidationError(ErrorKind::CategoryMismatch, "topology document describes a different category");
  }
  if (const auto* covers = covers_of(doc)) {
    auto seeds = seeds_from(*covers, *space);
    return generate_topology(std::move(space), seeds);
  }
  return trivial_topology(std::move(space));
}

GrothendieckTopology read_topology(const std::filesystem::path& path, std::shared_ptr<const SieveSpace> space) {
  return parse_topology(slurp(path), std::move(space));
}

std::string write_site(const FiniteCategory& C, const GrothendieckTopology* J) {
  const auto raw = C.to_raw();
  json doc;
  doc["version"] = 1;
  doc["objects"] = raw.objects;
  doc["arrows"] = json::array();
  for (const auto& a : raw.arrows) doc["arrows"].push_back({{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}});
  doc["identities"] = json::object();
  for (const auto& [obj, arr] : raw.identities) doc["identities"][obj] = arr;
  doc["compose"] = json::array();
  for (const auto& c : raw.compose) doc["compose"].push_back({{"first", c.first}, {"then", c.then}, {"equals", c.equals}});
  if (J != nullptr) {
    json covers = json::object();
    for (auto c : C.objects()) {
      json list = json::array();
      for (const auto& S : J->covering_sieves(c)) {
        if (S.members != C.arrows_into(c)) list.push_back(arrow_names(C, S.members));
      }
      if (!list.empty()) covers[C.name(c)] = std::move(list);
    }
    doc["covers"] = std::move(covers);
  }
  return doc.dump(2) + "\n";
}

RawOrder parse_frame(std::string_view text) {
  const auto doc = parse_json(text);
  RawOrder raw;
  for (const auto& e : array_at(field(doc, "elements", "frame"), "elements")) raw.elements.push_back(string_at(e, "elements"));
  if (doc.contains("leq")) {
    for (const auto& p : array_at(doc.at("leq"), "leq")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("leq: expected a pair, got " + p.dump());
      raw.leq.emplace_back(string_at(p[0], "leq"), string_at(p[1], "leq"));
    }
  }
  for (const auto& [a, b] : raw.leq) {
    for (const auto* name : {&a, &b}) {
      if (std::find(raw.elements.begin(), raw.elements.end(), *name) == raw.elements.end()) {
        throw ParseError("leq: unknown element '" + *name + "'");
      }
    }
  }
  return raw;
}

RawOrder read_frame(const std::filesystem::path& path) { return parse_frame(slurp(path)); }

std::string write_frame(const HeytingAlgebra& H) {
  json doc;
  doc["elements"] = H.names();
  doc["leq"] = json::array();
  for (Element a = 0; a < H.size(); ++a) {
    for (Element b = 0; b < H.size(); ++b) {
      if (a != b && H.leq(a, b)) doc["leq"].push_back({H.name(a), H.name(b)});
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace demorgan
