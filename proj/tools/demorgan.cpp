#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "demorgan/frames.hpp"
#include "demorgan/heyting.hpp"
#include "demorgan/site_io.hpp"
#include "demorgan/subobjects.hpp"
#include "demorgan/topology.hpp"

using namespace demorgan;
using nlohmann::json;

namespace {

struct Options {
  std::size_t max_sieve_arrows = kDefaultMaxSieveArrows;
  std::size_t max_enum_arrows = kDefaultMaxEnumArrows;
  bool json = false;
};

Options opts;

const char* yes_no(bool b) { return b ? "true" : "false"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

SiteDocument load_site(const std::string& path) { return read_site(path, opts.max_sieve_arrows); }

GrothendieckTopology select_topology(const SiteDocument& site, const std::string& which) {
  if (which == "file") return site.topology ? *site.topology : trivial_topology(site.space);
  if (which == "trivial") return trivial_topology(site.space);
  if (which == "dense") return dense_topology(site.space);
  if (which == "demorgan") return demorgan_topology(site.space);
  return read_topology(which, site.space);
}

json sieve_json(const FiniteCategory& C, const Sieve& R) { return arrow_names(C, R.members); }

json topology_json(const GrothendieckTopology& J) {
  const auto& C = J.category();
  json out = json::object();
  for (auto c : C.objects()) {
    json list = json::array();
    for (const auto& S : J.covering_sieves(c)) list.push_back(sieve_json(C, S));
    out[C.name(c)] = std::move(list);
  }
  return out;
}

std::string nucleus_text(const HeytingAlgebra& H, const Nucleus& j) {
  std::string out = "{";
  for (Element a = 0; a < H.size(); ++a) {
    if (a > 0) out += ", ";
    out += H.name(a) + " -> " + H.name(j(a));
  }
  return out + "}";
}

json nucleus_json(const HeytingAlgebra& H, const Nucleus& j) {
  json out = json::object();
  for (Element a = 0; a < H.size(); ++a) out[H.name(a)] = H.name(j(a));
  return out;
}

std::string element_list(const HeytingAlgebra& H, const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + H.name(xs[i]);
  return out + "}";
}

// ---- decisions -------------------------------------------------------------

enum class Property { DeMorgan, Boolean };

struct Decision {
  bool result = true;
  json witness;  // null when result is true or no witness applies
  std::vector<std::string> witness_lines;
};

Decision criterion_decision(const std::optional<CriterionWitness>& w, const char* sieve_label,
                            const char* criterion_label) {
  Decision d;
  if (!w) return d;
  d.result = false;
  const auto& C = *w->category;
  d.witness = {{"object", C.name(w->object)},
               {sieve_label, sieve_json(C, w->sieve)},
               {criterion_label, sieve_json(C, w->criterion)},
               {"covers", false}};
  d.witness_lines = {"object: " + C.name(w->object), std::string(sieve_label) + ": " + format_sieve(C, w->sieve),
                     std::string(criterion_label) + ": " + format_sieve(C, w->criterion),
                     "covers " + C.name(w->object) + ": false"};
  return d;
}

Decision oracle_decision(const GrothendieckTopology& J, Property p) {
  Decision d;
  const auto w = p == Property::DeMorgan ? oracle_demorgan_witness(J) : oracle_boolean_witness(J);
  if (!w) return d;
  d.result = false;
  const auto& C = J.category();
  const auto A = closed_sieve_algebra(J, w->object);
  const auto& H = A.algebra;
  Element e = 0;
  while (A.carrier[e] != w->element) ++e;
  const auto n = H.neg(e);
  const auto lhs = p == Property::DeMorgan ? n : e;
  const auto rhs = p == Property::DeMorgan ? H.neg(n) : n;
  const auto joined = H.join(lhs, rhs);
  d.witness = {{"object", C.name(w->object)},
               {"closed_sieves", A.carrier.size()},
               {"element", sieve_json(C, w->element)},
               {"negation", sieve_json(C, A.carrier[n])},
               {"join", sieve_json(C, A.carrier[joined])}};
  const std::string law = p == Property::DeMorgan ? "not p or not not p" : "p or not p";
  d.witness_lines = {"object: " + C.name(w->object),
                     "closed sieves: " + std::to_string(A.carrier.size()),
                     "p: " + format_sieve(C, w->element),
                     "not p: " + format_sieve(C, A.carrier[n]),
                     law + ": " + format_sieve(C, A.carrier[joined])};
  return d;
}

Decision decide(const GrothendieckTopology& J, Property p, const std::string& method) {
  if (method == "general") {
    return p == Property::DeMorgan ? criterion_decision(demorgan_witness_general(J), "closed_sieve", "criterion")
                                   : criterion_decision(boolean_witness_general(J), "closed_sieve", "criterion");
  }
  if (method == "reduced") {
    return p == Property::DeMorgan ? criterion_decision(demorgan_witness_reduced(J), "sieve", "m_sieve")
                                   : criterion_decision(boolean_witness_reduced(J), "closed_sieve", "b_sieve");
  }
  return oracle_decision(J, p);
}

int run_decision(const std::string& path, const std::string& topology, const std::string& method, Property p) {
  const auto site = load_site(path);
  const auto J = select_topology(site, topology);
  const char* property = p == Property::DeMorgan ? "de_morgan" : "boolean";

  if (method == "all") {
    json results = json::object();
    std::optional<bool> first;
    bool agree = true;
    for (const char* m : {"general", "reduced", "oracle"}) {
      const bool r = decide(J, p, m).result;
      results[m] = r;
      if (first && *first != r) agree = false;
      if (!first) first = r;
    }
    if (opts.json) {
      emit({{"property", property}, {"method", "all"}, {"result", agree ? json(*first) : json(nullptr)},
            {"methods", results}, {"agree", agree}});
    } else {
      std::cout << (agree ? yes_no(*first) : "disagreement") << "\n";
      for (const auto& [m, r] : results.items()) std::cout << m << ": " << yes_no(r.get<bool>()) << "\n";
    }
    return agree ? 0 : 1;
  }

  const auto d = decide(J, p, method);
  if (opts.json) {
    emit({{"property", property}, {"method", method}, {"result", d.result}, {"witness", d.witness}});
  } else {
    std::cout << yes_no(d.result) << "\n";
    if (!d.result) {
      std::cout << "witness:\n";
      for (const auto& line : d.witness_lines) std::cout << "  " << line << "\n";
    }
  }
  return 0;
}

// ---- site commands ----------------------------------------------------------

int cmd_validate(const std::string& path) {
  const auto site = load_site(path);
  const auto& C = site.category();
  if (opts.json) {
    json out = {{"valid", true},
                {"objects", C.object_count()},
                {"arrows", C.arrow_count()},
                {"non_identity_arrows", C.non_identity_arrow_count()}};
    if (site.topology) out["topology"] = topology_json(*site.topology);
    emit(out);
  } else {
    std::cout << "valid category: " << C.object_count() << " objects, " << C.arrow_count() << " arrows ("
              << C.non_identity_arrow_count() << " non-identity)\n";
    if (site.topology) std::cout << "topology: " << format_topology(*site.topology) << "\n";
  }
  return 0;
}

int cmd_ore(const std::string& path) {
  const auto site = load_site(path);
  const auto& C = site.category();
  std::optional<std::pair<ArrowId, ArrowId>> witness;
  for (auto f : C.arrows()) {
    for (auto g : C.arrows()) {
      if (witness || C.cod(f) != C.cod(g)) continue;
      if ((C.principal_sieve(f) & C.principal_sieve(g)).empty()) witness = {f, g};
    }
  }
  if (opts.json) {
    json out = {{"right_ore", !witness}};
    if (witness) out["cospan"] = {C.name(witness->first), C.name(witness->second)};
    emit(out);
  } else {
    std::cout << yes_no(!witness) << "\n";
    if (witness) {
      std::cout << "witness:\n  cospan " << C.name(witness->first) << ", " << C.name(witness->second)
                << " into " << C.name(C.cod(witness->first)) << " has no commuting square\n";
    }
  }
  return 0;
}

int cmd_sieves(const std::string& path, const std::string& object, const std::string& topology) {
  const auto site = load_site(path);
  const auto& C = site.category();
  const auto c = C.object(object);
  const auto J = select_topology(site, topology);
  json rows = json::array();
  for (const auto& R : site.space->sieves_on(c)) {
    rows.push_back({{"sieve", sieve_json(C, R)},
                    {"stably_nonempty", is_stably_nonempty(C, R)},
                    {"covers", J.covers(R)},
                    {"closed", is_closed(J, R)},
                    {"m_sieve", sieve_json(C, m_sieve(C, R))},
                    {"b_sieve", sieve_json(C, b_sieve(C, R))}});
  }
  if (opts.json) {
    emit({{"object", object}, {"sieves", rows}});
    return 0;
  }
  std::cout << rows.size() << " sieves on " << object << "\n";
  for (const auto& R : site.space->sieves_on(c)) {
    std::cout << "  " << format_sieve(C, R) << (is_stably_nonempty(C, R) ? " stably-nonempty" : "")
              << (J.covers(R) ? " covering" : "") << (is_closed(J, R) ? " closed" : "")
              << "  M=" << format_sieve(C, m_sieve(C, R)) << " B=" << format_sieve(C, b_sieve(C, R)) << "\n";
  }
  return 0;
}

void print_topology(const GrothendieckTopology& J, const std::string& out_path) {
  if (!out_path.empty()) write_file(out_path, write_site(J.category(), &J));
  if (opts.json) {
    emit({{"covers", topology_json(J)}, {"no_empty_covers", no_empty_covers(J)}});
  } else {
    std::cout << format_topology(J) << "\n";
  }
}

int cmd_topology_validate(const std::string& path) {
  const auto site = load_site(path);
  std::vector<Sieve> covers = site.cover_seeds.value_or(std::vector<Sieve>{});
  for (auto c : site.category().objects()) covers.push_back(maximal_sieve(site.category(), c));
  try {
    const auto J = validate_topology(site.space, covers);
    if (opts.json) emit({{"valid", true}, {"covers", topology_json(J)}});
    else std::cout << "valid topology\n" << format_topology(J) << "\n";
    return 0;
  } catch (const ValidationError& e) {
    if (opts.json) emit({{"valid", false}, {"axiom", to_string(e.kind())}, {"detail", e.what()}});
    else std::cout << "invalid topology\n" << e.what() << "\n";
    return 2;
  }
}

int cmd_topology_compare(const std::string& path, const std::string& other) {
  const auto site = load_site(path);
  const auto J1 = select_topology(site, "file");
  const auto J2 = select_topology(site, other);
  const bool le = leq_topology(J1, J2);
  const bool ge = leq_topology(J2, J1);
  if (opts.json) {
    emit({{"leq", le}, {"geq", ge}, {"equal", le && ge}});
  } else {
    std::cout << "leq: " << yes_no(le) << "\ngeq: " << yes_no(ge) << "\nequal: " << yes_no(le && ge) << "\n";
  }
  return 0;
}

int cmd_transform(const std::string& path, const std::string& topology, const std::string& out_path,
                  bool boolean) {
  const auto site = load_site(path);
  const auto J = select_topology(site, topology);
  const auto K = boolean ? booleanize_site(J) : demorganize_site(J);
  const bool reduced = !no_empty_covers(J);
  if (!out_path.empty()) write_file(out_path, write_site(K.category(), &K));
  if (opts.json) {
    emit({{"reduced", reduced},
          {"objects", K.category().object_count()},
          {"covers", topology_json(K)},
          {"unchanged", !reduced && K == J}});
  } else {
    if (reduced) std::cout << "reduced site: " << K.category().object_count() << " objects\n";
    std::cout << format_topology(K) << "\n";
    if (!reduced && K == J) std::cout << "unchanged\n";
  }
  return 0;
}

int cmd_enumerate(const std::string& path) {
  const auto site = load_site(path);
  const auto all = enumerate_topologies(site.space, opts.max_enum_arrows);
  json rows = json::array();
  for (const auto& J : all) {
    rows.push_back({{"covers", topology_json(J)},
                    {"no_empty_covers", no_empty_covers(J)},
                    {"de_morgan", is_demorgan_general(J)},
                    {"boolean", is_boolean_general(J)}});
  }
  if (opts.json) {
    emit({{"count", all.size()}, {"topologies", rows}});
    return 0;
  }
  std::cout << all.size() << " topologies\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::cout << "[" << i << "] " << format_topology(all[i]) << "\n     no_empty_covers="
              << yes_no(rows[i]["no_empty_covers"]) << " de_morgan=" << yes_no(rows[i]["de_morgan"])
              << " boolean=" << yes_no(rows[i]["boolean"]) << "\n";
  }
  return 0;
}

int cmd_report(const std::string& path, const std::string& topology) {
  const auto site = load_site(path);
  const auto& C = site.category();
  const auto J = select_topology(site, topology);
  const auto M = demorgan_topology(site.space);
  const auto D = dense_topology(site.space);
  json out = {{"objects", C.object_count()},
              {"arrows", C.arrow_count()},
              {"right_ore", right_ore(C)},
              {"topology", format_topology(J)},
              {"no_empty_covers", no_empty_covers(J)},
              {"demorgan_topology", format_topology(M)},
              {"dense_topology", format_topology(D)}};
  if (!no_empty_covers(J)) {
    try {
      const auto R = reduced_site(J);
      std::vector<std::string> kept;
      for (auto c : R.category().objects()) kept.push_back(R.category().name(c));
      out["reduced_objects"] = kept;
    } catch (const ValidationError&) {
      out["reduced_objects"] = json::array();
    }
  }
  for (auto [p, name] : {std::pair{Property::DeMorgan, "de_morgan"}, std::pair{Property::Boolean, "boolean"}}) {
    json methods = json::object();
    for (const char* m : {"general", "reduced", "oracle"}) methods[m] = decide(J, p, m).result;
    out[name] = methods;
  }
  if (const auto w = countroc_witness(J)) {
    out["countroc_witness"] = {{"object", C.name(w->object)}, {"f", C.name(w->f)}, {"g", C.name(w->g)}};
  }
  if (opts.json) {
    emit(out);
    return 0;
  }
  std::cout << "category: " << C.object_count() << " objects, " << C.arrow_count() << " arrows\n"
            << "right Ore: " << yes_no(out["right_ore"]) << "\n"
            << "topology: " << format_topology(J) << "\n"
            << "no empty covers: " << yes_no(out["no_empty_covers"]) << "\n";
  if (out.contains("reduced_objects")) {
    std::cout << "reduced objects:";
    for (const auto& o : out["reduced_objects"]) std::cout << " " << o.get<std::string>();
    std::cout << "\n";
  }
  std::cout << "De Morgan topology: " << format_topology(M) << "\n"
            << "dense topology: " << format_topology(D) << "\n";
  for (const char* name : {"de_morgan", "boolean"}) {
    std::cout << name << ":";
    for (const auto& [m, r] : out[name].items()) std::cout << " " << m << "=" << yes_no(r.get<bool>());
    std::cout << "\n";
  }
  if (out.contains("countroc_witness")) {
    const auto& w = out["countroc_witness"];
    std::cout << "non-De Morgan witness: object " << w["object"].get<std::string>() << ", f="
              << w["f"].get<std::string>() << ", g=" << w["g"].get<std::string>() << "\n";
  }
  return 0;
}

// ---- lattices and frames ----------------------------------------------------

HeytingAlgebra load_algebra(const std::string& path) { return from_poset(read_frame(path)); }

int cmd_heyting_check(const std::string& path) {
  const auto H = load_algebra(path);
  json neg = json::object();
  for (Element a = 0; a < H.size(); ++a) neg[H.name(a)] = H.name(H.neg(a));
  std::vector<std::string> regular;
  for (auto r : regular_element_indices(H)) regular.push_back(H.name(r));
  json out = {{"elements", H.size()},
              {"heyting", true},
              {"de_morgan", is_de_morgan_algebra(H)},
              {"boolean", is_boolean_algebra(H)},
              {"de_morgan_property", has_de_morgan_property(H)},
              {"boolean_property", has_boolean_property(H)},
              {"negation", neg},
              {"regular", regular}};
  if (opts.json) {
    emit(out);
    return 0;
  }
  std::cout << "Heyting algebra with " << H.size() << " elements\n";
  for (const char* k : {"de_morgan", "boolean", "de_morgan_property", "boolean_property"}) {
    std::cout << k << ": " << yes_no(out[k]) << "\n";
  }
  std::cout << "negation:";
  for (Element a = 0; a < H.size(); ++a) std::cout << " " << H.name(a) << "->" << H.name(H.neg(a));
  std::cout << "\nregular: " << element_list(H, regular_element_indices(H)) << "\n";
  return 0;
}

int cmd_frame_nuclei(const std::string& path) {
  const Frame F(load_algebra(path));
  const auto& H = F.algebra();
  const auto all = enumerate_nuclei(F);
  auto kind = [&](const Nucleus& j) {
    std::vector<std::string> tags;
    for (Element a = 0; a < H.size(); ++a) {
      if (open_nucleus(F, a) == j) tags.push_back("open(" + H.name(a) + ")");
      if (closed_nucleus(F, a) == j) tags.push_back("closed(" + H.name(a) + ")");
    }
    return tags;
  };
  if (opts.json) {
    json rows = json::array();
    for (const auto& j : all) {
      rows.push_back({{"table", nucleus_json(H, j)},
                      {"dense", is_dense_nucleus(F, j)},
                      {"fixpoints", fixpoints(F, j).size()},
                      {"kinds", kind(j)}});
    }
    emit({{"count", all.size()}, {"nuclei", rows}});
    return 0;
  }
  std::cout << all.size() << " nuclei\n";
  for (const auto& j : all) {
    std::cout << "  " << nucleus_text(H, j) << (is_dense_nucleus(F, j) ? " dense" : "")
              << " fixpoints=" << fixpoints(F, j).size();
    for (const auto& t : kind(j)) std::cout << " " << t;
    std::cout << "\n";
  }
  return 0;
}

int cmd_frame_demorganize(const std::string& path, const std::string& out_path) {
  const Frame F(load_algebra(path));
  const auto& H = F.algebra();
  const auto d = demorganize_frame(F);
  const auto& Q = d.quotient.algebra();
  if (!out_path.empty()) write_file(out_path, write_frame(Q));
  if (opts.json) {
    emit({{"nucleus", nucleus_json(H, d.nucleus)},
          {"dense", is_dense_nucleus(F, d.nucleus)},
          {"quotient", Q.names()},
          {"quotient_de_morgan", is_de_morgan_algebra(Q)},
          {"quotient_boolean", is_boolean_algebra(Q)}});
    return 0;
  }
  std::cout << "nucleus: " << nucleus_text(H, d.nucleus) << "\n"
            << "dense: " << yes_no(is_dense_nucleus(F, d.nucleus)) << "\n"
            << "quotient: " << element_list(H, fixpoints(F, d.nucleus)) << "\n"
            << "quotient de_morgan: " << yes_no(is_de_morgan_algebra(Q)) << "\n"
            << "quotient boolean: " << yes_no(is_boolean_algebra(Q)) << "\n";
  return 0;
}

int cmd_frame_classify(const std::string& path) {
  const Frame F(load_algebra(path));
  const auto& H = F.algebra();
  const auto site = frame_as_site(F, opts.max_sieve_arrows);
  json out = {{"de_morgan", is_de_morgan_algebra(H)},
              {"boolean", is_boolean_algebra(H)},
              {"extremally_disconnected", is_extremally_disconnected(F)},
              {"almost_discrete", is_almost_discrete(F)},
              {"sheaves_de_morgan", is_demorgan_general(site)},
              {"sheaves_boolean", is_boolean_general(site)}};
  if (opts.json) {
    emit(out);
    return 0;
  }
  for (const char* k : {"de_morgan", "boolean", "extremally_disconnected", "almost_discrete", "sheaves_de_morgan",
                        "sheaves_boolean"}) {
    std::cout << k << ": " << yes_no(out[k]) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide De Morgan's law and excluded middle for sheaves on finite sites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-sieve-arrows", opts.max_sieve_arrows, "Refuse objects with more incoming arrows")
      ->capture_default_str();
  app.add_option("--max-enum-arrows", opts.max_enum_arrows, "Refuse topology enumeration above this many arrows")
      ->capture_default_str();
  app.add_flag("--json", opts.json, "Machine-readable output");

  std::string site_path;
  std::string other;
  std::string object;
  std::string topology = "file";
  std::string method = "general";
  std::string out_path;
  std::function<int()> action;

  auto site_arg = [&](CLI::App* sub) { sub->add_option("site", site_path, "Site JSON")->required(); };
  auto topology_opt = [&](CLI::App* sub) {
    sub->add_option("--topology", topology, "file, trivial, dense, demorgan, or a path to a covers document")
        ->capture_default_str();
  };
  auto method_opt = [&](CLI::App* sub) {
    sub->add_option("--method", method)
        ->check(CLI::IsMember({"general", "reduced", "oracle", "all"}))
        ->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Validate a site document");
  site_arg(validate);
  validate->callback([&] { action = [&] { return cmd_validate(site_path); }; });

  auto* ore = app.add_subcommand("ore", "Right Ore condition");
  site_arg(ore);
  ore->callback([&] { action = [&] { return cmd_ore(site_path); }; });

  auto* sieves = app.add_subcommand("sieves", "List the sieves on an object");
  site_arg(sieves);
  sieves->add_option("object", object)->required();
  topology_opt(sieves);
  sieves->callback([&] { action = [&] { return cmd_sieves(site_path, object, topology); }; });

  auto* topo = app.add_subcommand("topology", "Topology operations");
  topo->require_subcommand(1);
  topo->fallthrough();
  auto* tv = topo->add_subcommand("validate", "Check the listed covers against the axioms as given");
  site_arg(tv);
  tv->callback([&] { action = [&] { return cmd_topology_validate(site_path); }; });
  auto* tg = topo->add_subcommand("generate", "Topology generated by the listed covers");
  site_arg(tg);
  tg->add_option("-o,--output", out_path);
  tg->callback([&] {
    action = [&] {
      const auto site = load_site(site_path);
      print_topology(select_topology(site, "file"), out_path);
      return 0;
    };
  });
  auto* tc = topo->add_subcommand("compare", "Compare the file's topology with another");
  site_arg(tc);
  tc->add_option("other", other, "trivial, dense, demorgan, or a path")->required();
  tc->callback([&] { action = [&] { return cmd_topology_compare(site_path, other); }; });

  auto* dense = app.add_subcommand("dense-topology", "Stably non-empty sieves cover");
  site_arg(dense);
  dense->add_option("-o,--output", out_path);
  dense->callback([&] {
    action = [&] {
      print_topology(dense_topology(load_site(site_path).space), out_path);
      return 0;
    };
  });

  auto* dmt = app.add_subcommand("demorgan-topology", "Topology generated by the sieves M_R");
  site_arg(dmt);
  dmt->add_option("-o,--output", out_path);
  dmt->callback([&] {
    action = [&] {
      print_topology(demorgan_topology(load_site(site_path).space), out_path);
      return 0;
    };
  });

  for (auto [name, prop] : {std::pair{"is-demorgan", Property::DeMorgan}, std::pair{"is-boolean", Property::Boolean}}) {
    auto* sub = app.add_subcommand(name, prop == Property::DeMorgan ? "Do sheaves satisfy De Morgan's law"
                                                                     : "Do sheaves satisfy excluded middle");
    site_arg(sub);
    topology_opt(sub);
    method_opt(sub);
    sub->callback([&, p = prop] { action = [&, p] { return run_decision(site_path, topology, method, p); }; });
  }

  for (auto [name, boolean] : {std::pair{"demorganize", false}, std::pair{"booleanize", true}}) {
    auto* sub = app.add_subcommand(name, boolean ? "Least Boolean topology without empty covers above the reduced site's"
                                                 : "Least De Morgan topology without empty covers above the reduced site's");
    site_arg(sub);
    topology_opt(sub);
    sub->add_option("-o,--output", out_path);
    sub->callback([&, b = boolean] { action = [&, b] { return cmd_transform(site_path, topology, out_path, b); }; });
  }

  auto* en = app.add_subcommand("enumerate-topologies", "Every topology on the category");
  site_arg(en);
  en->callback([&] { action = [&] { return cmd_enumerate(site_path); }; });

  auto* heyting = app.add_subcommand("heyting", "Heyting algebra checks");
  heyting->require_subcommand(1);
  heyting->fallthrough();
  auto* hc = heyting->add_subcommand("check", "Validate an order and report its laws");
  hc->add_option("frame", site_path, "Order JSON")->required();
  hc->callback([&] { action = [&] { return cmd_heyting_check(site_path); }; });

  auto* frame = app.add_subcommand("frame", "Finite frames");
  frame->require_subcommand(1);
  frame->fallthrough();
  auto* fn = frame->add_subcommand("nuclei", "Every nucleus");
  fn->add_option("frame", site_path)->required();
  fn->callback([&] { action = [&] { return cmd_frame_nuclei(site_path); }; });
  auto* fd = frame->add_subcommand("demorganize", "Largest dense De Morgan sublocale");
  fd->add_option("frame", site_path)->required();
  fd->add_option("-o,--output", out_path, "Write the quotient frame");
  fd->callback([&] { action = [&] { return cmd_frame_demorganize(site_path, out_path); }; });
  auto* fc = frame->add_subcommand("classify", "De Morgan, Boolean and topological classification");
  fc->add_option("frame", site_path)->required();
  fc->callback([&] { action = [&] { return cmd_frame_classify(site_path); }; });

  auto* report = app.add_subcommand("report", "Summary of a site");
  site_arg(report);
  topology_opt(report);
  report->callback([&] { action = [&] { return cmd_report(site_path, topology); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
}
