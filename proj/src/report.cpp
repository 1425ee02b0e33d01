#include "pgw/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "pgw/automorphism.hpp"
#include "pgw/errors.hpp"
#include "pgw/oracle.hpp"

namespace pgw {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

std::int64_t ms_since(Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t).count();
}

json empty_body() {
  return json{{"group", nullptr},        {"hypotheses", nullptr}, {"witness", nullptr},
              {"verification", nullptr}, {"oracle", nullptr},     {"timing", json::object()}};
}

json words(const std::vector<Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(format_word(x));
  return out;
}

json group_section(const PcGroup& G) {
  json g;
  g["name"] = G.name();
  g["p"] = G.prime();
  g["n"] = G.ngens();
  g["order"] = *G.order();
  g["class"] = nilpotency_class(G);
  g["rank"] = rank(G, whole_group(G));
  g["center"] = describe_subgroup(G, center(G));
  g["frattini"] = describe_subgroup(G, frattini(G));
  json maximals = json::array();
  for (const auto& M : maximal_subgroups(G)) {
    json m = describe_subgroup(G, M);
    m["abelian"] = is_abelian(G, M);
    m["center"] = describe_subgroup(G, center_of(G, M));
    maximals.push_back(std::move(m));
  }
  g["maximal_subgroups"] = std::move(maximals);
  return g;
}

json witness_section(const PcGroup& G, const TheoremWitness& w) {
  json j;
  j["u"] = format_word(w.u);
  j["g"] = format_word(w.g);
  j["M"] = describe_subgroup(G, w.M);
  j["images"] = words(w.automorphism.images());
  return j;
}

json verification_of(const Automorphism& a, const Subgroup& phi) {
  json v;
  v["certified"] = true;
  v["order"] = aut_order(a);
  v["non_inner"] = !is_inner(a).inner;
  v["fixes_frattini"] = fixes_elementwise(a, phi);
  return v;
}

json oracle_section(const PcGroup& G, const RunOptions& options, json& timing) {
  const auto start = Clock::now();
  OracleOptions o;
  o.jobs = options.jobs;
  o.budget_seconds = options.budget_seconds;
  o.keep_automorphisms = true;
  const AutCount c = enumerate_automorphisms(G, o);
  json j;
  j["total"] = c.total;
  j["inner"] = c.inner;
  j["order_p_noninner_fixing_frattini"] = c.order_p_noninner_fixing_frattini;
  j["candidates"] = c.candidates;
  j["cross_validated"] = cross_validate(G, c);
  timing["oracle_ms"] = ms_since(start);
  return j;
}

Automorphism reference_alpha(const PcGroup& G) {
  // f_i -> f_i for i != 2, f_2 -> f_2 f_6
  std::vector<Element> images;
  for (int i = 0; i < G.ngens(); ++i) images.push_back(G.generator(i));
  images[1] = G.mul(G.generator(1), G.generator(5));
  return verify(GenMap(G, std::move(images)));
}

}  // namespace

json describe_subgroup(const PcGroup& G, const Subgroup& H) {
  return json{{"order", H.order()}, {"generators", words(canonical_generators(G, H))}};
}

json to_json(const HypothesisReport& r) {
  json j;
  j["p_odd"] = r.p_odd;
  j["nonabelian"] = r.nonabelian;
  j["monolithic"] = r.monolithic;
  j["all_maximals_nonabelian"] = r.all_maximals_nonabelian;
  j["zm_condition"] = r.zm_condition;
  if (r.zm_counterexample) {
    j["zm_counterexample"] = {{"maximal_index", r.zm_counterexample->maximal_index},
                              {"m", format_word(r.zm_counterexample->m)},
                              {"g", format_word(r.zm_counterexample->g)}};
  } else {
    j["zm_counterexample"] = nullptr;
  }
  j["corollary_centralizer_condition"] = r.corollary_centralizer_condition;
  j["theorem_applicable"] = r.theorem_applicable();
  j["corollary_applicable"] = r.corollary_applicable();
  const auto& d = r.diagnostics;
  j["diagnostics"] = {{"z2_abelian", d.z2_abelian},
                      {"z2_in_z_phi", d.z2_in_z_phi},
                      {"zm_in_z2", d.zm_in_z2},
                      {"z2_mod_z_elementary", d.z2_mod_z_elementary},
                      {"rank_z2_mod_z", d.rank_z2_mod_z},
                      {"rank_g", d.rank_g},
                      {"omega1_z2_exceeds_center", d.omega1_z2_exceeds_center}};
  return j;
}

RunReport run_info(const GroupFile& file, const RunOptions& options) {
  const auto start = Clock::now();
  RunReport r;
  r.body = empty_body();
  r.body["group"] = group_section(file.group);
  if (options.with_oracle) r.body["oracle"] = oracle_section(file.group, options, r.body["timing"]);
  r.body["timing"]["total_ms"] = ms_since(start);
  return r;
}

RunReport run_check(const GroupFile& file, const RunOptions& options) {
  const auto start = Clock::now();
  RunReport r;
  r.body = empty_body();
  r.body["group"] = group_section(file.group);
  const HypothesisReport h = check_theorem_hypotheses(file.group);
  r.body["hypotheses"] = to_json(h);
  if (!h.theorem_applicable()) {
    r.exit_code = kExitNotApplicable;
    r.message = "theorem hypotheses do not hold";
  }
  if (options.with_oracle) r.body["oracle"] = oracle_section(file.group, options, r.body["timing"]);
  r.body["timing"]["total_ms"] = ms_since(start);
  return r;
}

RunReport run_construct(const GroupFile& file, const RunOptions& options) {
  const auto start = Clock::now();
  const PcGroup& G = file.group;
  RunReport r;
  r.body = empty_body();
  r.body["group"] = group_section(G);
  const HypothesisReport h = check_theorem_hypotheses(G);
  r.body["hypotheses"] = to_json(h);
  if (!h.theorem_applicable()) {
    r.exit_code = kExitNotApplicable;
    r.message = "theorem hypotheses do not hold";
  } else {
    try {
      const TheoremWitness w = construct_theorem_witness(G);
      r.body["witness"] = witness_section(G, w);
      r.body["verification"] = verification_of(w.automorphism, frattini(G));
    } catch (const NoEligibleU& e) {
      r.exit_code = kExitNotApplicable;
      r.message = e.what();
    } catch (const CentralizerNotMaximal& e) {
      r.exit_code = kExitNotApplicable;
      r.message = e.what();
    }
  }
  if (options.with_oracle) r.body["oracle"] = oracle_section(G, options, r.body["timing"]);
  r.body["timing"]["total_ms"] = ms_since(start);
  return r;
}

RunReport run_count(const GroupFile& file, const RunOptions& options) {
  const auto start = Clock::now();
  RunReport r;
  r.body = empty_body();
  r.body["group"] = group_section(file.group);
  r.body["oracle"] = oracle_section(file.group, options, r.body["timing"]);
  r.body["timing"]["total_ms"] = ms_since(start);
  return r;
}

std::vector<CheckResult> check_example_group(const PcGroup& G) {
  std::vector<CheckResult> out;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  auto el = [&](std::string_view w) { return parse_element(G, w); };
  auto sub = [&](std::initializer_list<std::string_view> ws) {
    std::vector<Element> gens;
    for (auto w : ws) gens.push_back(el(w));
    return closure(G, gens);
  };

  check("order is 3^7", G.prime() == 3 && G.order() == 2187u);
  if (G.ngens() != 7 || G.prime() != 3) return out;
  const int cls = nilpotency_class(G);
  check("nilpotency class is 4", cls == 4, "class " + std::to_string(cls));

  const Subgroup Z = center(G);
  check("Z(G) = <f7>", Z == sub({"g7^1"}), "|Z(G)| = " + std::to_string(Z.order()));
  check("monolithic", is_monolithic(G));

  const Subgroup phi = frattini(G);
  check("Phi(G) = <f3, f4, f5, f6, f7>", phi == sub({"g3^1", "g4^1", "g5^1", "g6^1", "g7^1"}));
  check("Phi(G) is non-abelian", !is_abelian(G, phi));

  const std::vector<std::pair<Subgroup, Subgroup>> expected = {
      {sub({"g1^1", "g3^1", "g4^1", "g5^1", "g6^1", "g7^1"}), sub({"g6^1", "g7^1"})},
      {sub({"g2^1", "g3^1", "g4^1", "g5^1", "g6^1", "g7^1"}), sub({"g5^1", "g7^1"})},
      {sub({"g1^1 g2^2", "g3^1", "g4^1", "g5^1", "g6^1", "g7^1"}), sub({"g5^2 g6^1 g7^1", "g7^2"})},
      {sub({"g1^1 g2^1", "g3^1", "g4^1", "g5^1", "g6^1", "g7^1"}), sub({"g5^1 g6^1 g7^2", "g7^1"})},
  };
  const auto maximals = maximal_subgroups(G);
  check("exactly four maximal subgroups", maximals.size() == 4,
        std::to_string(maximals.size()) + " found");
  bool all_found = true, centers_match = true, nonabelian = true;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto it = std::find(maximals.begin(), maximals.end(), expected[k].first);
    if (it == maximals.end()) {
      all_found = false;
      continue;
    }
    if (!(center_of(G, *it) == expected[k].second)) centers_match = false;
    if (is_abelian(G, *it)) nonabelian = false;
  }
  check("maximal subgroups are M1, M2, M3, M4", all_found && maximals.size() == 4);
  check("centers are Z(M1), Z(M2), Z(M3), Z(M4)", all_found && centers_match);
  check("all maximal subgroups are non-abelian", nonabelian);
  check("[Z(M), g] <= Z(G) for every maximal M and g outside M", check_zm_condition(G, maximals).holds);
  check("theorem hypotheses hold", check_theorem_hypotheses(G).theorem_applicable());

  try {
    const Automorphism alpha = reference_alpha(G);
    check("alpha (f2 -> f2 f6) is an automorphism", true);
    check("alpha has order 3", aut_order(alpha) == 3);
    check("alpha is non-inner", !is_inner(alpha).inner);
    check("alpha fixes Phi(G) elementwise", fixes_elementwise(alpha, phi));
  } catch (const Error& e) {
    check("alpha (f2 -> f2 f6) is an automorphism", false, e.what());
  }

  try {
    const TheoremWitness w = construct_theorem_witness(G);
    check("constructed witness certifies", true,
          "u = " + to_string(w.u) + ", g = " + to_string(w.g));
    check("constructed witness has order 3", aut_order(w.automorphism) == 3);
    check("constructed witness is non-inner", !is_inner(w.automorphism).inner);
    check("constructed witness fixes Phi(G) elementwise", fixes_elementwise(w.automorphism, phi));
  } catch (const Error& e) {
    check("constructed witness certifies", false, e.what());
  }
  return out;
}

RunReport run_demo(const RunOptions& options) {
  const auto start = Clock::now();
  const GroupFile file = builtin(kExampleGroupKey);
  const PcGroup& G = file.group;
  RunReport r;
  r.body = empty_body();
  r.body["group"] = group_section(G);
  r.body["hypotheses"] = to_json(check_theorem_hypotheses(G));

  std::vector<CheckResult> checks = check_example_group(G);
  const TheoremWitness w = construct_theorem_witness(G);
  r.body["witness"] = witness_section(G, w);
  json verification = verification_of(w.automorphism, frattini(G));
  verification["reference_alpha"] = verification_of(reference_alpha(G), frattini(G));

  if (options.with_oracle) {
    r.body["oracle"] = oracle_section(G, options, r.body["timing"]);
    const auto total = r.body["oracle"]["total"].get<std::uint64_t>();
    const auto inner = r.body["oracle"]["inner"].get<std::uint64_t>();
    checks.push_back({"|Aut(G)| = 4374", total == 4374, std::to_string(total)});
    checks.push_back({"inner automorphisms = 729", inner == 729, std::to_string(inner)});
  }

  json list = json::array();
  bool all = true;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}});
    all = all && c.passed;
  }
  verification["example_checks"] = std::move(list);
  r.body["verification"] = std::move(verification);
  if (!all) {
    r.exit_code = kExitContradiction;
    r.message = "a reference fact about the example group failed to reproduce";
  }
  r.body["timing"]["total_ms"] = ms_since(start);
  return r;
}

std::string render_json(const RunReport& report, bool with_timing) {
  json body = report.body;
  if (!with_timing) body.erase("timing");
  return body.dump(2) + "\n";
}

namespace {

void text_subgroup(std::ostream& os, const json& s) {
  os << "order " << s["order"].get<std::uint64_t>() << ", <";
  bool first = true;
  for (const auto& w : s["generators"]) {
    os << (first ? "" : ", ") << w.get<std::string>();
    first = false;
  }
  os << ">";
}

}  // namespace

std::string render_text(const RunReport& report) {
  std::ostringstream os;
  const json& b = report.body;
  if (const auto& g = b["group"]; !g.is_null()) {
    os << "group " << g["name"].get<std::string>() << ": p = " << g["p"] << ", n = " << g["n"]
       << ", order " << g["order"] << ", class " << g["class"] << ", rank " << g["rank"] << "\n";
    os << "  Z(G):   ";
    text_subgroup(os, g["center"]);
    os << "\n  Phi(G): ";
    text_subgroup(os, g["frattini"]);
    os << "\n";
    int k = 1;
    for (const auto& m : g["maximal_subgroups"]) {
      os << "  M" << k++ << ": ";
      text_subgroup(os, m);
      os << (m["abelian"].get<bool>() ? " (abelian)" : "") << "\n      Z(M): ";
      text_subgroup(os, m["center"]);
      os << "\n";
    }
  }
  if (const auto& h = b["hypotheses"]; !h.is_null()) {
    os << "hypotheses:\n";
    for (const char* key : {"p_odd", "nonabelian", "monolithic", "all_maximals_nonabelian", "zm_condition",
                            "corollary_centralizer_condition", "theorem_applicable", "corollary_applicable"})
      os << "  " << key << ": " << (h[key].get<bool>() ? "yes" : "no") << "\n";
    os << "  diagnostics: " << h["diagnostics"].dump() << "\n";
  }
  if (const auto& w = b["witness"]; !w.is_null()) {
    os << "witness: u = " << w["u"].get<std::string>() << ", g = " << w["g"].get<std::string>() << ", M = ";
    text_subgroup(os, w["M"]);
    os << "\n  images:";
    int i = 1;
    for (const auto& x : w["images"]) os << "\n    f" << i++ << " -> " << x.get<std::string>();
    os << "\n";
  }
  if (const auto& v = b["verification"]; !v.is_null()) {
    os << "verification: order " << v["order"] << ", non-inner " << (v["non_inner"].get<bool>() ? "yes" : "no")
       << ", fixes Phi(G) " << (v["fixes_frattini"].get<bool>() ? "yes" : "no") << "\n";
    if (v.contains("example_checks"))
      for (const auto& c : v["example_checks"])
        os << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>() << "\n";
  }
  if (const auto& o = b["oracle"]; !o.is_null()) {
    os << "oracle: " << o["total"] << " automorphisms, " << o["inner"] << " inner, "
       << o["order_p_noninner_fixing_frattini"] << " non-inner of order p fixing Phi(G)\n";
  }
  if (b.contains("timing") && b["timing"].contains("total_ms"))
    os << "time: " << b["timing"]["total_ms"] << " ms\n";
  if (!report.message.empty()) os << report.message << "\n";
  return os.str();
}

}  // namespace pgw
