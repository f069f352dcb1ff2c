// Command-line front end: every computation takes JSON files and prints a
// JSON (or flattened text) report. Exit codes: 0 success or true verdict,
// 2 false verdict, 1 input or precondition error.

#include "wittcob/cobordism.hpp"
#include "wittcob/genus.hpp"
#include "wittcob/hodge.hpp"
#include "wittcob/json_io.hpp"
#include "wittcob/numtheory.hpp"
#include "wittcob/suites.hpp"
#include "wittcob/witt.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

#ifndef WITTCOB_DATA_DIR
#define WITTCOB_DATA_DIR "data"
#endif

using namespace wittcob;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kFalse = 2;

struct Outcome {
  Json report;
  int code = kOk;
};

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

Outcome verdict(Json report, bool ok) { return {std::move(report), ok ? kOk : kFalse}; }

Outcome cmd_invariants(const std::string& path) {
  const BilinearForm f = form_from_json(parse_json_file(path), "");
  Json j;
  if (!f.over_rationals()) {
    j["witt_class"] = fp_class_to_json(fp_class_of(f));
    j["rank"] = radical_split(f).nondegenerate.dim();
    return {j};
  }
  const RadicalSplit split = radical_split(f);
  j["radical_dim"] = split.radical_dim;
  if (f.symmetry() == Symmetry::skew) {
    j["rank"] = split.nondegenerate.dim();
    j["hyperbolic_planes"] = symplectic_reduce(split.nondegenerate).hyperbolic_count;
    return {j};
  }
  j["invariants"] = invariants_to_json(invariants(split.nondegenerate));
  j["diagonal"] = Json::array();
  for (const auto& e : diagonalize(split.nondegenerate).entries) j["diagonal"].push_back(rational_to_json(e));
  return {j};
}

Outcome cmd_witt_class(const std::string& path) {
  const BilinearForm f = form_from_json(parse_json_file(path), "");
  if (!f.over_rationals()) return {fp_class_to_json(fp_class_of(f))};
  Json j = witt_class_to_json(witt_class_of(f));
  if (f.symmetry() == Symmetry::skew)
    j["symplectic_certificate"] = matrix_to_json(symplectic_reduce(radical_split(f).nondegenerate).congruence);
  return {j};
}

Outcome cmd_equivalent(const std::string& a_path, const std::string& b_path) {
  const BilinearForm a = form_from_json(parse_json_file(a_path), "");
  const BilinearForm b = form_from_json(parse_json_file(b_path), "");
  const WittClassQ ca = witt_class_of(a), cb = witt_class_of(b);
  const bool by_hasse = witt_equal_by_hasse(a, b);
  const bool eq = equivalent(a, b);
  return verdict(Json{{"equivalent", eq},
                      {"by_residues", ca == cb},
                      {"by_hasse", by_hasse},
                      {"class_a", witt_class_to_json(ca)},
                      {"class_b", witt_class_to_json(cb)}},
                 eq);
}

Outcome cmd_residue(const std::string& path, const std::string& prime, int k) {
  const BilinearForm f = form_from_json(parse_json_file(path), "");
  Integer p;
  if (p.set_str(prime, 10) != 0 || !is_prime(p)) throw std::invalid_argument("--prime must be a prime, got " + prime);
  Json j = fp_class_to_json(psi(f, p, k));
  j["k"] = k;
  return {j};
}

Outcome cmd_metabolic(const std::string& path) {
  const BlockMetabolicForm block = block_from_json(parse_json_file(path), "");
  const MetabolicReduction r = metabolic_reduce(block);
  Json j = metabolic_reduction_to_json(r);
  const WittClassQ in = witt_class_of(block.assemble());
  const WittClassQ out = witt_class_of(r.core);
  j["input_class"] = witt_class_to_json(in);
  j["core_class"] = witt_class_to_json(out);
  j["classes_equal"] = in == out;
  return verdict(j, in == out);
}

Outcome cmd_complex_class(const std::string& path) {
  const SelfDualComplex c = self_dual_from_json(parse_json_file(path), "");
  const ValidationReport v = validate(c);
  if (!v.valid) throw std::invalid_argument("invalid self-dual complex: " + v.violations.front());
  Json dims = Json::object();
  for (const auto& [i, n] : v.cohomology_dims) dims[std::to_string(i)] = n;
  Json j = cobordism_class_to_json(cobordism_class(c));
  j["cohomology_dims"] = std::move(dims);
  j["h0_form"] = form_to_json(h0_form(c));
  return {j};
}

Outcome cmd_verify_witness(const std::string& path) {
  const CobordismWitness w = witness_from_json(parse_json_file(path), "");
  const WitnessReport r = verify_witness(w);
  Json j = witness_report_to_json(r);
  if (r.ok) {
    const CobordismClass a = cobordism_class(w.F), b = cobordism_class(w.F_prime);
    j["class_F"] = cobordism_class_to_json(a);
    j["class_F_prime"] = cobordism_class_to_json(b);
    j["classes_equal"] = a.witt == b.witt;
  }
  return verdict(j, r.ok);
}

Outcome cmd_hodge_check(const std::string& h_path, const std::string& s_path) {
  const HodgeStructure h = hodge_from_json(parse_json_file(h_path), "");
  const BilinearForm s = form_from_json(parse_json_file(s_path), "");
  const PolarizationReport r = is_polarization(h, s);
  Json j = polarization_report_to_json(r);
  if (r.ok) {
    const SignedWittClass pc = pol_class(h, s);
    j["pol_sign"] = pc.sign;
    j["pol_class"] = witt_class_to_json(pc.witt);
  }
  return verdict(j, r.ok);
}

Outcome cmd_hodge_compare(const std::string& h_path, const std::string& s_path, const std::string& s2_path) {
  const HodgeStructure h = hodge_from_json(parse_json_file(h_path), "");
  const BilinearForm s = form_from_json(parse_json_file(s_path), "");
  const BilinearForm s2 = form_from_json(parse_json_file(s2_path), "");
  const PolarizationComparison c = compare_polarizations(h, s, s2);
  Json j = comparison_to_json(c);
  if (s.symmetry() == Symmetry::symmetric) j["rational_classes_equal"] = witt_class_of(s) == witt_class_of(s2);
  return verdict(j, c.holds());
}

Outcome cmd_chi_y(const std::string& path) {
  const HodgeDiamond d = diamond_from_json(parse_json_file(path), "");
  const YPolynomial chi = chi_y(d);
  return {Json{{"chi_y", y_polynomial_to_json(chi)}, {"specializations", specialization_to_json(specialize(chi, d.n))}}};
}

Outcome cmd_epsilon(long m) {
  return {Json{{"m", m}, {"epsilon", epsilon(m)}, {"pair_rule", epsilon_pair_rule(m)}}};
}

Outcome cmd_lefschetz(const std::string& path) {
  const auto [pieces, w] = pieces_from_json(parse_json_file(path), "");
  const LefschetzCheck c = lefschetz_cancellation_check(pieces, w);
  return verdict(lefschetz_to_json(c), c.equal);
}

Outcome cmd_paper_examples(const std::string& surfaces_path) {
  const DoublePointReport dp = double_point_example();
  Json surfaces = Json::array();
  bool all = dp.verdict();
  const Json data = parse_json_file(surfaces_path);
  const Json& list = data.contains("surfaces") ? data["surfaces"] : data;
  if (!list.is_array()) throw SchemaError("/surfaces", "expected an array of surface Hodge data");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const IsolatedPointReport r = isolated_point_example(surface_from_json(list[i], "/surfaces/" + std::to_string(i)));
    all = all && r.obstruction;
    surfaces.push_back(isolated_point_to_json(r));
  }
  return verdict(Json{{"double_point", double_point_to_json(dp)}, {"isolated_point", std::move(surfaces)}, {"all_verdicts", all}},
                 all);
}

Outcome cmd_properties(const std::vector<std::string>& names, std::uint64_t seed, std::size_t cases) {
  const std::vector<std::string> selected = names.empty() ? suite_names() : names;
  Json results = Json::array();
  bool all = true;
  for (const auto& r : run_suites(selected, seed, cases)) {
    all = all && r.ok();
    results.push_back({{"suite", r.name},
                       {"cases", r.cases},
                       {"failures", r.failures},
                       {"ok", r.ok()},
                       {"seconds", r.seconds},
                       {"messages", r.messages}});
  }
  return verdict(Json{{"seed", seed}, {"suites", std::move(results)}, {"ok", all}}, all);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witt groups, self-dual complexes, polarizations and chi_y genera with exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint64_t bound = trial_division_bound();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for every randomized fixture");
  app.add_option("--trial-division-bound", bound, "Largest trial divisor used when factoring");

  std::function<Outcome()> action;
  std::string a, b, c, prime;
  int k = 1;
  long m = 0;
  std::size_t cases = 200;
  std::vector<std::string> suites;
  std::string surfaces = std::string(WITTCOB_DATA_DIR) + "/surfaces.json";

  auto* inv = app.add_subcommand("invariants", "Rank, signature, discriminant and Hasse invariants of a form");
  inv->add_option("form", a)->required();
  inv->callback([&] { action = [&] { return cmd_invariants(a); }; });

  auto* wc = app.add_subcommand("witt-class", "Canonical W(Q) class: signature and second residues");
  wc->add_option("form", a)->required();
  wc->callback([&] { action = [&] { return cmd_witt_class(a); }; });

  auto* eq = app.add_subcommand("equivalent", "Decide Witt equivalence by residues and by Hasse invariants");
  eq->add_option("a", a)->required();
  eq->add_option("b", b)->required();
  eq->callback([&] { action = [&] { return cmd_equivalent(a, b); }; });

  auto* res = app.add_subcommand("residue", "psi^k: W(Q_p) -> W(F_p)");
  res->add_option("--prime", prime)->required();
  res->add_option("--k", k)->required()->check(CLI::IsMember({0, 1}));
  res->add_option("form", a)->required();
  res->callback([&] { action = [&] { return cmd_residue(a, prime, k); }; });

  auto* met = app.add_subcommand("metabolic-reduce", "Clear a block metabolic form down to its core");
  met->add_option("block", a)->required();
  met->callback([&] { action = [&] { return cmd_metabolic(a); }; });

  auto* cc = app.add_subcommand("complex-class", "Cobordism class of a self-dual complex");
  cc->add_option("complex", a)->required();
  cc->callback([&] { action = [&] { return cmd_complex_class(a); }; });

  auto* vw = app.add_subcommand("verify-witness", "Check every condition of a cobordism witness");
  vw->add_option("witness", a)->required();
  vw->callback([&] { action = [&] { return cmd_verify_witness(a); }; });

  auto* hc = app.add_subcommand("hodge-check", "Check that a form polarizes a Hodge structure");
  hc->add_option("hodge", a)->required();
  hc->add_option("form", b)->required();
  hc->callback([&] { action = [&] { return cmd_hodge_check(a, b); }; });

  auto* hcmp = app.add_subcommand("hodge-compare", "Compare two polarizations of a Hodge structure");
  hcmp->add_option("hodge", a)->required();
  hcmp->add_option("s", b)->required();
  hcmp->add_option("s2", c)->required();
  hcmp->callback([&] { action = [&] { return cmd_hodge_compare(a, b, c); }; });

  auto* chi = app.add_subcommand("chi-y", "chi_y genus of a Hodge diamond and its specializations");
  chi->add_option("diamond", a)->required();
  chi->callback([&] { action = [&] { return cmd_chi_y(a); }; });

  auto* eps = app.add_subcommand("epsilon", "The sign (-1)^{m(m+1)/2}");
  eps->add_option("m", m)->required()->allow_extra_args(false);
  eps->callback([&] { action = [&] { return cmd_epsilon(m); }; });

  auto* lc = app.add_subcommand("lefschetz-check", "Lefschetz cancellation identity for primitive pieces");
  lc->add_option("pieces", a)->required();
  lc->callback([&] { action = [&] { return cmd_lefschetz(a); }; });

  auto* pe = app.add_subcommand("paper-examples", "Certificates for the isolated-singularity examples");
  pe->add_option("--surfaces", surfaces, "Hodge data of degree-m surfaces");
  pe->callback([&] { action = [&] { return cmd_paper_examples(surfaces); }; });

  auto* pr = app.add_subcommand("properties", "Run seeded property suites");
  pr->add_option("--suite", suites, "Suite name (repeatable); default all")->check(CLI::IsMember(suite_names()));
  pr->add_option("--cases", cases, "Cases per suite")->check(CLI::PositiveNumber);
  pr->callback([&] { action = [&] { return cmd_properties(suites, seed, cases); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    set_trial_division_bound(bound);
    const Outcome out = action();
    if (format == "json")
      std::cout << out.report.dump(2) << "\n";
    else
      flatten(out.report, "", std::cout);
    return out.code;
  } catch (const SchemaError& e) {
    std::cerr << "schema error at " << e.pointer() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
