#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wnlie/wnlie.hpp"

using json = nlohmann::ordered_json;
using namespace wnlie;

namespace {

bool use_color() {
  static const bool enabled = [] {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return isatty(fileno(stdout)) == 1;
  }();
  return enabled;
}

std::string pass_tag(bool ok) {
  if (!use_color()) return ok ? "[PASS]" : "[FAIL]";
  return ok ? "\033[32m[PASS]\033[0m" : "\033[31m[FAIL]\033[0m";
}

/// Collects check outcomes and the human-readable transcript of a command.
struct Runner {
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> lines;

  bool check(bool ok, const std::string& label) {
    ++checks;
    if (!ok) ++failures;
    lines.push_back("  " + pass_tag(ok) + " " + label);
    return ok;
  }
  void note(const std::string& s) { lines.push_back(s); }
  bool pass() const { return failures == 0; }
};

json weight_json(const WeightVector& w) {
  json j;
  j["cartan"] = w.cartan;
  j["euler_scalar"] = w.euler_scalar;
  return j;
}

std::string vec_str(const GradedBasis& basis, const Vec& v) {
  return basis.from_coords(v).derivation().str();
}

std::string degree_label(Family f, int degree) {
  return std::string(family_name(f)) + "[" + std::to_string(degree) + "]";
}

// ---------------------------------------------------------------------------
// dims

json run_dims(Runner& r, int n, int max_degree) {
  r.note("dimension formulas, n=" + std::to_string(n));
  json rows = json::array();
  for (int i = -1; i <= max_degree; ++i) {
    const GradedBasis& basis = graded_basis(n, i);
    long long w = dim_graded(n, i);
    long long m = dim_divergence_free(n, i);
    long long nn = dim_euler_multiples(n, i);
    long long basis_count = basis.dim();
    long long divfree_rank = divergence_free_subspace(basis).dim();
    long long euler_rank = euler_multiples_subspace(basis).dim();
    bool ok = w == basis_count && m == divfree_rank && nn == euler_rank && m + nn == w;
    json row;
    row["degree"] = i;
    row["dim_component"] = w;
    row["dim_divergence_free"] = m;
    row["dim_euler_multiples"] = nn;
    row["basis_count"] = basis_count;
    row["divergence_kernel_rank"] = divfree_rank;
    row["euler_image_rank"] = euler_rank;
    row["ok"] = ok;
    rows.push_back(std::move(row));
    r.check(ok, "degree " + std::to_string(i) + ": dim " + std::to_string(w) + " = " +
                    std::to_string(m) + " + " + std::to_string(nn) + ", ranks agree");
  }
  json out;
  out["table"] = std::move(rows);
  return out;
}

// ---------------------------------------------------------------------------
// decompose

json run_decompose(Runner& r, int n, const std::string& expr) {
  Derivation d = parse_derivation(expr, n);
  r.note("decomposition of " + d.str());
  auto parts = graded_split(d);
  json comps = json::array();
  Derivation resum = Derivation::zero(n);
  for (const auto& [deg, comp] : parts) {
    json c;
    c["degree"] = deg;
    c["component"] = comp.derivation().str();
    if (deg >= 0) {
      HomogeneousDerivation ep = euler_part(comp);
      HomogeneousDerivation mp = divergence_free_part(comp);
      auto witness = is_euler_multiple(ep);
      bool ok = (mp.derivation() + ep.derivation() == comp.derivation()) &&
                divergence(mp.derivation()).is_zero() && witness.has_value();
      c["divergence_free_part"] = mp.derivation().str();
      c["euler_part"] = ep.derivation().str();
      c["euler_witness"] = witness ? witness->str() : "";
      c["ok"] = ok;
      r.check(ok, "degree " + std::to_string(deg) + ": component = divergence-free + witness*E");
    } else {
      c["divergence_free_part"] = comp.derivation().str();
      c["euler_part"] = "0";
      c["ok"] = true;
      r.note("  degree -1 has no Euler split; component kept whole");
    }
    resum += comp.derivation();
    comps.push_back(std::move(c));
  }
  r.check(resum == d, "graded components sum back to the input");
  json out;
  out["input"] = d.str();
  out["divergence"] = divergence(d).str();
  out["components"] = std::move(comps);
  return out;
}

// ---------------------------------------------------------------------------
// hw

json run_hw(Runner& r, int n, int max_degree) {
  r.note("maximal vectors, n=" + std::to_string(n));
  json rows = json::array();
  for (int m = 0; m <= max_degree; ++m) {
    const GradedBasis& basis = graded_basis(n, m);
    Subspace full_hw = maximal_vectors(basis);
    Subspace m_hw = maximal_vectors(basis, divergence_free_subspace(basis));
    Subspace n_hw = maximal_vectors(basis, euler_multiples_subspace(basis));

    std::vector<int> e1(static_cast<size_t>(n), 0);
    e1[0] = m;
    std::vector<int> e2(static_cast<size_t>(n), 0);
    e2[0] = m + 1;
    Derivation vn = Polynomial::term(Monomial::from_exponents(e1), Rational(1)) * euler(n);
    Derivation vm = Derivation::term(Monomial::from_exponents(e2), n, Rational(1));
    Vec vn_coords = basis.to_coords(HomogeneousDerivation(vn, m));
    Vec vm_coords = basis.to_coords(HomogeneousDerivation(vm, m));

    bool dims_ok = full_hw.dim() == 2 && m_hw.dim() == 1 && n_hw.dim() == 1;
    bool vectors_ok = n_hw.contains(vn_coords) && m_hw.contains(vm_coords) &&
                      full_hw.contains(vn_coords) && full_hw.contains(vm_coords);
    WeightVector wn = weight_of(basis, vn_coords);
    WeightVector wm = weight_of(basis, vm_coords);
    bool weights_ok = wn.euler_scalar == m && wm.euler_scalar == m;
    for (int a = 1; a < n; ++a) {
      weights_ok = weights_ok && wn.cartan[static_cast<size_t>(a - 1)] == (a == 1 ? m : 0);
      weights_ok = weights_ok && wm.cartan[static_cast<size_t>(a - 1)] == 1 + (a == 1 ? m + 1 : 0);
    }
    bool support_ok = true;
    for (const Vec& v : full_hw.basis())
      support_ok = support_ok && highest_vector_support_ok(basis.from_coords(v));

    json row;
    row["degree"] = m;
    row["component_hw_dim"] = full_hw.dim();
    row["divergence_free_hw"] = {{"dim", m_hw.dim()}, {"vector", vm.str()}, {"weight", weight_json(wm)}};
    row["euler_multiples_hw"] = {{"dim", n_hw.dim()}, {"vector", vn.str()}, {"weight", weight_json(wn)}};
    json vecs = json::array();
    for (const Vec& v : full_hw.basis()) vecs.push_back(vec_str(basis, v));
    row["component_hw_vectors"] = std::move(vecs);
    row["support_ok"] = support_ok;
    bool ok = dims_ok && vectors_ok && weights_ok && support_ok;
    row["ok"] = ok;
    rows.push_back(std::move(row));
    r.check(ok, "degree " + std::to_string(m) + ": hw dims 2/1/1, vectors " + vn.str() + ", " +
                    vm.str() + ", weights and support");
  }
  json out;
  out["table"] = std::move(rows);
  return out;
}

// ---------------------------------------------------------------------------
// products

json run_products(Runner& r, int n, int max_degree) {
  r.note("bracket products, n=" + std::to_string(n) + ", degrees up to " + std::to_string(max_degree));
  auto reports = verify_products(n, max_degree);
  json rows = json::array();
  long long mismatches = 0;
  for (const auto& rep : reports) {
    json row;
    row["left"] = degree_label(rep.left_family, rep.left_degree);
    row["right"] = degree_label(rep.right_family, rep.right_degree);
    row["target_degree"] = rep.left_degree + rep.right_degree;
    row["result_dim"] = rep.result_dim;
    row["classification"] = product_class_name(rep.classification);
    row["expected"] = product_class_name(rep.expected);
    row["ok"] = rep.matches;
    rows.push_back(std::move(row));
    if (!rep.matches) {
      ++mismatches;
      r.check(false, "[" + degree_label(rep.left_family, rep.left_degree) + ", " +
                         degree_label(rep.right_family, rep.right_degree) + "] classified " +
                         product_class_name(rep.classification) + ", expected " +
                         product_class_name(rep.expected));
    }
  }
  r.check(mismatches == 0, std::to_string(reports.size()) + " product cases, " +
                               std::to_string(mismatches) + " mismatches");
  json out;
  out["cases"] = std::move(rows);
  out["mismatches"] = mismatches;
  return out;
}

// ---------------------------------------------------------------------------
// iso

IsoClass expected_iso(int n, ModuleRef a, ModuleRef b) {
  if (a.kind == b.kind)
    return a.degree == b.degree ? IsoClass::iso_sl_and_gl : IsoClass::non_iso;
  int mi = a.kind == ModuleKind::divergence_free ? a.degree : b.degree;
  int nj = a.kind == ModuleKind::euler_multiples ? a.degree : b.degree;
  return (n == 2 && nj == mi + 2) ? IsoClass::iso_sl_only : IsoClass::non_iso;
}

json iso_row(Runner& r, int n, ModuleRef a, ModuleRef b) {
  IsoReport rep = classify_isomorphism(n, a, b);
  IsoClass want = expected_iso(n, a, b);
  bool ok = rep.verdict == want;
  json row;
  row["a"] = module_name(a);
  row["b"] = module_name(b);
  row["dim_a"] = rep.dim_a;
  row["dim_b"] = rep.dim_b;
  row["weight_a"] = weight_json(rep.weight_a);
  row["weight_b"] = weight_json(rep.weight_b);
  row["verdict"] = iso_class_name(rep.verdict);
  row["expected"] = iso_class_name(want);
  row["ok"] = ok;
  if (!ok)
    r.check(false, module_name(a) + " vs " + module_name(b) + ": got " +
                       iso_class_name(rep.verdict) + ", expected " + iso_class_name(want));
  return row;
}

json run_iso(Runner& r, int n, int max_degree) {
  r.note("module isomorphism classes, n=" + std::to_string(n));
  json rows = json::array();
  long long mismatches = 0;
  auto add = [&](ModuleRef a, ModuleRef b) {
    json row = iso_row(r, n, a, b);
    if (!row["ok"].get<bool>()) ++mismatches;
    rows.push_back(std::move(row));
  };
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; j <= max_degree + 2; ++j)
      add({ModuleKind::divergence_free, i}, {ModuleKind::euler_multiples, j});
  for (int i = 0; i <= max_degree; ++i)
    for (int j = i + 1; j <= max_degree; ++j) {
      add({ModuleKind::divergence_free, i}, {ModuleKind::divergence_free, j});
      add({ModuleKind::euler_multiples, i}, {ModuleKind::euler_multiples, j});
    }
  r.check(mismatches == 0, std::to_string(rows.size()) + " module pairs, " +
                               std::to_string(mismatches) + " mismatches");
  json out;
  out["pairs"] = std::move(rows);
  out["mismatches"] = mismatches;
  return out;
}

// ---------------------------------------------------------------------------
// generates

json closure_json(const ClosureTrace& trace) {
  json per = json::array();
  for (const auto& [deg, dims] : trace.per_degree) {
    json row;
    row["degree"] = deg;
    row["achieved_dim"] = dims.first;
    row["full_dim"] = dims.second;
    per.push_back(std::move(row));
  }
  json j;
  j["cutoff"] = trace.cutoff;
  j["per_degree"] = std::move(per);
  j["iterations"] = trace.iterations;
  j["stable"] = trace.stable;
  return j;
}

json run_generates(Runner& r, int n, const std::string& expr, std::optional<int> cutoff,
                   bool with_oracle, std::optional<bool> expect) {
  Derivation d = parse_derivation(expr, n);
  GenerationVerdict v = generates_criterion(d);
  r.note("generation criterion for " + d.str());
  json reasons = json::array();
  for (auto reason : v.reasons) reasons.push_back(generation_reason_name(reason));
  json comps = json::array();
  for (const auto& [deg, comp] : v.components) {
    json c;
    c["degree"] = deg;
    c["component"] = comp.derivation().str();
    comps.push_back(std::move(c));
  }
  json out;
  out["input"] = d.str();
  out["divergence"] = divergence(d).str();
  out["top_degree"] = v.top_degree;
  out["generates"] = v.generates;
  out["reasons"] = std::move(reasons);
  out["components"] = std::move(comps);
  r.note(std::string("  verdict: ") + (v.generates ? "generates" : "does not generate"));
  r.check(true, "criterion evaluated, top degree " + std::to_string(v.top_degree));
  if (with_oracle) {
    int T = cutoff.value_or(std::max(1, v.top_degree + 3));
    ClosureTrace trace = truncated_closure(d, T);
    bool filled = trace.full_up_to(T);
    bool agree = v.generates ? filled : !filled;
    out["oracle"] = closure_json(trace);
    out["oracle"]["filled"] = filled;
    out["agreement"] = agree;
    std::string deficits;
    for (int deg : trace.deficit_degrees()) deficits += " " + std::to_string(deg);
    r.check(agree, "closure oracle at cutoff " + std::to_string(T) +
                       (filled ? " fills every degree" : " leaves deficits at degrees" + deficits) +
                       ", matching the criterion");
  }
  if (expect.has_value()) {
    out["expected"] = *expect;
    r.check(v.generates == *expect,
            std::string("verdict matches --expect ") + (*expect ? "true" : "false"));
  }
  return out;
}

// ---------------------------------------------------------------------------
// randomized batteries (verify)

json run_decomposition_random(Runner& r, int n, int max_degree, int trials, Rng& rng) {
  r.note("decomposition identities on random elements, n=" + std::to_string(n));
  json out;
  long long bad = 0;
  for (int m = 0; m <= max_degree; ++m) {
    const GradedBasis& basis = graded_basis(n, m);
    for (int t = 0; t < trials; ++t) {
      HomogeneousDerivation hd = rng.homogeneous_derivation(n, m);
      HomogeneousDerivation ep = euler_part(hd);
      HomogeneousDerivation mp = divergence_free_part(hd);
      bool ok = (mp.derivation() + ep.derivation() == hd.derivation()) &&
                (euler_part(ep) == ep) && divergence(mp.derivation()).is_zero() &&
                is_euler_multiple(ep).has_value();
      if (!ok) ++bad;
    }
    bool inv_m = is_invariant(basis, divergence_free_subspace(basis));
    bool inv_n = is_invariant(basis, euler_multiples_subspace(basis));
    r.check(inv_m && inv_n,
            "degree " + std::to_string(m) + ": both parts closed under all " +
                std::to_string(n * n) + " degree-0 generators");
    if (!inv_m || !inv_n) ++bad;
  }
  r.check(bad == 0, std::to_string(trials) + " random elements per degree satisfy the projection identities");
  out["trials_per_degree"] = trials;
  out["failures"] = bad;
  return out;
}

json run_laws(Runner& r, int n, int trials, Rng& rng) {
  r.note("bracket and divergence laws on random elements, n=" + std::to_string(n));
  long long bad = 0;
  for (int t = 0; t < trials; ++t) {
    Derivation a = rng.derivation(n, 3);
    Derivation b = rng.derivation(n, 3);
    Derivation c = rng.derivation(n, 2);
    Polynomial f = rng.polynomial(n, static_cast<int>(rng.range(0, 3)), 3);
    Derivation jac = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
    bool ok = jac.is_zero();
    ok = ok && divergence(a + b) == divergence(a) + divergence(b);
    ok = ok && divergence(a - b) == divergence(a) - divergence(b);
    ok = ok && divergence(f * a) == f * divergence(a) + a.apply(f);
    ok = ok && divergence(bracket(a, b)) == a.apply(divergence(b)) - b.apply(divergence(a));
    if (!ok) ++bad;
  }
  r.check(bad == 0, std::to_string(trials) + " random triples satisfy the Jacobi and divergence identities");
  json out;
  out["trials"] = trials;
  out["failures"] = bad;
  return out;
}

json run_generation_battery(Runner& r, int n, Rng& rng) {
  r.note("generation criterion vs closure oracle, n=" + std::to_string(n));
  std::vector<std::string> fixed = {
      "x1^2 d1",
      "x1 E",
      "x1^2 d2",
      "x1^3 d1",
  };
  json rows = json::array();
  long long disagreements = 0;
  auto run_one = [&](const Derivation& d) {
    GenerationVerdict v = generates_criterion(d);
    int T = std::max(1, v.top_degree + 3);
    ClosureTrace trace = truncated_closure(d, T);
    bool filled = trace.full_up_to(T);
    bool agree = v.generates ? filled : !filled;
    if (!agree) ++disagreements;
    json row;
    row["input"] = d.str();
    row["generates"] = v.generates;
    row["cutoff"] = T;
    row["oracle_filled"] = filled;
    row["ok"] = agree;
    rows.push_back(std::move(row));
  };
  for (const auto& e : fixed) run_one(parse_derivation(e, n));
  for (int t = 0; t < 6; ++t) run_one(rng.derivation(n, 2, 3));
  r.check(disagreements == 0, std::to_string(rows.size()) + " derivations, criterion and oracle agree");
  json out;
  out["cases"] = std::move(rows);
  out["disagreements"] = disagreements;
  return out;
}

// ---------------------------------------------------------------------------
// verify

json run_verify(Runner& r, int n, int max_degree, uint64_t seed) {
  Rng rng(seed);
  json out;
  out["dims"] = run_dims(r, n, max_degree);
  out["decomposition"] = run_decomposition_random(r, n, max_degree, 20, rng);
  out["highest_weights"] = run_hw(r, n, max_degree);
  out["products"] = run_products(r, n, max_degree);
  out["iso"] = run_iso(r, n, max_degree);
  out["generation"] = run_generation_battery(r, n, rng);
  out["algebra_laws"] = run_laws(r, n, 100, rng);
  return out;
}

// ---------------------------------------------------------------------------

int emit(const Runner& r, const std::string& command, json parameters, json results,
         const std::string& json_path) {
  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["artifact"] = {{"name", kArtifactName}, {"version", kVersion}};
  report["command"] = command;
  report["parameters"] = std::move(parameters);
  report["results"] = std::move(results);
  report["summary"] = {{"checks", r.checks}, {"failures", r.failures}, {"pass", r.pass()}};
  for (const auto& line : r.lines) std::cout << line << "\n";
  std::cout << "summary: " << r.checks << " checks, " << r.failures << " failures -> "
            << (r.pass() ? "pass" : "FAIL") << "\n";
  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    f << report.dump(2) << "\n";
  }
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the graded Lie algebra of polynomial vector fields"};
  app.require_subcommand(1);

  int n = 2;
  int max_degree = 3;
  std::string json_path;
  std::string expr;
  uint64_t seed = 0;
  int cutoff = -1;
  bool oracle = false;

  auto add_common = [&](CLI::App* cmd, bool needs_expr) {
    cmd->add_option("--n", n, "number of variables (>= 2)")->check(CLI::Range(2, 8));
    cmd->add_option("--json", json_path, "write the JSON report to this path");
    if (needs_expr)
      cmd->add_option("--expr", expr, "derivation expression, e.g. \"x1^2 d1 - 2/3*x1*x2 d2\"")
          ->required();
  };

  CLI::App* dims_cmd = app.add_subcommand("dims", "dimension formulas vs basis/rank enumeration");
  add_common(dims_cmd, false);
  dims_cmd->add_option("--max-degree", max_degree, "largest graded degree")->check(CLI::Range(0, 12));

  CLI::App* dec_cmd = app.add_subcommand("decompose", "split a derivation into graded and Euler/divergence-free parts");
  add_common(dec_cmd, true);

  CLI::App* hw_cmd = app.add_subcommand("hw", "maximal vectors and weights per degree");
  add_common(hw_cmd, false);
  hw_cmd->add_option("--max-degree", max_degree, "largest graded degree")->check(CLI::Range(0, 8));

  CLI::App* prod_cmd = app.add_subcommand("products", "bracket-span table between graded submodules");
  add_common(prod_cmd, false);
  prod_cmd->add_option("--max-degree", max_degree, "largest target degree")->check(CLI::Range(1, 8));

  CLI::App* iso_cmd = app.add_subcommand("iso", "isomorphism classes of the graded submodules");
  add_common(iso_cmd, false);
  iso_cmd->add_option("--max-degree", max_degree, "largest module degree")->check(CLI::Range(0, 8));

  CLI::App* gen_cmd = app.add_subcommand("generates", "generation criterion for <L, D>");
  add_common(gen_cmd, true);
  gen_cmd->add_flag("--oracle", oracle, "also run the truncated closure oracle");
  gen_cmd->add_option("--cutoff", cutoff, "closure truncation degree (default: top degree + 3)")
      ->check(CLI::Range(1, 10));
  std::string expect;
  gen_cmd->add_option("--expect", expect, "fail unless the verdict matches (true|false)")
      ->check(CLI::IsMember({"true", "false"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run every verification family");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--max-degree", max_degree, "largest graded degree")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--seed", seed, "seed for the randomized batteries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Runner r;
    if (dims_cmd->parsed()) {
      json params = {{"n", n}, {"max_degree", max_degree}};
      return emit(r, "dims", params, run_dims(r, n, max_degree), json_path);
    }
    if (dec_cmd->parsed()) {
      json params = {{"n", n}, {"expr", expr}};
      return emit(r, "decompose", params, run_decompose(r, n, expr), json_path);
    }
    if (hw_cmd->parsed()) {
      json params = {{"n", n}, {"max_degree", max_degree}};
      return emit(r, "hw", params, run_hw(r, n, max_degree), json_path);
    }
    if (prod_cmd->parsed()) {
      json params = {{"n", n}, {"max_degree", max_degree}};
      return emit(r, "products", params, run_products(r, n, max_degree), json_path);
    }
    if (iso_cmd->parsed()) {
      json params = {{"n", n}, {"max_degree", max_degree}};
      return emit(r, "iso", params, run_iso(r, n, max_degree), json_path);
    }
    if (gen_cmd->parsed()) {
      std::optional<int> T;
      if (cutoff > 0) T = cutoff;
      std::optional<bool> want;
      if (!expect.empty()) want = (expect == "true");
      json params = {{"n", n}, {"expr", expr}, {"oracle", oracle}};
      params["cutoff"] = cutoff > 0 ? json(cutoff) : json(nullptr);
      return emit(r, "generates", params, run_generates(r, n, expr, T, oracle, want), json_path);
    }
    json params = {{"n", n}, {"max_degree", max_degree}, {"seed", seed}};
    return emit(r, "verify", params, run_verify(r, n, max_degree, seed), json_path);
  } catch (const ParseError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
