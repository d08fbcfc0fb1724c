// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 8 drives the CLI named by the WNLIE_BIN environment
// variable.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wnlie/wnlie.hpp"

using namespace wnlie;

namespace {

struct Check {
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string& detail) {
    if (!cond && ok) {
      ok = false;
      why = detail;
    }
  }
};

std::string fmt(long long v) { return std::to_string(v); }

Vec coords_of(const std::string& s, int n, int m) {
  return graded_basis(n, m).to_coords(HomogeneousDerivation(parse_derivation(s, n), m));
}

Check dimension_formulas() {
  Check c;
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i <= 5; ++i) {
      const GradedBasis& basis = graded_basis(n, i);
      std::string at = "n=" + fmt(n) + " degree=" + fmt(i);
      long long w = dim_graded(n, i);
      long long m = dim_divergence_free(n, i);
      long long e = dim_euler_multiples(n, i);
      c.expect(w == n * binomial(n + i, i + 1), "component formula at " + at);
      c.expect(w == static_cast<long long>(n) *
                        static_cast<long long>(monomials_of_degree(n, i + 1).size()),
               "component count at " + at);
      c.expect(m == (n + i + 1) * binomial(n + i - 1, i + 1), "kernel formula at " + at);
      c.expect(m == divergence_free_subspace(basis).dim(), "kernel rank at " + at);
      c.expect(e == binomial(n + i - 1, i), "euler formula at " + at);
      c.expect(e == euler_multiples_subspace(basis).dim(), "euler rank at " + at);
      c.expect(m + e == w, "direct sum of dimensions at " + at);
    }
  }
  c.expect(dim_graded(2, 1) == 6 && dim_divergence_free(2, 1) == 4 &&
               dim_euler_multiples(2, 1) == 2,
           "spot values at n=2 degree=1");
  c.expect(dim_graded(3, 0) == 9 && dim_divergence_free(3, 0) == 8 &&
               dim_euler_multiples(3, 0) == 1,
           "spot values at n=3 degree=0");
  return c;
}

Check decomposition_identities() {
  Check c;
  Rng rng(20240814);
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= 5; ++m) {
      std::string at = "n=" + fmt(n) + " degree=" + fmt(m);
      for (int trial = 0; trial < 100; ++trial) {
        HomogeneousDerivation hd = rng.homogeneous_derivation(n, m);
        HomogeneousDerivation e = euler_part(hd);
        HomogeneousDerivation f = divergence_free_part(hd);
        c.expect(e.derivation() + f.derivation() == hd.derivation(),
                 "projections do not sum to the identity at " + at);
        c.expect(euler_part(e) == e, "euler projection not idempotent at " + at);
        c.expect(divergence(f.derivation()).is_zero(),
                 "divergence-free part has divergence at " + at);
      }
      const GradedBasis& basis = graded_basis(n, m);
      Subspace M = divergence_free_subspace(basis);
      Subspace N = euler_multiples_subspace(basis);
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          for (const Vec& row : M.basis()) {
            Vec img = divergence_coords(basis, apply_generator(basis, a, b, row));
            bool zero = true;
            for (const auto& x : img) zero = zero && x.is_zero();
            c.expect(zero, "kernel not closed under x" + fmt(a) + " d" + fmt(b) + " at " + at);
          }
          for (const Vec& row : N.basis())
            c.expect(N.contains(apply_generator(basis, a, b, row)),
                     "euler line not closed under x" + fmt(a) + " d" + fmt(b) + " at " + at);
        }
      }
    }
  }
  return c;
}

Check maximal_vector_certificates() {
  Check c;
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      std::string at = "n=" + fmt(n) + " degree=" + fmt(m);
      const GradedBasis& basis = graded_basis(n, m);
      Subspace full_mv = maximal_vectors(basis);
      Subspace m_mv = maximal_vectors(basis, divergence_free_subspace(basis));
      Subspace n_mv = maximal_vectors(basis, euler_multiples_subspace(basis));
      c.expect(full_mv.dim() == 2, "component carries " + fmt(full_mv.dim()) +
                                       " maximal lines at " + at);
      c.expect(m_mv.dim() == 1, "kernel maximal space at " + at);
      c.expect(n_mv.dim() == 1, "euler maximal space at " + at);

      std::string x1m = m == 0 ? "" : "x1^" + fmt(m) + "*";
      Vec euler_vec = coords_of(x1m + "E", n, m);
      Vec free_vec = coords_of("x1^" + fmt(m + 1) + " d" + fmt(n), n, m);
      c.expect(n_mv == Subspace::span(basis.dim(), {euler_vec}),
               "euler maximal vector is not the expected line at " + at);
      c.expect(m_mv == Subspace::span(basis.dim(), {free_vec}),
               "kernel maximal vector is not the expected line at " + at);

      WeightVector expect_n, expect_m;
      for (int a = 1; a < n; ++a) {
        expect_n.cartan.push_back(a == 1 ? m : 0);
        expect_m.cartan.push_back(1 + (a == 1 ? m + 1 : 0));
      }
      expect_n.euler_scalar = m;
      expect_m.euler_scalar = m;
      c.expect(weight_of(basis, euler_vec) == expect_n, "euler weight at " + at);
      c.expect(weight_of(basis, free_vec) == expect_m, "kernel weight at " + at);

      for (const Vec& v : full_mv.basis())
        c.expect(highest_vector_support_ok(basis.from_coords(v)),
                 "maximal vector violates the support shape at " + at);
    }
  }
  return c;
}

Check bracket_product_table() {
  Check c;
  for (int n = 2; n <= 3; ++n) {
    auto reports = verify_products(n, 4);
    long long mismatches = 0;
    for (const auto& r : reports)
      if (!r.matches) ++mismatches;
    c.expect(mismatches == 0,
             fmt(mismatches) + " mismatched products at n=" + fmt(n));
    c.expect(!reports.empty(), "empty product table at n=" + fmt(n));
  }
  return c;
}

Check module_isomorphism_classes() {
  Check c;
  for (int n = 2; n <= 3; ++n) {
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 5; ++j) {
        IsoReport rep = classify_isomorphism(n, {ModuleKind::divergence_free, i},
                                             {ModuleKind::euler_multiples, j});
        IsoClass want = (n == 2 && j == i + 2) ? IsoClass::iso_sl_only : IsoClass::non_iso;
        c.expect(rep.verdict == want, std::string("M[") + fmt(i) + "] vs N[" + fmt(j) +
                                          "] classified " + iso_class_name(rep.verdict) +
                                          " at n=" + fmt(n));
        if (n == 2 && j == i + 2)
          c.expect(rep.dim_a == i + 3 && rep.dim_b == i + 3,
                   "isomorphic pair dimensions at i=" + fmt(i));
      }
    }
    for (int i = 0; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        for (ModuleKind kind : {ModuleKind::divergence_free, ModuleKind::euler_multiples}) {
          IsoReport rep = classify_isomorphism(n, {kind, i}, {kind, j});
          c.expect(rep.verdict == IsoClass::non_iso,
                   std::string(kind == ModuleKind::divergence_free ? "M" : "N") + "[" + fmt(i) +
                       "] vs [" + fmt(j) + "] not non_iso at n=" + fmt(n));
        }
      }
    }
  }
  return c;
}

Check generation_agreement() {
  Check c;
  struct Canonical {
    const char* expr;
    bool verdict;
  };
  const Canonical canonical[] = {
      {"x1^2 d1", true},
      {"x1 E", false},
      {"x1^2 d2", false},
      {"x1^3 d1", true},
  };
  long long battery = 0;
  Rng rng(424242);
  for (int n = 2; n <= 3; ++n) {
    std::vector<Derivation> inputs;
    for (const Canonical& k : canonical) {
      Derivation d = parse_derivation(k.expr, n);
      GenerationVerdict v = generates_criterion(d);
      c.expect(v.generates == k.verdict,
               std::string(k.expr) + " verdict at n=" + fmt(n));
      inputs.push_back(std::move(d));
    }
    for (int trial = 0; trial < 13; ++trial) inputs.push_back(rng.derivation(n, 3, 4));
    for (const Derivation& d : inputs) {
      GenerationVerdict v = generates_criterion(d);
      int T = std::max(1, v.top_degree + 3);
      bool filled = truncated_closure(d, T).full_up_to(T);
      ++battery;
      c.expect(filled == v.generates,
               "criterion and closure disagree on " + d.str() + " at n=" + fmt(n));
    }
  }
  c.expect(battery >= 30, "battery too small: " + fmt(battery));
  return c;
}

Check algebraic_identities() {
  Check c;
  Rng rng(616);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 500; ++trial) {
      Derivation a = rng.derivation(n, 2, 4);
      Derivation b = rng.derivation(n, 2, 4);
      Derivation d3 = rng.derivation(n, 2, 4);
      Polynomial f = rng.polynomial(n, 2, 2) + rng.polynomial(n, 1, 1);
      Derivation jac = bracket(bracket(a, b), d3) + bracket(bracket(b, d3), a) +
                       bracket(bracket(d3, a), b);
      c.expect(jac.is_zero(), "jacobi identity failed at n=" + fmt(n));
      c.expect(divergence(a + b) == divergence(a) + divergence(b),
               "divergence not additive at n=" + fmt(n));
      c.expect(divergence(a - b) == divergence(a) - divergence(b),
               "divergence not subtractive at n=" + fmt(n));
      c.expect(divergence(f * a) == f * divergence(a) + a.apply(f),
               "product rule failed at n=" + fmt(n));
      c.expect(divergence(bracket(a, b)) ==
                   a.apply(divergence(b)) - b.apply(divergence(a)),
               "bracket divergence rule failed at n=" + fmt(n));
    }
  }
  return c;
}

int run_quiet(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool only_integral_numbers(const nlohmann::json& j) {
  if (j.is_number_float()) return false;
  if (j.is_object() || j.is_array())
    for (const auto& item : j)
      if (!only_integral_numbers(item)) return false;
  return true;
}

Check deterministic_reports() {
  Check c;
  const char* bin = std::getenv("WNLIE_BIN");
  if (bin == nullptr) {
    c.expect(false, "WNLIE_BIN is not set");
    return c;
  }
  std::string base = std::string("\"") + bin + "\" verify --n 2 --max-degree 3 --seed 42 --json ";
  int rc_a = run_quiet(base + "acceptance_report_a.json > /dev/null 2>&1");
  int rc_b = run_quiet(base + "acceptance_report_b.json > /dev/null 2>&1");
  c.expect(rc_a == 0, "first run exited " + fmt(rc_a));
  c.expect(rc_b == 0, "second run exited " + fmt(rc_b));
  std::string a = slurp("acceptance_report_a.json");
  std::string b = slurp("acceptance_report_b.json");
  std::remove("acceptance_report_a.json");
  std::remove("acceptance_report_b.json");
  c.expect(!a.empty(), "first report is empty");
  c.expect(a == b, "reports differ between runs");

  nlohmann::json report = nlohmann::json::parse(a, nullptr, false);
  c.expect(!report.is_discarded(), "report is not valid JSON");
  if (!report.is_discarded()) {
    for (const char* key : {"schema_version", "artifact", "command", "parameters", "results",
                            "summary"})
      c.expect(report.contains(key), std::string("report lacks the ") + key + " field");
    c.expect(report.contains("summary") && report["summary"].value("pass", false),
             "verify run did not pass");
    c.expect(only_integral_numbers(report), "report contains floating point numbers");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Check (*run)();
  };
  const Criterion criteria[] = {
      {"dimension formulas", dimension_formulas},
      {"decomposition identities and invariance", decomposition_identities},
      {"maximal vector certificates", maximal_vector_certificates},
      {"bracket product table", bracket_product_table},
      {"module isomorphism classes", module_isomorphism_classes},
      {"generation criterion vs closure oracle", generation_agreement},
      {"algebraic identities", algebraic_identities},
      {"deterministic reports", deterministic_reports},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& crit : criteria) {
    ++index;
    Check c = crit.run();
    if (c.ok) {
      std::cout << "criterion " << index << " (" << crit.label << "): PASS\n";
    } else {
      std::cout << "criterion " << index << " (" << crit.label << "): FAIL - " << c.why << "\n";
      ++failures;
    }
    std::cout.flush();
  }
  if (failures != 0) std::cout << failures << " of 8 criteria failed\n";
  return failures == 0 ? 0 : 1;
}
