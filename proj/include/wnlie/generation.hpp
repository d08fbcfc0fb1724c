#ifndef WNLIE_GENERATION_HPP
#define WNLIE_GENERATION_HPP

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wnlie/graded.hpp"
#include "wnlie/reptheory.hpp"

namespace wnlie {

/// True iff the divergence is a constant polynomial. Derivations with this
/// property form a subalgebra, the ambient algebra of the generation
/// question.
inline bool wc_membership(const Derivation& d) { return divergence(d).total_degree() <= 0; }

enum class GenerationReason {
  div_constant,
  top_degree_below_one,
  degree_one_euler_multiple,
  criterion_met,
};

inline const char* generation_reason_name(GenerationReason r) {
  switch (r) {
    case GenerationReason::div_constant: return "div_constant";
    case GenerationReason::top_degree_below_one: return "top_degree_below_one";
    case GenerationReason::degree_one_euler_multiple: return "degree_one_euler_multiple";
    default: return "criterion_met";
  }
}

/// Decision for: does D, together with the degree -1 and degree 0
/// components, generate the whole algebra? True iff the top degree k of D is
/// at least 1, the divergence of D is non-constant, and when k = 1 the top
/// component is not a polynomial multiple of the Euler field. All failing
/// conditions are listed.
struct GenerationVerdict {
  bool generates = false;
  std::vector<GenerationReason> reasons;
  int top_degree = -2;
  std::map<int, HomogeneousDerivation> components;
};

inline GenerationVerdict generates_criterion(const Derivation& d) {
  GenerationVerdict v;
  v.components = graded_split(d);
  v.top_degree = top_degree(d);
  if (v.top_degree < 1) v.reasons.push_back(GenerationReason::top_degree_below_one);
  if (wc_membership(d)) v.reasons.push_back(GenerationReason::div_constant);
  if (v.top_degree == 1 && is_euler_multiple(v.components.at(1)))
    v.reasons.push_back(GenerationReason::degree_one_euler_multiple);
  if (v.reasons.empty()) {
    v.reasons.push_back(GenerationReason::criterion_met);
    v.generates = true;
  }
  return v;
}

/// Per-degree record of a truncated closure run.
struct ClosureTrace {
  int cutoff = 0;
  std::map<int, std::pair<long long, long long>> per_degree;  // degree -> (achieved, full)
  long long iterations = 0;  // bracket evaluations performed
  bool stable = false;

  bool full_up_to(int top) const {
    for (const auto& [deg, dims] : per_degree) {
      if (deg > top) break;
      if (dims.first != dims.second) return false;
    }
    return true;
  }
  std::vector<int> deficit_degrees() const {
    std::vector<int> out;
    for (const auto& [deg, dims] : per_degree)
      if (dims.first != dims.second) out.push_back(deg);
    return out;
  }
};

/// Closure of {degree -1 component, degree 0 component, graded parts of D}
/// under the bracket, truncated at the given degree: brackets landing above
/// the cutoff are discarded, so per-degree achieved dimensions are a sound
/// lower bound for the true closure. Seeds above the cutoff are rejected.
///
/// Worklist over an append-only generator list: every pair of generators is
/// bracketed once, skipping pairs whose target degree is already full or out
/// of range; generators are added only when they grow a span.
inline ClosureTrace truncated_closure(const Derivation& d, int cutoff) {
  int n = d.nvars();
  if (cutoff < 1) throw std::invalid_argument("truncated_closure: cutoff must be >= 1");
  auto parts = graded_split(d);
  if (!parts.empty() && parts.rbegin()->first > cutoff)
    throw std::invalid_argument("truncated_closure: seed component above the cutoff");

  std::vector<Subspace> spans;
  spans.reserve(static_cast<size_t>(cutoff) + 2);
  for (int deg = -1; deg <= cutoff; ++deg) spans.emplace_back(graded_basis(n, deg).dim());
  auto span_of = [&](int deg) -> Subspace& { return spans[static_cast<size_t>(deg + 1)]; };
  auto all_full = [&]() {
    for (const auto& s : spans)
      if (!s.is_full()) return false;
    return true;
  };

  struct Gen {
    int deg;
    Vec v;
  };
  std::vector<Gen> gens;
  std::deque<std::pair<size_t, size_t>> pairs;
  ClosureTrace trace;
  trace.cutoff = cutoff;

  auto offer = [&](int deg, Vec v) {
    Vec copy = v;
    if (!span_of(deg).insert(std::move(copy))) return;
    gens.push_back(Gen{deg, std::move(v)});
    size_t idx = gens.size() - 1;
    for (size_t other = 0; other <= idx; ++other) pairs.emplace_back(other, idx);
  };

  for (int deg : {-1, 0}) {
    const GradedBasis& b = graded_basis(n, deg);
    for (int k = 0; k < b.dim(); ++k) {
      Vec e(static_cast<size_t>(b.dim()));
      e[static_cast<size_t>(k)] = 1;
      offer(deg, std::move(e));
    }
  }
  for (const auto& [deg, comp] : parts) offer(deg, graded_basis(n, deg).to_coords(comp));

  while (!pairs.empty() && !all_full()) {
    auto [ia, ib] = pairs.front();
    pairs.pop_front();
    const Gen& a = gens[ia];
    const Gen& b = gens[ib];
    int target = a.deg + b.deg;
    if (target < -1 || target > cutoff) continue;
    if (span_of(target).is_full()) continue;
    ++trace.iterations;
    Vec w = bracket_coords(graded_basis(n, a.deg), a.v, graded_basis(n, b.deg), b.v);
    offer(target, std::move(w));
  }

  for (int deg = -1; deg <= cutoff; ++deg)
    trace.per_degree[deg] = {span_of(deg).dim(), static_cast<long long>(dim_graded(n, deg))};
  trace.stable = true;
  return trace;
}

}  // namespace wnlie

#endif  // WNLIE_GENERATION_HPP
