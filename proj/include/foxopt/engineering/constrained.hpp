#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "foxopt/problem.hpp"

#include "json.hpp"

namespace foxopt::eng {

/// A box-bounded problem plus inequality constraints g_i(x) <= 0, handled by
/// a static quadratic penalty. Variables flagged in integer_mask are rounded
/// to the nearest integer before any evaluation, so the search itself stays
/// continuous.
struct ConstrainedProblem {
    BoundedProblem base; // base.objective is the raw (unpenalized) cost
    std::vector<std::function<double(const Vec&)>> constraints;
    std::vector<bool> integer_mask; // empty = all continuous
    double penalty_coefficient = 1e6;
    Vec reference_feasible; // a shipped point with zero violation
};

/// Rounds integer-flagged coordinates to the nearest integer.
Vec apply_integrality(const ConstrainedProblem& problem, Vec x);

/// Raw cost after integrality rounding.
double raw_objective(const ConstrainedProblem& problem, const Vec& x);

/// Per-constraint violations max(0, g_i(x)) after integrality rounding.
Vec violations(const ConstrainedProblem& problem, const Vec& x);

/// f(x) + penalty_coefficient * sum of squared violations. Equals the raw
/// objective exactly whenever x is feasible.
double penalized(const ConstrainedProblem& problem, const Vec& x);

/// View usable by the optimizers: objective = penalized(problem, x).
BoundedProblem as_bounded(const ConstrainedProblem& problem);

/// All ten design problems, in catalog order:
/// bcp, cbp, csd, csp, gtp, pvd, pld, srp, tcp, wbp.
const std::vector<ConstrainedProblem>& problem_catalog();

/// Lookup by short name; throws std::invalid_argument when unknown.
const ConstrainedProblem& find(std::string_view name);

/// Machine-readable catalog (name, dims, bounds, constraint count).
nlohmann::json catalog_json();

// Individual problem builders.
ConstrainedProblem make_bcp();
ConstrainedProblem make_cbp();
ConstrainedProblem make_csd();
ConstrainedProblem make_csp();
ConstrainedProblem make_gtp();
ConstrainedProblem make_pld();
ConstrainedProblem make_pvd();
ConstrainedProblem make_srp();
ConstrainedProblem make_tcp();
ConstrainedProblem make_wbp();

} // namespace foxopt::eng
