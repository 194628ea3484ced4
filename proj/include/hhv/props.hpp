#pragma once

#include <optional>
#include <vector>

#include "hhv/hhcore.hpp"

namespace hhv {

// One of the nine special-means corollaries: index k, interval, and the
// parameters its source inequality needs. k in {2,5,8} instantiates x^n and
// needs n >= 2; k in {4,5,6} needs q > 1; k in {7,8,9} needs q >= 1.
struct PropParams {
    int k = 1;
    Interval iv{1.0, 2.0};
    std::optional<int> n;
    std::optional<double> q;
};

struct PropReport {
    int k = 0;
    double a = 0.0;
    double b = 0.0;
    std::optional<int> n;
    std::optional<double> q;
    double lhs_stated = 0.0;      // |printed mean-form expression|
    ValueWithError lhs_true;      // deviation of the instantiating function
    double rhs_stated = 0.0;      // printed closed-form bound
    double rhs_derived = 0.0;     // the source inequality applied generically
    bool lhs_discrepancy = false; // stated LHS disagrees with the true deviation
    bool rhs_discrepancy = false; // stated RHS disagrees with the generic bound
    bool holds_derived = false;   // |lhs_true| <= rhs_derived + slack
};

PropReport proposition(const PropParams& params, const Tolerances& tol = {});

struct PropSweep {
    std::vector<PropReport> rows;
    int lhs_flags[10] = {0};  // indexed by k, slot 0 unused
    int rhs_flags[10] = {0};
};

// Cartesian sweep in deterministic order (interval, then k ascending, then n,
// then q); cells whose parameter constraints a given (n, q) cannot satisfy are
// skipped, so e.g. an empty q_list runs k in {1,2,3} only.
PropSweep prop_sweep(const std::vector<Interval>& iv_list, const std::vector<int>& n_list,
                     const std::vector<double>& q_list, const Tolerances& tol = {});

}  // namespace hhv
