// SPDX-License-Identifier: Apache-2.0
//
// Built-in scenario families and parameter sweeps: fully-overlapped supports
// (case A), symmetric spread with equal (case B) or different (case C) array
// lengths, the overlap sweep behind the classic region-collapse picture, and
// a base-station length sweep.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdx/errors.hpp"
#include "fdx/interval_set.hpp"
#include "fdx/rational.hpp"
#include "fdx/region.hpp"
#include "fdx/scenario.hpp"

namespace fdx {

/// Case A: every scattering support equals `psi`; the base station's arrays
/// have half-length l_bs, the users' arrays l_usr.
inline Scenario case_a(const Rational& l_bs, const Rational& l_usr, const IntervalSet& psi) {
    if (psi.empty())
        throw InvalidScenario("case A needs a nonempty scattering support");
    Scenario s;
    s.l_t1 = l_usr;
    s.l_t2 = l_bs;
    s.l_r1 = l_bs;
    s.l_r2 = l_usr;
    s.psi_t11 = s.psi_t21 = s.psi_t22 = s.psi_t12 = psi;
    s.psi_r11 = s.psi_r12 = s.psi_r22 = s.psi_r21 = psi;
    s.label = "case-a l_bs=" + l_bs.to_string() + " l_usr=" + l_usr.to_string() +
              " psi=" + psi.to_string();
    require_valid(s);
    return s;
}

/// Case B: equal half-length l on all four arrays; the four forward supports
/// equal psi_fwd and the four backscatter supports equal psi_back.
inline Scenario case_b(const Rational& l, const IntervalSet& psi_fwd, const IntervalSet& psi_back) {
    Scenario s;
    s.l_t1 = s.l_t2 = s.l_r1 = s.l_r2 = l;
    s.psi_t11 = s.psi_t22 = psi_fwd;
    s.psi_r11 = s.psi_r22 = psi_fwd;
    s.psi_t12 = s.psi_t21 = psi_back;
    s.psi_r12 = s.psi_r21 = psi_back;
    s.label = "case-b l=" + l.to_string() + " fwd=" + psi_fwd.to_string() +
              " back=" + psi_back.to_string();
    require_valid(s);
    return s;
}

/// Case C: the symmetric supports of case B with the split array lengths of
/// case A (base station l_bs, users l_usr).
inline Scenario case_c(const Rational& l_bs, const Rational& l_usr, const IntervalSet& psi_fwd,
                       const IntervalSet& psi_back) {
    Scenario s = case_b(Rational(1), psi_fwd, psi_back);
    s.l_t1 = l_usr;
    s.l_t2 = l_bs;
    s.l_r1 = l_bs;
    s.l_r2 = l_usr;
    s.label = "case-c l_bs=" + l_bs.to_string() + " l_usr=" + l_usr.to_string() +
              " fwd=" + psi_fwd.to_string() + " back=" + psi_back.to_string();
    require_valid(s);
    return s;
}

/// One sweep sample: the swept parameter, the per-flow maxima, the largest
/// achievable sums inside the full-duplex and self-interference-only
/// regions, and the region classification.
struct SweepRow {
    Rational param;
    Rational d1_max;
    Rational d2_max;
    Rational d_sum_fd;
    Rational d_sum_fdp;
    std::string cls;
    bool rect_fd = false;
};

/// An ordered sweep with the name of the swept parameter.
struct SweepResult {
    std::string param_name;
    std::vector<SweepRow> rows;
};

namespace detail {

inline SweepRow sweep_row(const Rational& param, const Scenario& s) {
    const FdBounds b = fd_bounds(s);
    const Classification c = compare_regions(s);
    SweepRow row;
    row.param = param;
    row.d1_max = b.d1_max;
    row.d2_max = b.d2_max;
    row.d_sum_fd = fd_region(s).max_sum();
    row.d_sum_fdp = fdp_region(s).max_sum();
    row.cls = c.text();
    row.rect_fd = c.fd_rectangular;
    return row;
}

} // namespace detail

/// Sweeps the forward/backscatter overlap w from 0 to 1 in `steps` equal
/// increments: the unit-measure forward window [-1+w, w) slides across the
/// fixed backscatter window [0, 1), so |psi_fwd n psi_back| = w exactly.
/// All four arrays share half-length l (case B geometry).
inline SweepResult overlap_sweep(const Rational& l, std::int64_t steps) {
    if (steps < 2)
        throw Error("overlap sweep needs at least 2 steps (got " + std::to_string(steps) + ")");
    const IntervalSet back = IntervalSet::single(Rational(0), Rational(1));
    SweepResult result;
    result.param_name = "overlap";
    for (std::int64_t k = 0; k < steps; ++k) {
        const Rational w(k, steps - 1);
        const IntervalSet fwd = IntervalSet::single(w - Rational(1), w);
        result.rows.push_back(detail::sweep_row(w, case_b(l, fwd, back)));
    }
    return result;
}

/// Sweeps the base-station half-length over `l_bs_values` (strictly
/// increasing) with the users fixed at l_usr and case C support geometry.
inline SweepResult length_sweep(const Rational& l_usr, const std::vector<Rational>& l_bs_values,
                                const IntervalSet& psi_fwd, const IntervalSet& psi_back) {
    if (l_bs_values.empty())
        throw Error("length sweep needs at least one base-station half-length");
    for (std::size_t i = 1; i < l_bs_values.size(); ++i)
        if (!(l_bs_values[i - 1] < l_bs_values[i]))
            throw Error("length sweep values must be strictly increasing (" +
                        l_bs_values[i - 1].to_string() + " then " + l_bs_values[i].to_string() +
                        ")");
    SweepResult result;
    result.param_name = "l_bs";
    for (const Rational& l_bs : l_bs_values)
        result.rows.push_back(detail::sweep_row(l_bs, case_c(l_bs, l_usr, psi_fwd, psi_back)));
    return result;
}

} // namespace fdx
