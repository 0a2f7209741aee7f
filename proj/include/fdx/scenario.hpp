// SPDX-License-Identifier: Apache-2.0
//
// Three-node network description: four array half-lengths and eight
// scattering supports, plus the signal-space / operator dimension formulas.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdx/errors.hpp"
#include "fdx/interval_set.hpp"
#include "fdx/rational.hpp"

namespace fdx {

/// Complete description of the three-node full-duplex network.
///
/// Flow 1 is the uplink (T1 -> R1, user transmitter to base-station
/// receiver); flow 2 is the downlink (T2 -> R2, base-station transmitter
/// to user receiver). H12 is the base station's self-interference channel
/// (T2 into R1) and H21 is the inter-node interference channel (T1 into R2).
/// Lengths are array HALF-lengths normalized by carrier wavelength: an
/// array with half-length L has physical length 2L and every dimension
/// formula writes the factor 2 explicitly.
struct Scenario {
    Rational l_t1; ///< half-length of T1 (user transmit array)
    Rational l_t2; ///< half-length of T2 (base-station transmit array)
    Rational l_r1; ///< half-length of R1 (base-station receive array)
    Rational l_r2; ///< half-length of R2 (user receive array)

    IntervalSet psi_t11; ///< departures from T1 scattering toward R1 (signal)
    IntervalSet psi_t21; ///< departures from T1 scattering toward R2 (inter-node interference)
    IntervalSet psi_t22; ///< departures from T2 scattering toward R2 (signal)
    IntervalSet psi_t12; ///< departures from T2 scattering toward R1 (self-interference)
    IntervalSet psi_r11; ///< arrivals at R1 from T1 (signal)
    IntervalSet psi_r12; ///< arrivals at R1 from T2 (self-interference)
    IntervalSet psi_r22; ///< arrivals at R2 from T2 (signal)
    IntervalSet psi_r21; ///< arrivals at R2 from T1 (inter-node interference)

    std::string label; ///< free-form description

    friend bool operator==(const Scenario& a, const Scenario& b) {
        return a.l_t1 == b.l_t1 && a.l_t2 == b.l_t2 && a.l_r1 == b.l_r1 && a.l_r2 == b.l_r2 &&
               a.psi_t11 == b.psi_t11 && a.psi_t21 == b.psi_t21 && a.psi_t22 == b.psi_t22 &&
               a.psi_t12 == b.psi_t12 && a.psi_r11 == b.psi_r11 && a.psi_r12 == b.psi_r12 &&
               a.psi_r22 == b.psi_r22 && a.psi_r21 == b.psi_r21 && a.label == b.label;
    }
    friend bool operator!=(const Scenario& a, const Scenario& b) { return !(a == b); }
};

/// The operator dimension quantities of one scenario: ambient transmit and
/// receive space dimensions, the four channel ranks, the two interference
/// nullities, and the two signal-range complements. All exact rationals.
struct OperatorDims {
    Rational dim_t1;   ///< dim T1 = 2 L_T1 |psi_t11 u psi_t21|
    Rational dim_t2;   ///< dim T2 = 2 L_T2 |psi_t22 u psi_t12|
    Rational dim_r1;   ///< dim R1 = 2 L_R1 |psi_r11 u psi_r12|
    Rational dim_r2;   ///< dim R2 = 2 L_R2 |psi_r22 u psi_r21|
    Rational rank_h11; ///< dim R(H11)
    Rational rank_h12; ///< dim R(H12)
    Rational rank_h21; ///< dim R(H21)
    Rational rank_h22; ///< dim R(H22)
    Rational null_h12; ///< dim N(H12)
    Rational null_h21; ///< dim N(H21)
    Rational perp_h11; ///< dim R(H11)^perp
    Rational perp_h22; ///< dim R(H22)^perp

    friend bool operator==(const OperatorDims& a, const OperatorDims& b) {
        return a.dim_t1 == b.dim_t1 && a.dim_t2 == b.dim_t2 && a.dim_r1 == b.dim_r1 &&
               a.dim_r2 == b.dim_r2 && a.rank_h11 == b.rank_h11 && a.rank_h12 == b.rank_h12 &&
               a.rank_h21 == b.rank_h21 && a.rank_h22 == b.rank_h22 &&
               a.null_h12 == b.null_h12 && a.null_h21 == b.null_h21 &&
               a.perp_h11 == b.perp_h11 && a.perp_h22 == b.perp_h22;
    }
    friend bool operator!=(const OperatorDims& a, const OperatorDims& b) { return !(a == b); }
};

/// Name/value listing of the OperatorDims fields, in declaration order.
inline std::vector<std::pair<std::string, Rational>> operator_dims_fields(const OperatorDims& d) {
    return {{"dim_t1", d.dim_t1},     {"dim_t2", d.dim_t2},     {"dim_r1", d.dim_r1},
            {"dim_r2", d.dim_r2},     {"rank_h11", d.rank_h11}, {"rank_h12", d.rank_h12},
            {"rank_h21", d.rank_h21}, {"rank_h22", d.rank_h22}, {"null_h12", d.null_h12},
            {"null_h21", d.null_h21}, {"perp_h11", d.perp_h11}, {"perp_h22", d.perp_h22}};
}

/// Reports every violated Scenario invariant (empty means valid). Interval
/// sets are canonical by construction, so only the lengths can go wrong here.
inline std::vector<std::string> validate(const Scenario& s) {
    std::vector<std::string> violations;
    const auto check_positive = [&](const Rational& value, const char* name) {
        if (!(Rational(0) < value))
            violations.push_back(std::string(name) + " must be > 0 (got " + value.to_string() +
                                 ")");
    };
    check_positive(s.l_t1, "l_t1");
    check_positive(s.l_t2, "l_t2");
    check_positive(s.l_r1, "l_r1");
    check_positive(s.l_r2, "l_r2");
    return violations;
}

/// Throws InvalidScenario listing all violations; no-op on a valid scenario.
inline void require_valid(const Scenario& s) {
    const std::vector<std::string> violations = validate(s);
    if (violations.empty())
        return;
    std::string message = "invalid scenario";
    if (!s.label.empty())
        message += " '" + s.label + "'";
    for (const std::string& v : violations)
        message += "; " + v;
    throw InvalidScenario(message);
}

/// Point-to-point link DoF: min{2 l_t |psi_t|, 2 l_r |psi_r|}.
inline Rational p2p_dof(const Rational& l_t, const IntervalSet& psi_t, const Rational& l_r,
                        const IntervalSet& psi_r) {
    return min(Rational(2) * l_t * psi_t.measure(), Rational(2) * l_r * psi_r.measure());
}

/// All operator dimension quantities of a valid scenario, evaluated exactly.
inline OperatorDims operator_dims(const Scenario& s) {
    require_valid(s);
    const Rational two(2);

    OperatorDims d;
    d.dim_t1 = two * s.l_t1 * set_union(s.psi_t11, s.psi_t21).measure();
    d.dim_t2 = two * s.l_t2 * set_union(s.psi_t22, s.psi_t12).measure();
    d.dim_r1 = two * s.l_r1 * set_union(s.psi_r11, s.psi_r12).measure();
    d.dim_r2 = two * s.l_r2 * set_union(s.psi_r22, s.psi_r21).measure();

    d.rank_h11 = p2p_dof(s.l_t1, s.psi_t11, s.l_r1, s.psi_r11);
    d.rank_h12 = p2p_dof(s.l_t2, s.psi_t12, s.l_r1, s.psi_r12);
    d.rank_h21 = p2p_dof(s.l_t1, s.psi_t21, s.l_r2, s.psi_r21);
    d.rank_h22 = p2p_dof(s.l_t2, s.psi_t22, s.l_r2, s.psi_r22);

    d.null_h12 = two * s.l_t2 * set_difference(s.psi_t22, s.psi_t12).measure() +
                 two * pos_part(s.l_t2 * s.psi_t12.measure() - s.l_r1 * s.psi_r12.measure());
    d.null_h21 = two * s.l_t1 * set_difference(s.psi_t11, s.psi_t21).measure() +
                 two * pos_part(s.l_t1 * s.psi_t21.measure() - s.l_r2 * s.psi_r21.measure());
    d.perp_h11 = two * s.l_r1 * set_difference(s.psi_r12, s.psi_r11).measure() +
                 two * pos_part(s.l_r1 * s.psi_r11.measure() - s.l_t1 * s.psi_t11.measure());
    d.perp_h22 = two * s.l_r2 * set_difference(s.psi_r21, s.psi_r22).measure() +
                 two * pos_part(s.l_r2 * s.psi_r22.measure() - s.l_t2 * s.psi_t22.measure());
    return d;
}

/// Relabels flow 1 <-> flow 2 (uplink and downlink change places, supports
/// move with their arrays). Applying it twice restores the original.
inline Scenario swap_flows(const Scenario& s) {
    Scenario out = s;
    out.l_t1 = s.l_t2;
    out.l_t2 = s.l_t1;
    out.l_r1 = s.l_r2;
    out.l_r2 = s.l_r1;
    out.psi_t11 = s.psi_t22;
    out.psi_t22 = s.psi_t11;
    out.psi_t21 = s.psi_t12;
    out.psi_t12 = s.psi_t21;
    out.psi_r11 = s.psi_r22;
    out.psi_r22 = s.psi_r11;
    out.psi_r12 = s.psi_r21;
    out.psi_r21 = s.psi_r12;
    return out;
}

/// Scales all four half-lengths by c > 0; supports are unchanged.
inline Scenario scale_lengths(const Scenario& s, const Rational& c) {
    if (!(Rational(0) < c))
        throw InvalidScenario("length scale factor must be > 0 (got " + c.to_string() + ")");
    Scenario out = s;
    out.l_t1 = s.l_t1 * c;
    out.l_t2 = s.l_t2 * c;
    out.l_r1 = s.l_r1 * c;
    out.l_r2 = s.l_r2 * c;
    return out;
}

} // namespace fdx
