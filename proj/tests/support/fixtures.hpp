// SPDX-License-Identifier: Apache-2.0
//
// Hand-pinned scenarios reused across the test suite.

#pragma once

#include <fdx/fdx.hpp>

namespace fdx::testfix {

inline Rational q(const char* text) { return Rational::parse(text); }

inline IntervalSet iv(const char* lo, const char* hi) {
    return IntervalSet::single(q(lo), q(hi));
}

/// Fully-overlapped symmetric network: unit supports everywhere, base
/// station half-length 1, users 1/2.
inline Scenario s1() {
    Scenario s = case_a(Rational(1), Rational(1, 2), iv("0", "1"));
    s.label = "s1";
    return s;
}

/// Symmetric spread, equal half-length 1/2, forward [-1/2, 1/2) against
/// backscatter [0, 1).
inline Scenario s2() {
    Scenario s = case_b(Rational(1, 2), iv("-0.5", "0.5"), iv("0", "1"));
    s.label = "s2";
    return s;
}

/// Asymmetric worked example: distinct lengths and staggered supports with
/// fractional corner coordinates.
inline Scenario s4() {
    Scenario s;
    s.l_t1 = Rational(1);
    s.l_t2 = Rational(1);
    s.l_r1 = Rational(1, 2);
    s.l_r2 = Rational(1);
    s.psi_t11 = iv("0", "1");
    s.psi_t21 = iv("0", "0.5");
    s.psi_t22 = iv("-0.5", "0.5");
    s.psi_t12 = iv("0", "0.5");
    s.psi_r11 = iv("0", "1");
    s.psi_r12 = iv("0", "0.4");
    s.psi_r22 = iv("-0.5", "0.5");
    s.psi_r21 = iv("0", "0.5");
    s.label = "s4";
    return s;
}

} // namespace fdx::testfix
