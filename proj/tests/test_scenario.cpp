// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <fdx/scenario.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using fdx::IntervalSet;
using fdx::OperatorDims;
using fdx::Rational;
using fdx::Scenario;
using fdx::testfix::iv;
using fdx::testfix::q;

TEST_CASE("validate reports each violated invariant") {
    Scenario s = fdx::testfix::s1();
    CHECK(fdx::validate(s).empty());

    s.l_t1 = Rational(0);
    s.l_r2 = Rational(-1, 2);
    const std::vector<std::string> violations = fdx::validate(s);
    REQUIRE(violations.size() == 2);
    CHECK(violations[0].find("l_t1") != std::string::npos);
    CHECK(violations[1].find("l_r2") != std::string::npos);
    CHECK_THROWS_AS(fdx::require_valid(s), fdx::InvalidScenario);
}

TEST_CASE("p2p_dof takes the smaller array-side dimension") {
    CHECK(fdx::p2p_dof(Rational(1), iv("0", "1"), Rational(1), iv("0", "1")) == Rational(2));
    CHECK(fdx::p2p_dof(q("0.5"), iv("0", "1"), Rational(1), iv("0", "1")) == Rational(1));
    CHECK(fdx::p2p_dof(Rational(1), IntervalSet{}, Rational(1), iv("0", "1")) == Rational(0));
}

TEST_CASE("operator dimensions of the asymmetric worked example") {
    const OperatorDims d = fdx::operator_dims(fdx::testfix::s4());
    CHECK(d.dim_t1 == Rational(2));
    CHECK(d.dim_t2 == Rational(2));
    CHECK(d.dim_r1 == Rational(1));
    CHECK(d.dim_r2 == Rational(2));
    CHECK(d.rank_h11 == Rational(1));
    CHECK(d.rank_h12 == q("0.4"));
    CHECK(d.rank_h21 == Rational(1));
    CHECK(d.rank_h22 == Rational(2));
    CHECK(d.null_h12 == q("1.6"));
    CHECK(d.null_h21 == Rational(1));
    CHECK(d.perp_h11 == Rational(0));
    CHECK(d.perp_h22 == Rational(0));
}

TEST_CASE("cross-link rank saturates at the smaller side") {
    // A transmit side worth 1 against a receive side worth 0.8.
    CHECK(fdx::p2p_dof(Rational(1), iv("0", "0.5"), q("0.5"), iv("0", "0.8")) == q("0.8"));
}

TEST_CASE("nullity vanishes when the interference support covers the signal") {
    Scenario s = fdx::testfix::s1();
    // psi_t22 == psi_t12 and L_T2 |psi_t12| <= L_R1 |psi_r12| already hold.
    const OperatorDims d = fdx::operator_dims(s);
    CHECK(d.null_h12 == Rational(0));
}

TEST_CASE("nullity and range complement equal ambient minus rank") {
    std::mt19937_64 rng(20240813);
    for (int i = 0; i < 200; ++i) {
        const Scenario s = fdx::testgen::random_scenario(rng);
        const OperatorDims d = fdx::operator_dims(s);
        CHECK(d.null_h12 == d.dim_t2 - d.rank_h12);
        CHECK(d.null_h21 == d.dim_t1 - d.rank_h21);
        CHECK(d.perp_h11 == d.dim_r1 - d.rank_h11);
        CHECK(d.perp_h22 == d.dim_r2 - d.rank_h22);
    }
}

TEST_CASE("operator dimensions scale linearly with the array lengths") {
    std::mt19937_64 rng(20240814);
    const std::vector<Rational> factors = {Rational(1, 3), Rational(2), Rational(7)};
    for (int i = 0; i < 100; ++i) {
        const Scenario s = fdx::testgen::random_scenario(rng);
        const auto base = fdx::operator_dims_fields(fdx::operator_dims(s));
        for (const Rational& c : factors) {
            const auto scaled =
                fdx::operator_dims_fields(fdx::operator_dims(fdx::scale_lengths(s, c)));
            for (std::size_t k = 0; k < base.size(); ++k)
                CHECK(scaled[k].second == base[k].second * c);
        }
    }
    CHECK_THROWS_AS(fdx::scale_lengths(fdx::testfix::s1(), Rational(0)), fdx::InvalidScenario);
}

TEST_CASE("enlarging a support never shrinks dimensions or ranks") {
    std::mt19937_64 rng(20240815);
    for (int i = 0; i < 100; ++i) {
        const Scenario s = fdx::testgen::random_scenario(rng);
        Scenario larger = s;
        larger.psi_t11 = fdx::set_union(s.psi_t11, fdx::testgen::random_interval_set(rng, 8, 2, 0));
        const OperatorDims a = fdx::operator_dims(s);
        const OperatorDims b = fdx::operator_dims(larger);
        CHECK(a.dim_t1 <= b.dim_t1);
        CHECK(a.rank_h11 <= b.rank_h11);
    }
}

TEST_CASE("swapping the two flows swaps the matching quantities") {
    std::mt19937_64 rng(20240816);
    for (int i = 0; i < 200; ++i) {
        const Scenario s = fdx::testgen::random_scenario(rng);
        const OperatorDims d = fdx::operator_dims(s);
        const OperatorDims w = fdx::operator_dims(fdx::swap_flows(s));
        CHECK(w.dim_t1 == d.dim_t2);
        CHECK(w.dim_t2 == d.dim_t1);
        CHECK(w.dim_r1 == d.dim_r2);
        CHECK(w.dim_r2 == d.dim_r1);
        CHECK(w.rank_h11 == d.rank_h22);
        CHECK(w.rank_h22 == d.rank_h11);
        CHECK(w.rank_h12 == d.rank_h21);
        CHECK(w.rank_h21 == d.rank_h12);
        CHECK(w.null_h12 == d.null_h21);
        CHECK(w.null_h21 == d.null_h12);
        CHECK(w.perp_h11 == d.perp_h22);
        CHECK(w.perp_h22 == d.perp_h11);
        CHECK(fdx::swap_flows(fdx::swap_flows(s)) == s);
    }
}
