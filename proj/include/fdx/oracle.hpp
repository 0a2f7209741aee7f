// SPDX-License-Identifier: Apache-2.0
//
// Randomized matrix oracle: discretize the wavevector axis at the arrays'
// resolution, instantiate generic block-supported channel matrices, and
// recover every analytic dimension by rank and subspace computation.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fdx/errors.hpp"
#include "fdx/interval_set.hpp"
#include "fdx/rational.hpp"
#include "fdx/region.hpp"
#include "fdx/scenario.hpp"

namespace fdx {

/// One atomic interval of an array's support together with the integer
/// block dimension it contributes (2 L |atom| G) and its offset in the
/// array's coordinate frame.
struct AtomBlock {
    Interval atom;
    std::int64_t dim = 0;
    std::int64_t offset = 0;
};

/// An array's discretized signal space: the union support split into atoms
/// by every endpoint appearing anywhere in the scenario.
struct ArrayGrid {
    Rational half_length;
    IntervalSet support;
    std::vector<AtomBlock> atoms;
    std::int64_t total_dim = 0;

    /// Coordinate indices covered by the atoms inside `subset`. Atoms never
    /// straddle a subset boundary, so testing the left endpoint suffices.
    std::vector<std::int64_t> indices_in(const IntervalSet& subset) const {
        std::vector<std::int64_t> out;
        for (const AtomBlock& block : atoms) {
            if (!subset.contains(block.atom.lo))
                continue;
            for (std::int64_t k = 0; k < block.dim; ++k)
                out.push_back(block.offset + k);
        }
        return out;
    }

    /// Total block dimension of the atoms inside `subset` (2 L |subset| G).
    std::int64_t dim_in(const IntervalSet& subset) const {
        std::int64_t total = 0;
        for (const AtomBlock& block : atoms)
            if (subset.contains(block.atom.lo))
                total += block.dim;
        return total;
    }
};

/// Scenario scaled onto an integer grid: every block dimension is exact.
struct DiscretizedScenario {
    Scenario scenario;
    std::int64_t grid_density = 1;
    ArrayGrid t1;
    ArrayGrid t2;
    ArrayGrid r1;
    ArrayGrid r2;
};

/// The four sampled channel matrices in ambient coordinates: h_ij maps
/// T_j's frame (columns) to R_i's frame (rows), zero outside the support.
struct ChannelMatrices {
    Eigen::MatrixXd h11;
    Eigen::MatrixXd h12;
    Eigen::MatrixXd h21;
    Eigen::MatrixXd h22;
};

/// The four Lemma-1 proof-sketch conditions under which the preimage
/// construction is known to achieve the prime corner.
struct SketchConditions {
    bool c1 = false; ///< L_T1 |psi_t11| >= L_R1 |psi_r11|
    bool c2 = false; ///< d_T2 <= delta_R2
    bool c3 = false; ///< signal/interference overlap absorbs the zero-forcing debt
    bool c4 = false; ///< L_T2 |psi_t12| >= L_R1 |psi_r12|

    bool all() const { return c1 && c2 && c3 && c4; }
};

/// Analytic-versus-numerical comparison for one scenario. Mismatches are
/// recorded, never thrown; passed() applies the acceptance rule.
struct OracleReport {
    std::string label;
    std::int64_t grid_density = 1;
    std::int64_t seed = 0;
    std::int64_t trials = 0;

    OperatorDims analytic;
    OperatorDims numerical;        ///< from the worst trial, scaled back by 1/G
    std::int64_t max_rank_gap = 0; ///< largest |analytic - numerical| in grid units

    Rational preimage_dim_analytic;  ///< dim N(H12) + dim R(H11)^perp
    Rational preimage_dim_numerical; ///< measured dim of H12^{-1}(R(H11)^perp)
    Rational corner_flow2_numerical; ///< deliverable flow-2 DoF from the preimage
    Rational corner_d2_analytic;     ///< d'_2 from the corner formulas
    Rational max_corner_gap;         ///< largest |flow2 - d'_2| over trials
    SketchConditions sketch;

    /// Ranks must match everywhere; the preimage must reproduce d'_2 exactly
    /// whenever the proof-sketch conditions hold (outside them the measured
    /// value is informational — see corner_flow2_numerical).
    bool passed() const {
        return max_rank_gap == 0 && (!sketch.all() || max_corner_gap.is_zero());
    }
};

namespace detail {

/// Sorted unique endpoints of all eight supports.
inline std::vector<Rational> global_cuts(const Scenario& s) {
    std::vector<Rational> cuts;
    const auto add = [&cuts](const IntervalSet& set) {
        for (const Interval& piece : set.pieces()) {
            cuts.push_back(piece.lo);
            cuts.push_back(piece.hi);
        }
    };
    add(s.psi_t11);
    add(s.psi_t21);
    add(s.psi_t22);
    add(s.psi_t12);
    add(s.psi_r11);
    add(s.psi_r12);
    add(s.psi_r22);
    add(s.psi_r21);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

/// Splits `support` at every cut point falling strictly inside a piece.
inline std::vector<Interval> atomize(const IntervalSet& support,
                                     const std::vector<Rational>& cuts) {
    std::vector<Interval> atoms;
    for (const Interval& piece : support.pieces()) {
        Rational lo = piece.lo;
        for (const Rational& cut : cuts) {
            if (cut <= lo)
                continue;
            if (!(cut < piece.hi))
                break;
            atoms.push_back(Interval{lo, cut});
            lo = cut;
        }
        atoms.push_back(Interval{lo, piece.hi});
    }
    return atoms;
}

/// 2 L |atom| as an exact rational.
inline Rational atom_dim(const Rational& half_length, const Interval& atom) {
    return Rational(2) * half_length * (atom.hi - atom.lo);
}

} // namespace detail

/// Least grid density G making every block dimension 2 L |atom| G integral:
/// the lcm of the denominators of all per-atom dimension products.
inline std::int64_t suggest_density(const Scenario& s) {
    require_valid(s);
    const std::vector<Rational> cuts = detail::global_cuts(s);
    std::int64_t density = 1;
    const auto fold = [&](const Rational& half_length, const IntervalSet& support) {
        for (const Interval& atom : detail::atomize(support, cuts))
            density = checked_lcm(density, detail::atom_dim(half_length, atom).den());
    };
    fold(s.l_t1, set_union(s.psi_t11, s.psi_t21));
    fold(s.l_t2, set_union(s.psi_t22, s.psi_t12));
    fold(s.l_r1, set_union(s.psi_r11, s.psi_r12));
    fold(s.l_r2, set_union(s.psi_r22, s.psi_r21));
    return density;
}

/// Scales the scenario onto integer blocks at density g.
inline DiscretizedScenario discretize(const Scenario& s, std::int64_t g) {
    require_valid(s);
    if (g < 1)
        throw Error("grid density must be a positive integer (got " + std::to_string(g) + ")");
    const std::vector<Rational> cuts = detail::global_cuts(s);

    const auto build = [&](const Rational& half_length, const IntervalSet& support) {
        ArrayGrid grid;
        grid.half_length = half_length;
        grid.support = support;
        for (const Interval& atom : detail::atomize(support, cuts)) {
            const Rational dim = detail::atom_dim(half_length, atom) * Rational(g);
            if (!dim.is_integer())
                throw NonIntegralGrid("block dimension " + dim.to_string() + " for atom [" +
                                          atom.lo.to_string() + ", " + atom.hi.to_string() +
                                          ") is not integral at grid density " +
                                          std::to_string(g),
                                      suggest_density(s));
            AtomBlock block;
            block.atom = atom;
            block.dim = dim.num();
            block.offset = grid.total_dim;
            grid.atoms.push_back(block);
            grid.total_dim += block.dim;
        }
        return grid;
    };

    DiscretizedScenario d;
    d.scenario = s;
    d.grid_density = g;
    d.t1 = build(s.l_t1, set_union(s.psi_t11, s.psi_t21));
    d.t2 = build(s.l_t2, set_union(s.psi_t22, s.psi_t12));
    d.r1 = build(s.l_r1, set_union(s.psi_r11, s.psi_r12));
    d.r2 = build(s.l_r2, set_union(s.psi_r22, s.psi_r21));
    return d;
}

namespace detail {

/// Generic matrix for one channel: standard-normal entries on the supported
/// rows x columns, exact zeros elsewhere. Deterministic in (seed, channel).
inline Eigen::MatrixXd sample_channel(const ArrayGrid& receive, const IntervalSet& psi_r,
                                      const ArrayGrid& transmit, const IntervalSet& psi_t,
                                      std::int64_t seed, std::uint32_t channel) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(receive.total_dim, transmit.total_dim);
    const std::vector<std::int64_t> rows = receive.indices_in(psi_r);
    const std::vector<std::int64_t> cols = transmit.indices_in(psi_t);
    std::seed_seq seq{static_cast<std::uint32_t>(static_cast<std::uint64_t>(seed)),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(seed) >> 32),
                      channel};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (const std::int64_t r : rows)
        for (const std::int64_t c : cols)
            m(r, c) = gauss(rng);
    return m;
}

} // namespace detail

/// Draws the four channel matrices; the same seed always reproduces them.
inline ChannelMatrices sample_channels(const DiscretizedScenario& d, std::int64_t seed) {
    const Scenario& s = d.scenario;
    ChannelMatrices m;
    m.h11 = detail::sample_channel(d.r1, s.psi_r11, d.t1, s.psi_t11, seed, 0);
    m.h12 = detail::sample_channel(d.r1, s.psi_r12, d.t2, s.psi_t12, seed, 1);
    m.h21 = detail::sample_channel(d.r2, s.psi_r21, d.t1, s.psi_t21, seed, 2);
    m.h22 = detail::sample_channel(d.r2, s.psi_r22, d.t2, s.psi_t22, seed, 3);
    return m;
}

/// Rank by singular values with a relative threshold (default 1e-8 x the
/// largest singular value). A draw whose spectrum clusters at the cut —
/// consecutive singular values straddling it with ratio below 10 — is
/// rejected as IllConditioned rather than silently rounded.
///
/// Two-sided Jacobi throughout this header, not divide-and-conquer: the
/// channel matrices are small but mostly structural zeros, and BDC
/// deflation can misreport the trailing singular values of such spectra
/// so badly that the gap guard cannot catch it. Jacobi is the accurate
/// choice and the matrices are far too small for its cost to matter.
inline std::int64_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double sigma_max = sv(0);
    if (sigma_max <= 0.0)
        return 0;
    const double threshold = rel_tol * sigma_max;
    std::int64_t rank = 0;
    while (rank < sv.size() && sv(rank) > threshold)
        ++rank;
    if (rank > 0 && rank < sv.size() && sv(rank) > 0.0 && sv(rank - 1) / sv(rank) < 10.0)
        throw IllConditioned("singular values " + std::to_string(sv(rank - 1)) + " and " +
                             std::to_string(sv(rank)) + " straddle the rank threshold " +
                             std::to_string(threshold) + " with gap ratio < 10");
    return rank;
}

namespace detail {

/// Orthonormal basis of the range (thin left singular vectors up to rank).
inline Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0)
        return Eigen::MatrixXd(m.rows(), 0);
    const std::int64_t rank = numerical_rank(m, rel_tol);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    return svd.matrixU().leftCols(rank);
}

/// Orthonormal basis of the range's orthogonal complement in the ambient
/// row space (full left singular vectors beyond the rank).
inline Eigen::MatrixXd range_complement_basis(const Eigen::MatrixXd& m, double rel_tol) {
    if (m.rows() == 0)
        return Eigen::MatrixXd(0, 0);
    if (m.cols() == 0)
        return Eigen::MatrixXd::Identity(m.rows(), m.rows());
    const std::int64_t rank = numerical_rank(m, rel_tol);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
    return svd.matrixU().rightCols(m.rows() - rank);
}

/// Dimension of the intersection of two subspaces given by orthonormal
/// bases, via principal angles: count the cosines within `angle_tol`
/// radians of zero angle. Angles suspiciously close to the cut (inside
/// 1e-3 rad but outside the tolerance) are rejected loudly.
inline std::int64_t subspace_intersection_dim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                              double angle_tol = 1e-6) {
    if (a.cols() == 0 || b.cols() == 0)
        return 0;
    const Eigen::MatrixXd product = a.transpose() * b;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(product);
    const Eigen::VectorXd& cosines = svd.singularValues();
    const double accept = std::cos(angle_tol);
    std::int64_t dim = 0;
    while (dim < cosines.size() && cosines(dim) >= accept)
        ++dim;
    if (dim < cosines.size() && cosines(dim) >= std::cos(1e-3)) {
        const double angle = std::acos(std::min(1.0, cosines(dim)));
        throw IllConditioned("principal angle " + std::to_string(angle) +
                             " rad sits between the intersection tolerance and 1e-3");
    }
    return dim;
}

} // namespace detail

/// Every operator dimension recovered from one random draw, in grid units.
struct OracleGridDims {
    std::int64_t dim_t1 = 0, dim_t2 = 0, dim_r1 = 0, dim_r2 = 0;
    std::int64_t rank_h11 = 0, rank_h12 = 0, rank_h21 = 0, rank_h22 = 0;
    std::int64_t null_h12 = 0, null_h21 = 0, perp_h11 = 0, perp_h22 = 0;
};

namespace detail {

inline OracleGridDims measure_dims(const DiscretizedScenario& d, const ChannelMatrices& m,
                                   double rel_tol) {
    OracleGridDims g;
    g.dim_t1 = d.t1.total_dim;
    g.dim_t2 = d.t2.total_dim;
    g.dim_r1 = d.r1.total_dim;
    g.dim_r2 = d.r2.total_dim;
    g.rank_h11 = numerical_rank(m.h11, rel_tol);
    g.rank_h12 = numerical_rank(m.h12, rel_tol);
    g.rank_h21 = numerical_rank(m.h21, rel_tol);
    g.rank_h22 = numerical_rank(m.h22, rel_tol);
    g.null_h12 = d.t2.total_dim - g.rank_h12;
    g.null_h21 = d.t1.total_dim - g.rank_h21;
    g.perp_h11 = d.r1.total_dim - g.rank_h11;
    g.perp_h22 = d.r2.total_dim - g.rank_h22;
    return g;
}

/// dim H12^{-1}(R(H11)^perp) = nullity(H12) + dim(R(H11)^perp n R(H12)).
inline std::int64_t measure_preimage(const DiscretizedScenario& d, const ChannelMatrices& m,
                                     double rel_tol) {
    const std::int64_t nullity = d.t2.total_dim - numerical_rank(m.h12, rel_tol);
    const Eigen::MatrixXd perp = range_complement_basis(m.h11, rel_tol);
    const Eigen::MatrixXd range = range_basis(m.h12, rel_tol);
    return nullity + subspace_intersection_dim(perp, range);
}

/// Flow-2 deliverable from a preimage dimension: capped by what T2 can
/// radiate toward R2 and what R2 can resolve, all in grid units.
inline std::int64_t cap_flow2(const DiscretizedScenario& d, std::int64_t preimage) {
    const std::int64_t t22 = d.t2.dim_in(d.scenario.psi_t22);
    const std::int64_t r22 = d.r2.dim_in(d.scenario.psi_r22);
    return std::min(preimage, std::min(t22, r22));
}

inline OperatorDims grid_dims_to_rational(const OracleGridDims& g, std::int64_t density) {
    OperatorDims out;
    out.dim_t1 = Rational(g.dim_t1, density);
    out.dim_t2 = Rational(g.dim_t2, density);
    out.dim_r1 = Rational(g.dim_r1, density);
    out.dim_r2 = Rational(g.dim_r2, density);
    out.rank_h11 = Rational(g.rank_h11, density);
    out.rank_h12 = Rational(g.rank_h12, density);
    out.rank_h21 = Rational(g.rank_h21, density);
    out.rank_h22 = Rational(g.rank_h22, density);
    out.null_h12 = Rational(g.null_h12, density);
    out.null_h21 = Rational(g.null_h21, density);
    out.perp_h11 = Rational(g.perp_h11, density);
    out.perp_h22 = Rational(g.perp_h22, density);
    return out;
}

/// Largest per-field gap between analytic values and one draw, in grid units.
inline std::int64_t rank_gap(const OperatorDims& analytic, const OracleGridDims& numerical,
                             std::int64_t g) {
    const auto grid_units = [g](const Rational& value) {
        const Rational scaled = value * Rational(g);
        if (!scaled.is_integer())
            throw NonIntegralGrid("analytic dimension " + value.to_string() +
                                      " is not integral at grid density " + std::to_string(g),
                                  g);
        return scaled.num();
    };
    std::int64_t gap = 0;
    const auto fold = [&gap](std::int64_t a, std::int64_t b) {
        gap = std::max(gap, a > b ? a - b : b - a);
    };
    fold(grid_units(analytic.dim_t1), numerical.dim_t1);
    fold(grid_units(analytic.dim_t2), numerical.dim_t2);
    fold(grid_units(analytic.dim_r1), numerical.dim_r1);
    fold(grid_units(analytic.dim_r2), numerical.dim_r2);
    fold(grid_units(analytic.rank_h11), numerical.rank_h11);
    fold(grid_units(analytic.rank_h12), numerical.rank_h12);
    fold(grid_units(analytic.rank_h21), numerical.rank_h21);
    fold(grid_units(analytic.rank_h22), numerical.rank_h22);
    fold(grid_units(analytic.null_h12), numerical.null_h12);
    fold(grid_units(analytic.null_h21), numerical.null_h21);
    fold(grid_units(analytic.perp_h11), numerical.perp_h11);
    fold(grid_units(analytic.perp_h22), numerical.perp_h22);
    return gap;
}

} // namespace detail

/// Measures ranks, nullities, and range complements from one generic draw.
inline OracleGridDims oracle_grid_dims(const DiscretizedScenario& d, std::int64_t seed,
                                       double rel_tol = 1e-8) {
    return detail::measure_dims(d, sample_channels(d, seed), rel_tol);
}

/// Same measurements scaled back by 1/G for comparison with operator_dims.
inline OperatorDims oracle_dims(const DiscretizedScenario& d, std::int64_t seed,
                                double rel_tol = 1e-8) {
    return detail::grid_dims_to_rational(oracle_grid_dims(d, seed, rel_tol), d.grid_density);
}

/// Measured preimage dimension dim H12^{-1}(R(H11)^perp), in grid units.
inline std::int64_t preimage_grid_dim(const DiscretizedScenario& d, std::int64_t seed,
                                      double rel_tol = 1e-8) {
    return detail::measure_preimage(d, sample_channels(d, seed), rel_tol);
}

/// Deliverable flow-2 DoF of the preimage scheme, scaled back by 1/G.
inline Rational oracle_corner_flow2(const DiscretizedScenario& d, std::int64_t seed,
                                    double rel_tol = 1e-8) {
    const std::int64_t preimage = preimage_grid_dim(d, seed, rel_tol);
    return Rational(detail::cap_flow2(d, preimage), d.grid_density);
}

/// Evaluates the four proof-sketch conditions exactly.
inline SketchConditions lemma1_sketch_conditions(const Scenario& s) {
    require_valid(s);
    const CornerAux aux = corner_points_lemma1(s).aux;
    SketchConditions c;
    c.c1 = s.l_t1 * s.psi_t11.measure() >= s.l_r1 * s.psi_r11.measure();
    c.c2 = aux.d_t2 <= aux.delta_r2;
    c.c3 = s.l_t2 * set_intersect(s.psi_t22, s.psi_t12).measure() >=
           pos_part(s.l_t2 * s.psi_t12.measure() - s.l_r1 * s.psi_r12.measure()) +
               s.l_r1 * set_difference(s.psi_r12, s.psi_r11).measure();
    c.c4 = s.l_t2 * s.psi_t12.measure() >= s.l_r1 * s.psi_r12.measure();
    return c;
}

/// Runs the oracle over `trials` consecutive seeds starting at `seed` and
/// reports the worst deviation from the analytic formulas. Deviations are
/// data: the caller decides what a nonzero gap means.
inline OracleReport verify(const Scenario& s, std::int64_t trials, std::int64_t seed,
                           std::int64_t grid_density = 0, double rel_tol = 1e-8) {
    require_valid(s);
    if (trials < 1)
        throw Error("verify needs at least one trial (got " + std::to_string(trials) + ")");
    const std::int64_t g = grid_density > 0 ? grid_density : suggest_density(s);
    const DiscretizedScenario d = discretize(s, g);

    OracleReport report;
    report.label = s.label;
    report.grid_density = g;
    report.seed = seed;
    report.trials = trials;
    report.analytic = operator_dims(s);
    report.sketch = lemma1_sketch_conditions(s);
    report.corner_d2_analytic = corner_points_lemma1(s).prime.d2;
    report.preimage_dim_analytic = report.analytic.null_h12 + report.analytic.perp_h11;

    for (std::int64_t t = 0; t < trials; ++t) {
        const std::int64_t trial_seed = seed + t;
        const ChannelMatrices m = sample_channels(d, trial_seed);
        const OracleGridDims grid = detail::measure_dims(d, m, rel_tol);
        const std::int64_t gap = detail::rank_gap(report.analytic, grid, g);

        const std::int64_t preimage = detail::measure_preimage(d, m, rel_tol);
        const Rational flow2(detail::cap_flow2(d, preimage), g);
        const Rational corner_gap = abs(flow2 - report.corner_d2_analytic);

        if (t == 0 || gap > report.max_rank_gap || corner_gap > report.max_corner_gap) {
            report.numerical = detail::grid_dims_to_rational(grid, g);
            report.preimage_dim_numerical = Rational(preimage, g);
            report.corner_flow2_numerical = flow2;
        }
        report.max_rank_gap = std::max(report.max_rank_gap, gap);
        report.max_corner_gap = max(report.max_corner_gap, corner_gap);
    }
    return report;
}

} // namespace fdx
