// SPDX-License-Identifier: Apache-2.0
//
// DoF region construction and comparison: the full-duplex region with self-
// and inter-node interference, the half-duplex time-sharing triangle, and
// the self-interference-only region, all as exact rational convex polygons.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fdx/errors.hpp"
#include "fdx/rational.hpp"
#include "fdx/scenario.hpp"

namespace fdx {

/// One DoF tuple (d1, d2).
struct Point {
    Rational d1;
    Rational d2;

    friend bool operator==(const Point& a, const Point& b) {
        return a.d1 == b.d1 && a.d2 == b.d2;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// The three bounds that carve the full-duplex region out of the quadrant:
/// d1 <= d1_max, d2 <= d2_max, d1 + d2 <= d_sum_max.
struct FdBounds {
    Rational d1_max;
    Rational d2_max;
    Rational d_sum_max;
};

/// The eight auxiliary corner quantities.
struct CornerAux {
    Rational d_t1;
    Rational d_t2;
    Rational d_r1;
    Rational d_r2;
    Rational delta_t1;
    Rational delta_t2;
    Rational delta_r1;
    Rational delta_r2;
};

/// The two corner points of the full-duplex region: prime pins flow 1 at its
/// maximum, double_prime pins flow 2. aux carries the eight intermediate
/// quantities the direct corner formulas are assembled from.
struct CornerPoints {
    Point prime;
    Point double_prime;
    CornerAux aux;
};

namespace detail {

/// 2 * l * |set|, the recurring signal-space dimension term.
inline Rational dim2(const Rational& l, const IntervalSet& set) {
    return Rational(2) * l * set.measure();
}

/// 2 * l * |a \ b|.
inline Rational dim2_diff(const Rational& l, const IntervalSet& a, const IntervalSet& b) {
    return Rational(2) * l * set_difference(a, b).measure();
}

/// 2 * l * |a n b|.
inline Rational dim2_cap(const Rational& l, const IntervalSet& a, const IntervalSet& b) {
    return Rational(2) * l * set_intersect(a, b).measure();
}

} // namespace detail

/// The base-station side of the sum bound:
/// 2(L_T2 |psi_t22 \ psi_t12| + L_R1 |psi_r11 \ psi_r12| + max{L_T2 |psi_t12|, L_R1 |psi_r12|}).
/// This alone bounds d1 + d2 when only self-interference is present.
inline Rational fdp_sum_bound(const Scenario& s) {
    require_valid(s);
    return detail::dim2_diff(s.l_t2, s.psi_t22, s.psi_t12) +
           detail::dim2_diff(s.l_r1, s.psi_r11, s.psi_r12) +
           Rational(2) * max(s.l_t2 * s.psi_t12.measure(), s.l_r1 * s.psi_r12.measure());
}

/// The user side of the sum bound, mirroring fdp_sum_bound with (T1, R2).
inline Rational user_sum_bound(const Scenario& s) {
    require_valid(s);
    return detail::dim2_diff(s.l_t1, s.psi_t11, s.psi_t21) +
           detail::dim2_diff(s.l_r2, s.psi_r22, s.psi_r21) +
           Rational(2) * max(s.l_t1 * s.psi_t21.measure(), s.l_r2 * s.psi_r21.measure());
}

/// Per-flow maxima and the sum bound of the full-duplex region.
inline FdBounds fd_bounds(const Scenario& s) {
    require_valid(s);
    FdBounds b;
    b.d1_max = p2p_dof(s.l_t1, s.psi_t11, s.l_r1, s.psi_r11);
    b.d2_max = p2p_dof(s.l_t2, s.psi_t22, s.l_r2, s.psi_r22);
    b.d_sum_max = min(fdp_sum_bound(s), user_sum_bound(s));
    return b;
}

/// Corner points built from the direct per-quantity formulas: the eight aux
/// values with every min/max/positive-part applied verbatim, indicator
/// branches selected on the array-length comparisons, and the dependent
/// coordinates clamped to [0, flow max]. At an exact indicator tie both
/// branches are evaluated; if they ever disagreed the corner would be
/// ambiguous and this throws AmbiguousCorner instead of picking silently.
inline CornerPoints corner_points_lemma1(const Scenario& s) {
    require_valid(s);
    using detail::dim2;
    using detail::dim2_cap;
    using detail::dim2_diff;
    const Rational two(2);

    CornerAux aux;
    // d_T2 and its flow-swapped image d_T1: signal directions that miss the
    // interference support, plus whatever interference overlap survives
    // after zero-forcing through the receive side.
    aux.d_t2 = dim2_diff(s.l_t2, s.psi_t22, s.psi_t12) +
               min(dim2_cap(s.l_t2, s.psi_t22, s.psi_t12),
                   two * pos_part(s.l_t2 * s.psi_t12.measure() - s.l_r1 * s.psi_r12.measure()) +
                       dim2_diff(s.l_r1, s.psi_r12, s.psi_r11));
    aux.d_t1 = dim2_diff(s.l_t1, s.psi_t11, s.psi_t21) +
               min(dim2_cap(s.l_t1, s.psi_t11, s.psi_t21),
                   two * pos_part(s.l_t1 * s.psi_t21.measure() - s.l_r2 * s.psi_r21.measure()) +
                       dim2_diff(s.l_r2, s.psi_r21, s.psi_r22));
    // d_R1 / d_R2: the receive-side counterparts.
    aux.d_r1 = dim2_diff(s.l_r1, s.psi_r11, s.psi_r12) +
               min(dim2_cap(s.l_r1, s.psi_r11, s.psi_r12),
                   two * pos_part(s.l_r1 * s.psi_r12.measure() - s.l_t2 * s.psi_t12.measure()) +
                       dim2_diff(s.l_t2, s.psi_t12, s.psi_t22));
    aux.d_r2 = dim2_diff(s.l_r2, s.psi_r22, s.psi_r21) +
               min(dim2_cap(s.l_r2, s.psi_r22, s.psi_r21),
                   two * pos_part(s.l_r2 * s.psi_r21.measure() - s.l_t1 * s.psi_t21.measure()) +
                       dim2_diff(s.l_t1, s.psi_t21, s.psi_t11));
    // delta_* variants: the budget left after the other flow has claimed its
    // maximum on the shared array.
    aux.delta_t2 =
        dim2_diff(s.l_t2, s.psi_t22, s.psi_t12) +
        min(dim2_cap(s.l_t2, s.psi_t22, s.psi_t12),
            two * (s.l_t2 * s.psi_t12.measure() -
                   (s.l_t1 * s.psi_t11.measure() -
                    (s.l_r1 * set_difference(s.psi_r11, s.psi_r12).measure() +
                     pos_part(s.l_r1 * s.psi_r12.measure() - s.l_t2 * s.psi_t12.measure())))));
    aux.delta_t1 =
        dim2_diff(s.l_t1, s.psi_t11, s.psi_t21) +
        min(dim2_cap(s.l_t1, s.psi_t11, s.psi_t21),
            two * (s.l_t1 * s.psi_t21.measure() -
                   (s.l_t2 * s.psi_t22.measure() -
                    (s.l_r2 * set_difference(s.psi_r22, s.psi_r21).measure() +
                     pos_part(s.l_r2 * s.psi_r21.measure() - s.l_t1 * s.psi_t21.measure())))));
    aux.delta_r1 =
        dim2_diff(s.l_r1, s.psi_r11, s.psi_r12) +
        min(dim2_cap(s.l_r1, s.psi_r11, s.psi_r12),
            two * (s.l_r1 * s.psi_r12.measure() -
                   (s.l_r2 * s.psi_r22.measure() -
                    (s.l_t2 * set_difference(s.psi_t22, s.psi_t12).measure() +
                     pos_part(s.l_t2 * s.psi_t12.measure() - s.l_r1 * s.psi_r12.measure())))));
    aux.delta_r2 =
        dim2_diff(s.l_r2, s.psi_r22, s.psi_r21) +
        min(dim2_cap(s.l_r2, s.psi_r22, s.psi_r21),
            two * (s.l_r2 * s.psi_r21.measure() -
                   (s.l_r1 * s.psi_r11.measure() -
                    (s.l_t1 * set_difference(s.psi_t11, s.psi_t21).measure() +
                     pos_part(s.l_t1 * s.psi_t21.measure() - s.l_r2 * s.psi_r21.measure())))));

    const Rational d1_max = min(dim2(s.l_t1, s.psi_t11), dim2(s.l_r1, s.psi_r11));
    const Rational d2_max = min(dim2(s.l_t2, s.psi_t22), dim2(s.l_r2, s.psi_r22));

    const auto clamp = [](const Rational& x, const Rational& hi) {
        return min(max(x, Rational(0)), hi);
    };
    const auto pick = [](bool tie, bool first, const Rational& a, const Rational& b,
                         const char* corner) {
        if (tie) {
            if (a != b)
                throw AmbiguousCorner(std::string("corner ") + corner +
                                      ": branches disagree at an exact indicator tie (" +
                                      a.to_string() + " vs " + b.to_string() + ")");
            return a;
        }
        return first ? a : b;
    };

    // d'_2: branch on L_T1 |psi_t11| >= L_R1 |psi_r11| (flow 1 transmit-limited).
    const Rational t11 = s.l_t1 * s.psi_t11.measure();
    const Rational r11 = s.l_r1 * s.psi_r11.measure();
    const Rational d2_prime = pick(t11 == r11, t11 > r11, min(aux.d_t2, aux.delta_r2),
                                   min(aux.delta_t2, aux.d_r2), "prime");

    // d''_1: branch on L_R2 |psi_r22| < L_T2 |psi_t22| (flow 2 receive-limited).
    const Rational r22 = s.l_r2 * s.psi_r22.measure();
    const Rational t22 = s.l_t2 * s.psi_t22.measure();
    const Rational d1_double = pick(r22 == t22, r22 < t22, min(aux.d_t1, aux.delta_r1),
                                    min(aux.delta_t1, aux.d_r1), "double_prime");

    CornerPoints out;
    out.prime = Point{d1_max, clamp(d2_prime, d2_max)};
    out.double_prime = Point{clamp(d1_double, d1_max), d2_max};
    out.aux = aux;
    return out;
}

/// Corner points straight from the region bounds:
/// prime = (d1_max, min{d2_max, d_sum_max - d1_max}) and symmetrically for
/// double_prime, each residual clamped below at 0.
inline CornerPoints corner_points_lemma2(const Scenario& s) {
    const FdBounds b = fd_bounds(s);
    CornerPoints out;
    out.prime = Point{b.d1_max, pos_part(min(b.d2_max, b.d_sum_max - b.d1_max))};
    out.double_prime = Point{pos_part(min(b.d1_max, b.d_sum_max - b.d2_max)), b.d2_max};
    out.aux = CornerAux{};
    return out;
}

/// Convex polygon in the closed first quadrant with exact rational vertices,
/// stored counter-clockwise starting at (0, 0). Degenerate regions (segments
/// on an axis, or the origin alone) keep only their extreme points.
class DofRegion {
  public:
    DofRegion() : vertices_{Point{Rational(0), Rational(0)}} {}

    /// Convex hull of the given points plus the origin.
    static DofRegion hull_of(std::vector<Point> points) {
        points.push_back(Point{Rational(0), Rational(0)});
        std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
            return a.d1 < b.d1 || (a.d1 == b.d1 && a.d2 < b.d2);
        });
        points.erase(std::unique(points.begin(), points.end()), points.end());

        // Andrew's monotone chain with exact orientation tests; points on an
        // edge's interior are dropped (cross <= 0 rejects collinear).
        const auto cross = [](const Point& o, const Point& a, const Point& b) {
            const Rational v = (a.d1 - o.d1) * (b.d2 - o.d2) - (a.d2 - o.d2) * (b.d1 - o.d1);
            return v.is_zero() ? 0 : (v.is_negative() ? -1 : 1);
        };
        if (points.size() <= 2) {
            DofRegion r;
            r.vertices_ = points;
            return r;
        }
        std::vector<Point> hull;
        for (const Point& p : points) { // lower chain
            while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        const std::size_t lower_size = hull.size() + 1;
        for (auto it = points.rbegin() + 1; it != points.rend(); ++it) { // upper chain
            while (hull.size() >= lower_size && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back(); // the closing duplicate of the first vertex

        // The chain starts at the lexicographic minimum, which is the origin
        // (every point lies in the closed first quadrant), and runs
        // counter-clockwise; no reordering needed.
        DofRegion r;
        r.vertices_ = std::move(hull);
        return r;
    }

    const std::vector<Point>& vertices() const { return vertices_; }

    /// Closed-region membership via exact half-plane tests.
    bool contains(const Point& p) const {
        const auto cross = [](const Point& o, const Point& a, const Point& b) {
            const Rational v = (a.d1 - o.d1) * (b.d2 - o.d2) - (a.d2 - o.d2) * (b.d1 - o.d1);
            return v.is_zero() ? 0 : (v.is_negative() ? -1 : 1);
        };
        if (vertices_.size() == 1)
            return p == vertices_[0];
        if (vertices_.size() == 2) {
            // Segment: collinear and within the bounding box.
            if (cross(vertices_[0], vertices_[1], p) != 0)
                return false;
            const Rational lo1 = min(vertices_[0].d1, vertices_[1].d1);
            const Rational hi1 = max(vertices_[0].d1, vertices_[1].d1);
            const Rational lo2 = min(vertices_[0].d2, vertices_[1].d2);
            const Rational hi2 = max(vertices_[0].d2, vertices_[1].d2);
            return lo1 <= p.d1 && p.d1 <= hi1 && lo2 <= p.d2 && p.d2 <= hi2;
        }
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const Point& a = vertices_[i];
            const Point& b = vertices_[(i + 1) % vertices_.size()];
            if (cross(a, b, p) < 0)
                return false;
        }
        return true;
    }

    /// Largest d1 over the region.
    Rational max_d1() const {
        Rational best(0);
        for (const Point& v : vertices_)
            best = max(best, v.d1);
        return best;
    }

    /// Largest d2 over the region.
    Rational max_d2() const {
        Rational best(0);
        for (const Point& v : vertices_)
            best = max(best, v.d2);
        return best;
    }

    /// Largest d1 + d2 over the region.
    Rational max_sum() const {
        Rational best(0);
        for (const Point& v : vertices_)
            best = max(best, v.d1 + v.d2);
        return best;
    }

    friend bool operator==(const DofRegion& a, const DofRegion& b) {
        return a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const DofRegion& a, const DofRegion& b) { return !(a == b); }

  private:
    std::vector<Point> vertices_;
};

/// Region from the three bounds: hull of (0,0), (d1_max,0), both corner
/// points, and (0,d2_max).
inline DofRegion region_from_bounds(const FdBounds& b) {
    const Point prime{b.d1_max, pos_part(min(b.d2_max, b.d_sum_max - b.d1_max))};
    const Point double_prime{pos_part(min(b.d1_max, b.d_sum_max - b.d2_max)), b.d2_max};
    return DofRegion::hull_of({Point{b.d1_max, Rational(0)}, prime, double_prime,
                               Point{Rational(0), b.d2_max}});
}

/// Full-duplex region with self- and inter-node interference.
inline DofRegion fd_region(const Scenario& s) { return region_from_bounds(fd_bounds(s)); }

/// Half-duplex region: the time-sharing triangle between the axis maxima.
inline DofRegion hd_region(const Scenario& s) {
    const FdBounds b = fd_bounds(s);
    return DofRegion::hull_of(
        {Point{b.d1_max, Rational(0)}, Point{Rational(0), b.d2_max}});
}

/// Full-duplex region with self-interference only: same per-flow maxima,
/// sum bounded by the base-station term alone.
inline DofRegion fdp_region(const Scenario& s) {
    FdBounds b = fd_bounds(s);
    b.d_sum_max = fdp_sum_bound(s);
    return region_from_bounds(b);
}

/// Outcome of an exact containment test.
enum class SetRelation { proper_subset, equal, not_subset };

/// Exact containment of convex polygons: a is inside b iff every vertex of a
/// is (convexity makes vertex containment sufficient).
inline SetRelation region_subset(const DofRegion& a, const DofRegion& b) {
    for (const Point& v : a.vertices())
        if (!b.contains(v))
            return SetRelation::not_subset;
    for (const Point& v : b.vertices())
        if (!a.contains(v))
            return SetRelation::proper_subset;
    return SetRelation::equal;
}

/// True iff the region is exactly the product box [0, max_d1] x [0, max_d2].
inline bool region_is_rectangular(const DofRegion& r) {
    const Rational d1 = r.max_d1();
    const Rational d2 = r.max_d2();
    return r == DofRegion::hull_of({Point{d1, Rational(0)}, Point{d1, d2}, Point{Rational(0), d2}});
}

/// Pairwise relations between the three regions of one scenario.
struct Classification {
    SetRelation hd_vs_fd;  ///< D_HD within D_FD
    SetRelation fd_vs_fdp; ///< D_FD within D_FD'
    bool fd_rectangular;
    bool fdp_rectangular;

    /// Compact chain such as "HD<FD=FD'" (< strict inclusion, = equality).
    std::string text() const {
        const auto rel = [](SetRelation r) { return r == SetRelation::equal ? "=" : "<"; };
        return std::string("HD") + rel(hd_vs_fd) + "FD" + rel(fd_vs_fdp) + "FD'";
    }
};

/// Computes all three regions and their pairwise relations.
inline Classification compare_regions(const Scenario& s) {
    const DofRegion hd = hd_region(s);
    const DofRegion fd = fd_region(s);
    const DofRegion fdp = fdp_region(s);
    Classification c;
    c.hd_vs_fd = region_subset(hd, fd);
    c.fd_vs_fdp = region_subset(fd, fdp);
    c.fd_rectangular = region_is_rectangular(fd);
    c.fdp_rectangular = region_is_rectangular(fdp);
    return c;
}

} // namespace fdx
