// SPDX-License-Identifier: Apache-2.0
//
// Finite unions of half-open intervals over the normalized spatial axis
// [-1, 1), with exact rational endpoints and exact Lebesgue measure.

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fdx/errors.hpp"
#include "fdx/rational.hpp"

namespace fdx {

/// One half-open piece [lo, hi). Valid pieces satisfy lo < hi.
struct Interval {
    Rational lo;
    Rational hi;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

/// A normalized set of disjoint, sorted, non-adjacent half-open intervals,
/// each contained in [-1, 1). The empty set is the default value.
class IntervalSet {
  public:
    IntervalSet() = default;

    /// Builds a set from arbitrary raw pieces: validates each endpoint pair,
    /// sorts, and merges overlapping or touching pieces. Empty pairs
    /// (lo == hi) are dropped; lo > hi throws MalformedPair; endpoints
    /// outside [-1, 1] throw OutOfRange.
    static IntervalSet normalize(std::vector<Interval> raw) {
        const Rational lo_bound(-1);
        const Rational hi_bound(1);
        for (const Interval& piece : raw) {
            if (piece.lo < lo_bound || piece.hi > hi_bound)
                throw OutOfRange("interval [" + piece.lo.to_string() + ", " +
                                 piece.hi.to_string() + ") leaves [-1, 1]");
            if (piece.hi < piece.lo)
                throw MalformedPair("interval [" + piece.lo.to_string() + ", " +
                                    piece.hi.to_string() + ") has hi < lo");
        }
        raw.erase(std::remove_if(raw.begin(), raw.end(),
                                 [](const Interval& p) { return p.lo == p.hi; }),
                  raw.end());
        std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
            return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
        });
        IntervalSet out;
        for (const Interval& piece : raw) {
            if (!out.pieces_.empty() && piece.lo <= out.pieces_.back().hi) {
                if (out.pieces_.back().hi < piece.hi)
                    out.pieces_.back().hi = piece.hi;
            } else {
                out.pieces_.push_back(piece);
            }
        }
        return out;
    }

    /// Convenience factory for a single piece.
    static IntervalSet single(const Rational& lo, const Rational& hi) {
        return normalize({Interval{lo, hi}});
    }

    const std::vector<Interval>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    std::size_t size() const { return pieces_.size(); }

    /// Total length, exact.
    Rational measure() const {
        Rational total(0);
        for (const Interval& piece : pieces_)
            total += piece.hi - piece.lo;
        return total;
    }

    /// Membership respects half-openness: contains(lo) but not contains(hi).
    bool contains(const Rational& x) const {
        for (const Interval& piece : pieces_) {
            if (x < piece.lo)
                return false;
            if (x < piece.hi)
                return true;
        }
        return false;
    }

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
        return a.pieces_ == b.pieces_;
    }
    friend bool operator!=(const IntervalSet& a, const IntervalSet& b) { return !(a == b); }

    std::string to_string() const {
        if (pieces_.empty())
            return "{}";
        std::string out;
        for (const Interval& piece : pieces_) {
            if (!out.empty())
                out += " u ";
            out += "[" + piece.lo.to_string() + ", " + piece.hi.to_string() + ")";
        }
        return out;
    }

  private:
    std::vector<Interval> pieces_;
};

/// Union of two normalized sets.
inline IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all = a.pieces();
    all.insert(all.end(), b.pieces().begin(), b.pieces().end());
    return IntervalSet::normalize(std::move(all));
}

/// Intersection of two normalized sets (linear merge sweep).
inline IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const Interval& p = a.pieces()[i];
        const Interval& q = b.pieces()[j];
        const Rational lo = max(p.lo, q.lo);
        const Rational hi = min(p.hi, q.hi);
        if (lo < hi)
            out.push_back(Interval{lo, hi});
        if (p.hi < q.hi)
            ++i;
        else
            ++j;
    }
    return IntervalSet::normalize(std::move(out));
}

/// Set difference a \ b (linear sweep over a, carving out b).
inline IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t j = 0;
    for (const Interval& p : a.pieces()) {
        Rational cursor = p.lo;
        while (j < b.size() && b.pieces()[j].hi <= cursor)
            ++j;
        std::size_t k = j;
        while (k < b.size() && b.pieces()[k].lo < p.hi) {
            const Interval& q = b.pieces()[k];
            if (cursor < q.lo)
                out.push_back(Interval{cursor, q.lo});
            cursor = max(cursor, q.hi);
            if (p.hi <= cursor)
                break;
            ++k;
        }
        if (cursor < p.hi)
            out.push_back(Interval{cursor, p.hi});
    }
    return IntervalSet::normalize(std::move(out));
}

} // namespace fdx
