#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace triscroll {

using Int = long long;

// ===========================================================================
// Triple planes: branch-curve and Tschirnhaus arithmetic
// ===========================================================================

/// Invariant pack of a general triple plane, derived from the Chern numbers
/// (b1, b2) of its Tschirnhaus bundle, or equivalently from the branch
/// degree b = -2 b1 and the cusp count c = 3 b2.
struct TriplePlaneData {
    Int b1 = 0;
    Int b2 = 0;
    Int b = 0;     // degree of the branch curve
    Int c = 0;     // number of cusps
    Int g = 0;     // sectional genus, b = 2g + 4
    Int pg = 0;    // geometric genus of the covering surface
    Int chi = 0;   // 1 + pg
    Int ksq = 0;   // K^2 of the covering surface
    Int euler = 0; // topological Euler number

    friend bool operator==(const TriplePlaneData&, const TriplePlaneData&) = default;
};

/// Miranda's formulas: K^2 = 27 + 12 b1 + 2 b1^2 - 3 b2 and
/// e = 9 + 6 b1 + 4 b1^2 - 9 b2.
inline std::pair<Int, Int> miranda(Int b1, Int b2) {
    return {27 + 12 * b1 + 2 * b1 * b1 - 3 * b2, 9 + 6 * b1 + 4 * b1 * b1 - 9 * b2};
}

/// Full invariant pack from branch data. Errors on non-integral p_g or g:
/// enumerators must pre-screen parity, so silent corruption is impossible.
inline TriplePlaneData branch_invariants(Int b, Int c) {
    if (b <= 0)
        throw std::invalid_argument("branch degree must be positive");
    if (c < 0)
        throw std::invalid_argument("cusp count must be non-negative");
    if (b % 2 != 0)
        throw IntegralityError("branch degree " + std::to_string(b) +
                               " is odd: sectional genus (b-4)/2 is not an integer");

    TriplePlaneData t;
    t.b = b;
    t.c = c;
    t.b1 = -b / 2;
    t.g = (b - 4) / 2;

    const Rational pg = Rational(b * (b - 6), 8) + Rational(2) - Rational(c, 3);
    if (!pg.is_integer())
        throw IntegralityError("p_g = b(b-6)/8 + 2 - c/3 is not an integer for (b,c) = (" +
                               std::to_string(b) + "," + std::to_string(c) + ")");
    t.pg = pg.as_integer();
    t.chi = 1 + t.pg;
    t.b2 = c / 3; // c = 3 b2; divisibility is implied by p_g integrality here
    t.ksq = 27 - 6 * b + (b * b) / 2 - c;
    t.euler = 9 - 3 * b + b * b - 3 * c;
    return t;
}

/// Invariants of a triple plane with decomposable Tschirnhaus bundle
/// O(-m) (+) O(-n): b = 2(m+n), c = 3mn, with the closed forms for
/// p_g, K^2 and e rewritten in (m, n).
inline TriplePlaneData decomposable_invariants(Int m, Int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("decomposable Tschirnhaus summands need m, n >= 1");
    TriplePlaneData t;
    t.b = 2 * (m + n);
    t.c = 3 * m * n;
    t.b1 = -(m + n);
    t.b2 = m * n;
    t.g = (t.b - 4) / 2;
    t.pg = (m * m + n * n - 3 * m - 3 * n) / 2 + 2; // numerator is always even
    t.chi = 1 + t.pg;
    t.ksq = 2 * (m + n - 3) * (m + n - 3) - 3 * (m * n - 3);
    t.euler = 4 * (m + n) * (m + n) - 6 * (m + n) - 9 * (m * n - 1);

    if (t != branch_invariants(t.b, t.c))
        throw InternalConsistencyError("decomposable invariants disagree with branch invariants");
    return t;
}

/// Integral points of the circle m^2 + n^2 - 3m - 3n + 4 = 0 (center
/// (3/2, 3/2), radius 1/sqrt(2)). The circle equation forces
/// (2m-3)^2 + (2n-3)^2 = 2, so each coordinate lies in {1, 2}: the search
/// over that box is exhaustive, not a window guess.
inline std::vector<std::pair<Int, Int>> gamma_integral_points() {
    std::vector<std::pair<Int, Int>> pts;
    for (Int m = 1; m <= 2; ++m)
        for (Int n = 1; n <= 2; ++n)
            if (m * m + n * n - 3 * m - 3 * n + 4 == 0)
                pts.emplace_back(m, n);
    return pts;
}

/// Membership test for the circle above, exposed for spot checks.
inline bool on_gamma_circle(Int m, Int n) {
    return m * m + n * n - 3 * m - 3 * n + 4 == 0;
}

// ---------------------------------------------------------------------------
// Cusp-count bounds
// ---------------------------------------------------------------------------

/// Admissible window for the cusp count of a triple plane cut out of a
/// triple solid: b^2/6 < c <= min{ b(5b-6)/16 - s/2, (3/8) b(b-6) + 6 }.
/// The refined bound (3/10) b^2 - (3/5)(s+3) applies only when the base
/// surface is rational and not P^2.
struct CuspBounds {
    Rational lower_strict;     // c must exceed this strictly
    Rational upper;            // min of the two unconditional bounds
    Rational upper_topological; // b(5b-6)/16 - s/2, from K^2 <= 3e
    Rational upper_pg;          // (3/8) b(b-6) + 6, from p_g >= 0
    Rational refined;           // (3/10) b^2 - (3/5)(s+3)
    bool refined_applicable = false;

    /// True when a cusp count sits inside every applicable bound.
    bool admits(Int c) const {
        if (!(lower_strict < Rational(c)) || !(Rational(c) <= upper))
            return false;
        return !refined_applicable || Rational(c) <= refined;
    }
};

inline CuspBounds cusp_bounds(Int b, Int s, bool rational_non_p2) {
    if (b <= 0 || b % 2 != 0)
        throw std::invalid_argument("cusp bounds need a positive even branch degree");
    if (s < 1)
        throw std::invalid_argument("cusp bounds need s >= 1");
    CuspBounds cb;
    cb.lower_strict = Rational(b * b, 6);
    cb.upper_topological = Rational(b * (5 * b - 6), 16) - Rational(s, 2);
    cb.upper_pg = Rational(3 * b * (b - 6), 8) + Rational(6);
    cb.upper = min(cb.upper_topological, cb.upper_pg);
    cb.refined = Rational(3 * b * b, 10) - Rational(3 * (s + 3), 5);
    cb.refined_applicable = rational_non_p2;
    return cb;
}

} // namespace triscroll
