#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bundles.hpp"
#include "intersection.hpp"

namespace triscroll {

// ===========================================================================
// Scrolls over P^1
// ===========================================================================

/// P(O (+) O(a1) (+) ... (+) O(a_{n-1})) over P^1, polarized by xi + b F.
/// The splitting is normalized: 0 <= a1 <= ... <= a_{n-1}, and b >= 1 is
/// exactly the (very) ampleness window for the normalized splitting.
struct ScrollOverCurve {
    std::vector<Int> alphas; // n-1 entries, ascending, non-negative
    Int b = 1;
    Int n = 2;

    ScrollOverCurve(Int dim, std::vector<Int> split, Int twist_deg)
        : alphas(std::move(split)), b(twist_deg), n(dim) {
        if (n < 2 || static_cast<Int>(alphas.size()) != n - 1)
            throw std::invalid_argument("scroll over P^1 of dimension n needs n-1 splitting degrees");
        if (!std::is_sorted(alphas.begin(), alphas.end()) || (!alphas.empty() && alphas.front() < 0))
            throw std::invalid_argument("splitting degrees must satisfy 0 <= a1 <= ... <= a_{n-1}");
        if (b < 1)
            throw std::invalid_argument("polarization twist must satisfy b >= 1");
    }

    Int alpha() const { return std::accumulate(alphas.begin(), alphas.end(), Int{0}); }
};

struct ScrollDegreeData {
    Int degree = 0; // L^n
    Int h0 = 0;     // number of sections of L
};

/// Chern-Wu degree L^n = alpha + n b, and h^0(L) = n + degree.
inline ScrollDegreeData degree_over_P1(const ScrollOverCurve& s) {
    const Int d = s.alpha() + s.n * s.b;
    return ScrollDegreeData{d, s.n + d};
}

// ===========================================================================
// Scrolls over a surface
// ===========================================================================

/// Y = P(E) over a surface model, polarized by the tautological class H of
/// an ample and spanned rank-2 bundle E (the hypothesis is the caller's).
/// The in-scope regime has a regular base, so q = 0 is enforced.
struct ScrollOverSurface {
    RankTwoBundle bundle;

    explicit ScrollOverSurface(RankTwoBundle e) : bundle(std::move(e)) {
        if (bundle.base.q != 0)
            throw UnsupportedModelError("scroll-over-surface regime requires a regular base (q = 0)");
    }
};

/// Formal divisor class a*H + pullback(D) on Y = P(E). The full threefold
/// intersection ring is never materialized: the single top number needed,
/// H^3 = c1^2 - c2, lives in the classification layer.
struct ScrollDivisor {
    Int h_mult = 0;
    DivisorClass pullback;

    friend bool operator==(const ScrollDivisor&, const ScrollDivisor&) = default;

    friend ScrollDivisor operator-(const ScrollDivisor& a, const ScrollDivisor& b) {
        return ScrollDivisor{a.h_mult - b.h_mult, a.pullback - b.pullback};
    }
};

inline std::string to_string(const SurfaceModel& base, const ScrollDivisor& d) {
    std::string out = std::to_string(d.h_mult) + "H";
    if (!d.pullback.is_zero())
        out += " + pi*(" + to_string(base, d.pullback) + ")";
    return out;
}

/// K_Y = -2H + pi*(K_X + det E).
inline ScrollDivisor canonical_of_scroll(const ScrollOverSurface& s) {
    const auto& e = s.bundle;
    return ScrollDivisor{-2, canonical_class(e.base) + e.c1};
}

/// Ramification divisor of the degree-3 cover: R = 2H + pi*(K_X + det E).
/// Identically R = K_Y + 4H.
inline ScrollDivisor ramification_of_triple_solid(const ScrollOverSurface& s) {
    const auto& e = s.bundle;
    return ScrollDivisor{2, canonical_class(e.base) + e.c1};
}

/// Data of (Y, R) as a conic fibration inside P(F), F = push-forward of R:
/// c1(F) = 3(K_X + 2 det E), and Y lies in |2 xi + pullback(B)| with
/// B = -(2/3) c1(F) = -2(K_X + 2 det E) (empty discriminant).
struct ConicFibrationData {
    DivisorClass c1_rank3;
    DivisorClass quadric_twist;
};

inline ConicFibrationData conic_fibration_data(const ScrollOverSurface& s) {
    const auto& e = s.bundle;
    const DivisorClass k2det = canonical_class(e.base) + 2 * e.c1;
    const DivisorClass c1f = 3 * k2det;
    // B = -(2/3) c1(F); exact by construction, so a failure here is a bug
    DivisorClass b = 2 * c1f;
    for (auto& coeff : b.coeffs) {
        if (coeff % 3 != 0)
            throw InternalConsistencyError("2 c1(F) is not divisible by 3");
        coeff = -(coeff / 3);
    }
    return ConicFibrationData{c1f, b};
}

// ===========================================================================
// Polarized-manifold invariants
// ===========================================================================

/// Sectional genus of a polarized surface: g = 1 + (K + L).L / 2.
inline Int sectional_genus(const SurfaceModel& model, const DivisorClass& l) {
    const Int twice = intersect(model, canonical_class(model) + l, l);
    if (twice % 2 != 0)
        throw IntegralityError("sectional genus is not an integer: (K+L).L = " +
                               std::to_string(twice));
    return 1 + twice / 2;
}

/// Degree/section data of a polarized manifold, enough for the Delta-genus.
struct PolarizedData {
    Int dim = 0;
    Int degree = 0; // L^dim
    Int h0 = 0;     // h^0(L)

    PolarizedData(Int dimension, Int deg, Int sections)
        : dim(dimension), degree(deg), h0(sections) {
        if (degree < 1)
            throw std::invalid_argument("polarized manifold needs degree >= 1");
        if (h0 < dim + 1)
            throw std::invalid_argument("spanned polarization needs h0 >= dim + 1");
    }
};

/// Delta(X, L) = dim + degree - h^0(L).
inline Int delta_genus(const PolarizedData& p) { return p.dim + p.degree - p.h0; }

} // namespace triscroll
