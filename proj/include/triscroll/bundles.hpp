#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intersection.hpp"

namespace triscroll {

// ===========================================================================
// Rank-2 bundles as Chern data
// ===========================================================================

/// Rank-2 bundle on a surface model, represented purely by its Chern data
/// plus optional structure tags. No sheaf model is kept: every argument in
/// scope consumes c1, c2, decomposability and splitting facts only.
/// Ampleness/spannedness are input hypotheses recorded by callers, never
/// computed here.
struct RankTwoBundle {
    SurfaceModel base;
    DivisorClass c1;
    Int c2 = 0;

    /// Line-bundle summands (M, N) when the bundle is a known direct sum.
    std::optional<std::pair<DivisorClass, DivisorClass>> summands;
    /// Generic splitting type (a1 >= a2) on lines of the base, when known.
    std::optional<std::pair<Int, Int>> splitting_type;
};

inline RankTwoBundle make_bundle(const SurfaceModel& base, DivisorClass c1, Int c2) {
    if (c1.model != base.name)
        throw BasisMismatchError("c1 does not belong to model '" + base.name + "'");
    return RankTwoBundle{base, std::move(c1), c2, std::nullopt, std::nullopt};
}

/// M (+) N with c1 = M + N and c2 = M.N.
inline RankTwoBundle decomposable_bundle(const SurfaceModel& base, const DivisorClass& m,
                                         const DivisorClass& n) {
    RankTwoBundle e = make_bundle(base, m + n, intersect(base, m, n));
    e.summands = std::make_pair(m, n);
    return e;
}

/// Rank-3 bundle tracked by c1 alone (all consumers need only c1).
struct RankThreeBundleData {
    SurfaceModel base;
    DivisorClass c1;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// E (x) O(D):  c1 -> c1 + 2D,  c2 -> c2 + c1.D + D^2.
inline RankTwoBundle twist(const RankTwoBundle& e, const DivisorClass& d) {
    if (d.model != e.base.name)
        throw BasisMismatchError("twist divisor does not belong to model '" + e.base.name + "'");
    RankTwoBundle r = e;
    r.c1 = e.c1 + 2 * d;
    r.c2 = e.c2 + intersect(e.base, e.c1, d) + intersect(e.base, d, d);
    if (e.summands)
        r.summands = std::make_pair(e.summands->first + d, e.summands->second + d);
    r.splitting_type = std::nullopt; // not transformable for a general twist divisor
    return r;
}

/// c1 of S^2(E) (x) O(L), a rank-3 bundle: 3 c1(E) + 3 L.
inline RankThreeBundleData sym2_twisted_c1(const RankTwoBundle& e, const DivisorClass& l) {
    if (l.model != e.base.name)
        throw BasisMismatchError("twist divisor does not belong to model '" + e.base.name + "'");
    return RankThreeBundleData{e.base, 3 * e.c1 + 3 * l};
}

enum class StabilityVerdict { StableSide, ProperlySemistableBoundary, UnstableSide };

struct BogomolovResult {
    Int discriminant = 0; // c1^2 - 4 c2
    StabilityVerdict verdict = StabilityVerdict::StableSide;
};

inline BogomolovResult bogomolov(const RankTwoBundle& e) {
    const Int disc = intersect(e.base, e.c1, e.c1) - 4 * e.c2;
    StabilityVerdict v = disc < 0   ? StabilityVerdict::StableSide
                         : disc == 0 ? StabilityVerdict::ProperlySemistableBoundary
                                     : StabilityVerdict::UnstableSide;
    return BogomolovResult{disc, v};
}

/// All splittings O(a1) (+) O(a2), a1 >= a2 >= 1, of an ample rank-2 bundle
/// on P^1 with c1 of the given degree. Ampleness on P^1 is exactly "every
/// summand has degree >= 1". Empty iff degree < 2; always finite.
inline std::vector<std::pair<Int, Int>> ample_split_rank2_on_P1(Int c1_degree) {
    std::vector<std::pair<Int, Int>> out;
    for (Int a2 = 1; 2 * a2 <= c1_degree; ++a2)
        out.emplace_back(c1_degree - a2, a2);
    return out;
}

/// Chern data of the rank-2 quotient in 0 -> L -> O^3 -> E -> 0:
/// by the Whitney sum formula c1(E) = -L and c2(E) = L^2.
inline RankTwoBundle quotient_of_trivial(const SurfaceModel& base, const DivisorClass& sub_line) {
    return make_bundle(base, -sub_line, intersect(base, sub_line, sub_line));
}

} // namespace triscroll
