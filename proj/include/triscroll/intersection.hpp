#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace triscroll {

using Int = long long;

// ===========================================================================
// Divisor classes
// ===========================================================================

/// Numerical equivalence class of a divisor: integer coordinates in the
/// owning model's fixed basis. Torsion is deliberately not represented;
/// everything downstream consumes intersection numbers only.
struct DivisorClass {
    std::string model;
    std::vector<Int> coeffs;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    bool is_zero() const {
        for (Int c : coeffs)
            if (c != 0)
                return false;
        return true;
    }
};

inline void require_same_model(const DivisorClass& a, const DivisorClass& b) {
    if (a.model != b.model || a.coeffs.size() != b.coeffs.size())
        throw BasisMismatchError("divisor classes live on different models: '" + a.model +
                                 "' vs '" + b.model + "'");
}

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_model(a, b);
    DivisorClass r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] += b.coeffs[i];
    return r;
}

inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require_same_model(a, b);
    DivisorClass r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] -= b.coeffs[i];
    return r;
}

inline DivisorClass operator-(const DivisorClass& a) {
    DivisorClass r = a;
    for (auto& c : r.coeffs)
        c = -c;
    return r;
}

inline DivisorClass operator*(Int k, const DivisorClass& a) {
    DivisorClass r = a;
    for (auto& c : r.coeffs)
        c *= k;
    return r;
}

// ===========================================================================
// Surface models
// ===========================================================================

/// A model surface: a named basis with its symmetric intersection form,
/// the canonical class in that basis, and the numeric invariants
/// (irregularity q, geometric genus p_g, K^2, topological Euler number e).
///
/// Abstract models carry the invariants only (empty basis); lattice
/// operations on them throw UnsupportedModelError.
struct SurfaceModel {
    std::string name;
    std::vector<std::string> basis;
    std::vector<std::vector<Int>> form;
    std::vector<Int> canonical;
    Int q = 0;
    Int pg = 0;
    Int ksq = 0;
    Int euler = 0;

    bool has_lattice() const { return !basis.empty(); }
    std::size_t rank() const { return basis.size(); }

    /// Builds a divisor class on this model, validating the coordinate count.
    DivisorClass cls(std::vector<Int> coeffs) const {
        if (!has_lattice())
            throw UnsupportedModelError("model '" + name + "' has no divisor lattice");
        if (coeffs.size() != rank())
            throw BasisMismatchError("expected " + std::to_string(rank()) +
                                     " coordinates on model '" + name + "'");
        return DivisorClass{name, std::move(coeffs)};
    }

    DivisorClass zero() const { return cls(std::vector<Int>(rank(), 0)); }
};

/// D1 . D2 evaluated through the model's intersection form.
inline Int intersect(const SurfaceModel& model, const DivisorClass& d1, const DivisorClass& d2) {
    if (!model.has_lattice())
        throw UnsupportedModelError("model '" + model.name + "' has no divisor lattice");
    if (d1.model != model.name || d2.model != model.name)
        throw BasisMismatchError("divisor class does not belong to model '" + model.name + "'");
    require_same_model(d1, d2);
    Int total = 0;
    for (std::size_t i = 0; i < model.rank(); ++i)
        for (std::size_t j = 0; j < model.rank(); ++j)
            total += d1.coeffs[i] * model.form[i][j] * d2.coeffs[j];
    return total;
}

inline Int self_intersection(const SurfaceModel& model, const DivisorClass& d) {
    return intersect(model, d, d);
}

/// Canonical class of a built-in model.
inline DivisorClass canonical_class(const SurfaceModel& model) {
    if (!model.has_lattice())
        throw UnsupportedModelError("canonical class unavailable: model '" + model.name +
                                    "' has no divisor lattice");
    return DivisorClass{model.name, model.canonical};
}

/// Hodge index check: for D1 with D1^2 > 0, (D1.D2)^2 >= D1^2 * D2^2.
inline bool hodge_index_holds(const SurfaceModel& model, const DivisorClass& d1,
                              const DivisorClass& d2) {
    const Int d1sq = intersect(model, d1, d1);
    if (d1sq <= 0)
        throw std::invalid_argument("hodge_index_holds requires D1^2 > 0");
    const Int mixed = intersect(model, d1, d2);
    return mixed * mixed >= d1sq * intersect(model, d2, d2);
}

namespace detail {

inline void validate_model(const SurfaceModel& m) {
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j)
            if (m.form[i][j] != m.form[j][i])
                throw InternalConsistencyError("intersection form of '" + m.name +
                                               "' is not symmetric");
    const DivisorClass k{m.name, m.canonical};
    if (intersect(m, k, k) != m.ksq)
        throw InternalConsistencyError("stored K^2 of '" + m.name +
                                       "' disagrees with the form");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Built-in models
// ---------------------------------------------------------------------------

inline SurfaceModel projective_plane() {
    SurfaceModel m;
    m.name = "P2";
    m.basis = {"h"};
    m.form = {{1}};
    m.canonical = {-3};
    m.q = 0;
    m.pg = 0;
    m.ksq = 9;
    m.euler = 3;
    detail::validate_model(m);
    return m;
}

/// P^1 x P^1 with the two rulings as basis.
inline SurfaceModel quadric_surface() {
    SurfaceModel m;
    m.name = "P1xP1";
    m.basis = {"l1", "l2"};
    m.form = {{0, 1}, {1, 0}};
    m.canonical = {-2, -2};
    m.q = 0;
    m.pg = 0;
    m.ksq = 8;
    m.euler = 4;
    detail::validate_model(m);
    return m;
}

/// Geometrically ruled surface over a curve of genus q with invariant e,
/// basis (sigma, f) where sigma is the section of minimal self-intersection
/// -e and f a fiber. K = -2 sigma + (2q - 2 - e) f.
inline SurfaceModel ruled_surface(Int q, Int e) {
    if (q < 0)
        throw UnsupportedModelError("ruled surface needs base genus q >= 0");
    if (q == 0 && e < 0)
        throw UnsupportedModelError("rational ruled surface needs invariant e >= 0");
    SurfaceModel m;
    m.name = q == 0 ? "F" + std::to_string(e)
                    : "ruled_q" + std::to_string(q) + "e" + std::to_string(e);
    m.basis = {"sigma", "f"};
    m.form = {{-e, 1}, {1, 0}};
    m.canonical = {-2, 2 * q - 2 - e};
    m.q = q;
    m.pg = 0;
    m.ksq = 8 * (1 - q);
    m.euler = 4 * (1 - q);
    detail::validate_model(m);
    return m;
}

inline SurfaceModel hirzebruch(Int e) { return ruled_surface(0, e); }
inline SurfaceModel elliptic_ruled(Int e) { return ruled_surface(1, e); }

/// Invariants-only surface (q = 0 throughout this library's scope).
/// Used by bound checks that never touch a divisor lattice.
inline SurfaceModel abstract_regular_surface(Int ksq, Int euler, Int pg) {
    SurfaceModel m;
    m.name = "abstract(K2=" + std::to_string(ksq) + " e=" + std::to_string(euler) +
             " pg=" + std::to_string(pg) + ")";
    m.q = 0;
    m.pg = pg;
    m.ksq = ksq;
    m.euler = euler;
    return m;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// "2h", "sigma+2f", "-2sigma+f", "0", ...
inline std::string to_string(const SurfaceModel& model, const DivisorClass& d) {
    if (d.model != model.name)
        throw BasisMismatchError("divisor class does not belong to model '" + model.name + "'");
    std::string out;
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
        const Int c = d.coeffs[i];
        if (c == 0)
            continue;
        if (!out.empty() && c > 0)
            out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += std::to_string(c);
        out += model.basis[i];
    }
    return out.empty() ? "0" : out;
}

// ===========================================================================
// Ambient models: Schubert classes on G(1,3), P^3, P^2 x P^2
// ===========================================================================

/// Graded ambient variety described only by the multiplication rules its
/// consumers need (top products of complementary classes).
struct AmbientModel {
    std::string name;
    std::vector<std::string> basis;
    std::vector<std::vector<Int>> top_pairing;
};

/// Grassmannian of lines in P^3: the two codimension-2 Schubert classes
/// Omega(0,3) (lines through a point) and Omega(1,2) (lines in a plane),
/// with Omega(0,3)^2 = Omega(1,2)^2 = 1 and mixed product 0.
inline AmbientModel grassmannian_lines_p3() {
    return AmbientModel{"G(1,3)", {"Omega(0,3)", "Omega(1,2)"}, {{1, 0}, {0, 1}}};
}

/// P^3 with the hyperplane class h, h^3 the point class.
inline AmbientModel projective_space_p3() {
    return AmbientModel{"P3", {"h"}, {{1}}};
}

enum class SchubertClass { Omega03, Omega12 };

/// Top product of the surface class alpha*Omega(0,3) + beta*Omega(1,2)
/// with one codimension-2 Schubert class.
inline Int schubert_surface_product(Int alpha, Int beta, SchubertClass other) {
    const auto g = grassmannian_lines_p3();
    const std::array<Int, 2> w{alpha, beta};
    const std::size_t j = other == SchubertClass::Omega03 ? 0 : 1;
    Int total = 0;
    for (std::size_t i = 0; i < 2; ++i)
        total += w[i] * g.top_pairing[i][j];
    return total;
}

/// Degree of the surface class, i.e. its product with the square of the
/// hyperplane class sigma_1^2 = Omega(0,3) + Omega(1,2).
inline Int schubert_surface_degree(Int alpha, Int beta) {
    return schubert_surface_product(alpha, beta, SchubertClass::Omega03) +
           schubert_surface_product(alpha, beta, SchubertClass::Omega12);
}

/// Class of bidegree (a,b) on P^2 x P^2, meaning a*h1 + b*h2.
using BiDegree = std::pair<Int, Int>;

/// Top intersection of four divisor classes on P^2 x P^2. Expands the
/// product and keeps the h1^2 h2^2 coefficient (h1^3 = h2^3 = 0,
/// h1^2 h2^2 = point).
inline Int p2xp2_product(const std::array<BiDegree, 4>& classes) {
    Int total = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Int term = 1;
            for (int k = 0; k < 4; ++k)
                term *= (k == i || k == j) ? classes[k].first : classes[k].second;
            total += term;
        }
    return total;
}

} // namespace triscroll
