#ifndef LYZVAL_VALUATIONS_HPP
#define LYZVAL_VALUATIONS_HPP

// Matrix-valued valuations on polytopes.
//
// Everything here is SL(n)-contravariant: mu(phi P) = phi^{-T} mu(P) phi^{-1}
// for volume-preserving phi. The building blocks are the moment matrix (via
// a closed-form simplex integral), the LYZ matrix of a Cauchy-equation
// witness zeta (a facet sum, radical-free), and an antisymmetric valuation I
// defined on origin simplices in R^3. The classified families combine them.

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lyzval/errors.hpp"
#include "lyzval/linalg.hpp"
#include "lyzval/polytope.hpp"

namespace lyzval {

// A solution of Cauchy's functional equation f(x+y) = f(x) + f(y). In exact
// mode only linear witnesses f(x) = c x exist. In float mode an arbitrary
// callable may be supplied; it is spot-checked for additivity on a fixed
// sample and rejected with InvalidWitness if it visibly fails.
template <typename S>
class CauchyWitness {
public:
    CauchyWitness() : coef_(0) {}

    static CauchyWitness linear(S c) {
        CauchyWitness w;
        w.coef_ = std::move(c);
        return w;
    }

    static CauchyWitness from_callable(std::function<S(S)> f) {
        static_assert(!scalar_traits<S>::exact,
                      "exact mode admits only linear witnesses; use CauchyWitness::linear");
        static const double probes[][2] = {
            {1.0, 1.0}, {0.5, 2.0}, {3.0, 0.25}, {2.0, 5.0}, {0.125, 0.375}, {-1.5, 4.0}};
        for (const auto& p : probes) {
            S lhs = f(S(p[0] + p[1]));
            S rhs = f(S(p[0])) + f(S(p[1]));
            if (!scalar_traits<S>::eq(lhs, rhs))
                throw InvalidWitness("witness callable fails additivity on the probe sample");
        }
        CauchyWitness w;
        w.coef_ = f(S(1));
        w.fn_ = std::move(f);
        return w;
    }

    bool is_linear() const { return !fn_; }

    // The slope c of a linear witness.
    const S& coefficient() const {
        if (fn_)
            throw Error("witness is a raw callable, it has no exact coefficient");
        return coef_;
    }

    S operator()(const S& x) const { return fn_ ? fn_(x) : S(coef_ * x); }

private:
    S coef_;
    std::function<S(S)> fn_;
};

// The antisymmetric matrix with a's entries arranged so that anti(a) x = a x (cross product).
template <typename S>
Mat<S> anti(const Vec<S>& a) {
    if (a.dim() != 3)
        throw WrongDimension("anti is defined in dimension 3");
    Mat<S> m(3);
    m.at(0, 1) = -a[2];
    m.at(0, 2) = a[1];
    m.at(1, 0) = a[2];
    m.at(1, 2) = -a[0];
    m.at(2, 0) = -a[1];
    m.at(2, 1) = a[0];
    return m;
}

template <typename S>
Vec<S> cross(const Vec<S>& a, const Vec<S>& b) {
    if (a.dim() != 3 || b.dim() != 3)
        throw WrongDimension("cross product is defined in dimension 3");
    return Vec<S>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Second moment of the uniform measure: integral of x x^T over P. Simplex
// pieces have the closed form vol/((n+1)(n+2)) * (sum v v^T + s s^T) with s
// the vertex sum; the pieces come from the pulling triangulation.
template <typename S>
Mat<S> moment_matrix(const Polytope<S>& p) {
    const int n = p.ambient_dim();
    Mat<S> acc(n);
    if (!p.full_dimensional()) return acc;
    S fact(1);
    for (int i = 2; i <= n; ++i) fact *= S(i);
    const S scale = S(1) / (fact * S(n + 1) * S(n + 2));
    for (const auto& t : pulling_triangulation(p)) {
        Mat<S> e(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                e.at(i, j) = p.vertices()[t[i + 1]][j] - p.vertices()[t[0]][j];
        S vol_scaled = scalar_traits<S>::abs(determinant(e)) * scale;
        if (scalar_traits<S>::is_zero(vol_scaled)) continue;
        Mat<S> part(n);
        Vec<S> s(n);
        for (int k = 0; k <= n; ++k) {
            const Vec<S>& v = p.vertices()[t[k]];
            part += outer(v, v);
            s += v;
        }
        part += outer(s, s);
        acc += vol_scaled * part;
    }
    return acc;
}

// LYZ matrix of a witness: sum over facets F of zeta(a_F h_F) / h_F^2 * u u^T
// with u the unit normal and a_F, h_F the facet's area and signed support.
// Facet hyperplanes through the origin are excluded. Stored normals are not
// unit, but the combination is scale-invariant, so the sum stays radical-free.
template <typename S>
Mat<S> general_lyz(const Polytope<S>& p, const CauchyWitness<S>& zeta) {
    const int n = p.ambient_dim();
    Mat<S> acc(n);
    if (!p.full_dimensional()) return acc;
    for (const auto& f : p.facets()) {
        if (scalar_traits<S>::is_zero(f.offset)) continue;
        FacetConeData<S> cd = facet_cone_data(p, f);
        S weight = zeta.is_linear() ? S(zeta.coefficient() * cd.lyz_coefficient)
                                    : S(zeta(cd.area_height) * cd.lyz_coefficient / cd.area_height);
        acc += weight * outer(cd.direction, cd.direction);
    }
    return acc;
}

// Classical LYZ matrix: the identity witness, origin strictly inside.
template <typename S>
Mat<S> classical_lyz(const Polytope<S>& p) {
    if (!p.origin_interior())
        throw OriginNotInterior("the classical LYZ matrix needs the origin strictly inside");
    return general_lyz(p, CauchyWitness<S>::linear(S(1)));
}

// The antisymmetric valuation on an origin simplex [o,u,v,w] in R^3:
// |det(u,v,w)| * anti(u+v+w). Lower-dimensional simplices give zero.
template <typename S>
Mat<S> i_simplex(const Simplex<S>& t) {
    if (t.ambient != 3)
        throw WrongDimension("the antisymmetric valuation lives in dimension 3");
    if (!t.has_origin())
        throw MissingOriginVertex("the simplex must have the origin as a vertex");
    std::vector<Vec<S>> rest;
    for (const auto& v : t.verts)
        if (!is_zero_vec(v)) rest.push_back(v);
    if (rest.size() != 3) return Mat<S>(3);
    Mat<S> e(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e.at(i, j) = rest[i][j];
    S d = determinant(e);
    if (scalar_traits<S>::is_zero(d)) return Mat<S>(3);
    Vec<S> s = rest[0] + rest[1] + rest[2];
    return scalar_traits<S>::abs(d) * anti(s);
}

// Extension to polytopes containing the origin, via the origin triangulation.
// The sum does not depend on the triangulation chosen.
template <typename S>
Mat<S> i_polytope(const Polytope<S>& p) {
    if (p.ambient_dim() != 3)
        throw WrongDimension("the antisymmetric valuation lives in dimension 3");
    if (p.intrinsic_dim() < 3) return Mat<S>(3);
    if (!p.contains_origin())
        throw OriginOutside("the antisymmetric valuation needs the origin inside");
    Mat<S> acc(3);
    for (const auto& t : triangulate_at_origin(p)) acc += i_simplex(t);
    return acc;
}

// Conjugation by the quarter-turn psi = [[0,-1],[1,0]]: psi A psi^{-1}.
template <typename S>
Mat<S> psi_conjugate(const Mat<S>& a) {
    if (a.dim() != 2)
        throw WrongDimension("psi conjugation is defined in dimension 2");
    Mat<S> r(2);
    r.at(0, 0) = a.at(1, 1);
    r.at(0, 1) = -a.at(1, 0);
    r.at(1, 0) = -a.at(0, 1);
    r.at(1, 1) = a.at(0, 0);
    return r;
}

template <typename S>
std::pair<Mat<S>, Mat<S>> split_symmetric(const Mat<S>& a) {
    const int n = a.dim();
    Mat<S> sym(n), skew(n);
    const S half = S(1) / S(2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            sym.at(i, j) = half * (a.at(i, j) + a.at(j, i));
            skew.at(i, j) = half * (a.at(i, j) - a.at(j, i));
        }
    return {sym, skew};
}

// ---------------------------------------------------------------------------
// Classified families. The wire-format tags are "theorem2", "theorem4",
// "theorem5"; each family fixes the shape of every SL(n)-contravariant
// valuation in its setting.

// Dimension 3, polytopes containing the origin: c * I(P) + 2 L_xi(P).
template <typename S>
struct Theorem2Params {
    S c;
    CauchyWitness<S> xi;
};

// Dimension >= 4, all polytopes: L_zeta1(P) + L_zeta2([o,P]).
template <typename S>
struct Theorem4Params {
    CauchyWitness<S> zeta1;
    CauchyWitness<S> zeta2;
};

// Dimension 3, all polytopes: c1 I([o,P]) + 2 L_xi1([o,P]) plus the same
// shape with (c2, xi2) summed over the cones of the facets visible from the
// origin. Lower-dimensional inputs keep only the [o,P] terms.
template <typename S>
struct Theorem5Params {
    S c1;
    S c2;
    CauchyWitness<S> xi1;
    CauchyWitness<S> xi2;
};

template <typename S>
using ValuationSpec = std::variant<Theorem2Params<S>, Theorem4Params<S>, Theorem5Params<S>>;

template <typename S>
std::string family_name(const ValuationSpec<S>& spec) {
    switch (spec.index()) {
        case 0: return "theorem2";
        case 1: return "theorem4";
        default: return "theorem5";
    }
}

template <typename S>
Mat<S> evaluate(const ValuationSpec<S>& spec, const Polytope<S>& p) {
    const int n = p.ambient_dim();
    if (const auto* t2 = std::get_if<Theorem2Params<S>>(&spec)) {
        if (n != 3)
            throw WrongDimension("family theorem2 lives in dimension 3");
        if (!p.contains_origin())
            throw OriginOutside("family theorem2 is defined on polytopes containing the origin");
        return t2->c * i_polytope(p) + S(2) * general_lyz(p, t2->xi);
    }
    if (const auto* t4 = std::get_if<Theorem4Params<S>>(&spec)) {
        if (n < 4)
            throw WrongDimension("family theorem4 lives in dimension 4 and above");
        return general_lyz(p, t4->zeta1) + general_lyz(hull_with_origin(p), t4->zeta2);
    }
    const auto& t5 = std::get<Theorem5Params<S>>(spec);
    if (n != 3)
        throw WrongDimension("family theorem5 lives in dimension 3");
    Polytope<S> q = hull_with_origin(p);
    Mat<S> acc = t5.c1 * i_polytope(q) + S(2) * general_lyz(q, t5.xi1);
    if (p.full_dimensional()) {
        for (const auto& f : visible_facets(p)) {
            Polytope<S> cone = hull_with_origin(facet_polytope(p, f));
            acc += t5.c2 * i_polytope(cone) + S(2) * general_lyz(cone, t5.xi2);
        }
    }
    return acc;
}

} // namespace lyzval

#endif
