#ifndef LYZVAL_POLYTOPE_HPP
#define LYZVAL_POLYTOPE_HPP

// Convex polytopes in vertex representation, with exact facet enumeration.
//
// Scale assumptions: ambient dimension <= 6 and a few dozen vertices. Facet
// enumeration is brute force over vertex subsets, which is robust (no LP, no
// radicals) and fast at this scale. Every Polytope is normalized on
// construction: duplicate points removed, non-extreme points dropped,
// vertices sorted lexicographically. Facets of full-dimensional polytopes are
// computed eagerly and cached; all instances are immutable afterwards, so any
// value can be shared freely across threads.

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lyzval/errors.hpp"
#include "lyzval/linalg.hpp"
#include "lyzval/rational.hpp"

namespace lyzval {

// Supporting hyperplane {x : normal . x = offset} with P inside normal . x <= offset.
// The normal is canonical: primitive integer in exact mode, unit in float mode.
// incident lists the indices of the polytope's vertices lying on the facet.
template <typename S>
struct Facet {
    Vec<S> normal;
    S offset;
    std::vector<int> incident;
};

namespace detail {

template <typename S>
using PointList = std::vector<Vec<S>>;

// All facets of the full-dimensional polytope conv(pts) in R^n, by testing
// every n-subset's spanned hyperplane against the whole point set. Facets are
// deduplicated and sorted by (normal, offset); incident lists are ascending.
template <typename S>
std::vector<Facet<S>> enumerate_facets(const PointList<S>& pts, int n) {
    using traits = scalar_traits<S>;
    const int m = static_cast<int>(pts.size());
    std::vector<Facet<S>> out;

    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0 && c[i] == m - n + i) --i;
        if (i < 0) return false;
        ++c[i];
        for (int j = i + 1; j < n; ++j) c[j] = c[j - 1] + 1;
        return true;
    };

    if (m < n) return out;
    do {
        std::vector<Vec<S>> edges;
        edges.reserve(n - 1);
        for (int i = 1; i < n; ++i) edges.push_back(pts[c[i]] - pts[c[0]]);
        Vec<S> w = orthogonal_complement(edges);
        if (is_zero_vec(w)) continue;
        w = canonical_direction(w);
        S h = dot(w, pts[c[0]]);

        int above = 0, below = 0;
        for (int i = 0; i < m; ++i) {
            S v = dot(w, pts[i]);
            if (traits::eq(v, h)) continue;
            (v > h ? above : below)++;
        }
        if (above > 0 && below > 0) continue;
        if (above > 0) {
            w = -w;
            h = -h;
        }

        bool dup = false;
        for (const auto& f : out)
            if (f.normal == w && traits::eq(f.offset, h)) {
                dup = true;
                break;
            }
        if (dup) continue;

        Facet<S> f;
        f.normal = w;
        f.offset = h;
        for (int i = 0; i < m; ++i)
            if (traits::eq(dot(w, pts[i]), h)) f.incident.push_back(i);
        out.push_back(std::move(f));
    } while (advance());

    std::sort(out.begin(), out.end(), [](const Facet<S>& a, const Facet<S>& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    });
    return out;
}

// Coordinates of the given points restricted to a column subset. Used to work
// in a face's own affine hull: restriction to the pivot columns of the edge
// matrix is injective on the hull and preserves face structure.
template <typename S>
PointList<S> project_columns(const PointList<S>& pts, const std::vector<int>& cols) {
    PointList<S> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        Vec<S> q(static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) q[static_cast<int>(j)] = p[cols[j]];
        out.push_back(std::move(q));
    }
    return out;
}

// Affine rank and pivot columns of the displacement vectors within a point set.
template <typename S>
RankInfo affine_rank(const PointList<S>& pts, const std::vector<int>& idxs) {
    std::vector<Vec<S>> edges;
    edges.reserve(idxs.size() > 0 ? idxs.size() - 1 : 0);
    for (std::size_t i = 1; i < idxs.size(); ++i)
        edges.push_back(pts[idxs[i]] - pts[idxs[0]]);
    return row_rank(std::move(edges));
}

// Indices (into idxs' positions mapped back to global indices) of the
// boundary facets of the face spanned by pts[idxs], computed in the face's
// own coordinates. The face must have affine dimension >= 1.
template <typename S>
std::vector<std::vector<int>> face_boundary(const PointList<S>& pts, const std::vector<int>& idxs) {
    RankInfo info = affine_rank(pts, idxs);
    PointList<S> sub;
    sub.reserve(idxs.size());
    for (int i : idxs) sub.push_back(pts[i]);
    PointList<S> proj = project_columns(sub, info.pivot_columns);
    std::vector<Facet<S>> fs = enumerate_facets(proj, info.rank);
    std::vector<std::vector<int>> out;
    out.reserve(fs.size());
    for (const auto& f : fs) {
        std::vector<int> global;
        global.reserve(f.incident.size());
        for (int i : f.incident) global.push_back(idxs[i]);
        out.push_back(std::move(global));
    }
    return out;
}

// Chooses the fan apex for a face, given its sorted vertex index set.
using ApexSelector = std::function<int(const std::vector<int>&)>;

inline int lowest_index_apex(const std::vector<int>& idxs) { return idxs[0]; }

// Recursive fan triangulation of the face spanned by pts[idxs]: cone from the
// selected apex over the triangulated boundary facets that miss the apex.
// Returns vertex index tuples, one per simplex, (face dim + 1) entries each.
template <typename S>
std::vector<std::vector<int>> fan_triangulation(const PointList<S>& pts,
                                                const std::vector<int>& idxs,
                                                const ApexSelector& apex_of) {
    RankInfo info = affine_rank(pts, idxs);
    if (static_cast<int>(idxs.size()) == info.rank + 1)
        return {idxs};
    int apex = apex_of(idxs);
    std::vector<std::vector<int>> out;
    for (auto& ridge : face_boundary(pts, idxs)) {
        if (std::find(ridge.begin(), ridge.end(), apex) != ridge.end()) continue;
        for (auto& sub : fan_triangulation(pts, ridge, apex_of)) {
            std::vector<int> simplex;
            simplex.reserve(sub.size() + 1);
            simplex.push_back(apex);
            simplex.insert(simplex.end(), sub.begin(), sub.end());
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

} // namespace detail

template <typename S>
class Polytope {
public:
    // Normalizes an arbitrary nonempty point list into canonical form.
    Polytope(int ambient, std::vector<Vec<S>> points) : ambient_(ambient) {
        if (ambient < 1)
            throw WrongDimension("ambient dimension must be at least 1");
        if (points.empty())
            throw DegeneratePolytope("a polytope needs at least one point");
        for (const auto& p : points)
            if (p.dim() != ambient)
                throw DimensionMismatch("point dimension does not match the ambient dimension");

        std::sort(points.begin(), points.end(),
                  [](const Vec<S>& a, const Vec<S>& b) { return lex_less(a, b); });
        std::vector<Vec<S>> pts;
        for (auto& p : points)
            if (pts.empty() || !(pts.back() == p)) pts.push_back(std::move(p));

        std::vector<int> all(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
        RankInfo info = detail::affine_rank(pts, all);
        intrinsic_ = info.rank;
        pivots_ = info.pivot_columns;

        if (intrinsic_ == 0) {
            verts_ = {pts[0]};
            return;
        }

        // Facet enumeration happens in the polytope's own coordinates; for a
        // full-dimensional polytope that is the identity projection.
        std::vector<Facet<S>> raw;
        if (intrinsic_ == ambient_) {
            raw = detail::enumerate_facets(pts, ambient_);
        } else {
            raw = detail::enumerate_facets(detail::project_columns(pts, pivots_), intrinsic_);
        }

        // A point is extreme iff its active facet normals span everything.
        std::vector<char> extreme(pts.size(), 0);
        std::vector<std::vector<Vec<S>>> active(pts.size());
        for (const auto& f : raw)
            for (int i : f.incident) active[i].push_back(f.normal);
        for (std::size_t i = 0; i < pts.size(); ++i)
            extreme[i] = row_rank(active[i]).rank == intrinsic_ ? 1 : 0;

        std::vector<int> newindex(pts.size(), -1);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (!extreme[i]) continue;
            newindex[i] = static_cast<int>(verts_.size());
            verts_.push_back(pts[i]);
        }

        if (intrinsic_ == ambient_) {
            facets_.reserve(raw.size());
            for (auto& f : raw) {
                Facet<S> g;
                g.normal = std::move(f.normal);
                g.offset = std::move(f.offset);
                for (int i : f.incident)
                    if (newindex[i] >= 0) g.incident.push_back(newindex[i]);
                facets_.push_back(std::move(g));
            }
        }
    }

    int ambient_dim() const { return ambient_; }
    int intrinsic_dim() const { return intrinsic_; }
    bool full_dimensional() const { return intrinsic_ == ambient_; }
    const std::vector<Vec<S>>& vertices() const { return verts_; }

    const std::vector<Facet<S>>& facets() const {
        if (!full_dimensional())
            throw DegeneratePolytope("facets are only defined for full-dimensional polytopes");
        return facets_;
    }

    S support(const Vec<S>& u) const {
        if (u.dim() != ambient_)
            throw WrongDimension("support direction dimension mismatch");
        S best = dot(u, verts_[0]);
        for (std::size_t i = 1; i < verts_.size(); ++i) {
            S v = dot(u, verts_[i]);
            if (v > best) best = v;
        }
        return best;
    }

    bool contains(const Vec<S>& x) const {
        if (x.dim() != ambient_)
            throw WrongDimension("point dimension mismatch");
        if (intrinsic_ == ambient_) {
            for (const auto& f : facets_) {
                S v = dot(f.normal, x);
                if (!scalar_traits<S>::eq(v, f.offset) && v > f.offset) return false;
            }
            return true;
        }
        if (intrinsic_ == 0) return x == verts_[0];
        // Lower-dimensional: x must lie in the affine hull, then membership is
        // decided in the hull's own coordinates.
        std::vector<Vec<S>> edges;
        for (std::size_t i = 1; i < verts_.size(); ++i) edges.push_back(verts_[i] - verts_[0]);
        int base = row_rank(edges).rank;
        edges.push_back(x - verts_[0]);
        if (row_rank(edges).rank != base) return false;
        Polytope<S> flat(intrinsic_, detail::project_columns(verts_, pivots_));
        std::vector<Vec<S>> px = detail::project_columns<S>({x}, pivots_);
        return flat.contains(px[0]);
    }

    bool contains_origin() const { return contains(Vec<S>(ambient_)); }

    bool origin_interior() const {
        if (!full_dimensional()) return false;
        for (const auto& f : facets_)
            if (scalar_traits<S>::sign(f.offset) <= 0) return false;
        return true;
    }

    friend bool operator==(const Polytope& a, const Polytope& b) {
        if (a.ambient_ != b.ambient_ || a.verts_.size() != b.verts_.size()) return false;
        for (std::size_t i = 0; i < a.verts_.size(); ++i)
            if (!(a.verts_[i] == b.verts_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }

private:
    int ambient_ = 0;
    int intrinsic_ = 0;
    std::vector<Vec<S>> verts_;
    std::vector<int> pivots_;
    std::vector<Facet<S>> facets_;
};

// Simplex with an explicit ambient dimension. Duplicate vertices collapse at
// construction, so degenerate inputs simply have fewer vertices.
template <typename S>
struct Simplex {
    int ambient = 0;
    std::vector<Vec<S>> verts;

    Simplex(int ambient_dim, std::vector<Vec<S>> vs) : ambient(ambient_dim) {
        if (vs.empty())
            throw DegeneratePolytope("a simplex needs at least one vertex");
        for (const auto& v : vs) {
            if (v.dim() != ambient)
                throw DimensionMismatch("simplex vertex dimension mismatch");
            bool dup = false;
            for (const auto& u : verts)
                if (u == v) {
                    dup = true;
                    break;
                }
            if (!dup) verts.push_back(v);
        }
        if (static_cast<int>(verts.size()) > ambient + 1)
            throw DimensionMismatch("too many distinct vertices for a simplex");
    }

    bool has_origin() const {
        for (const auto& v : verts)
            if (is_zero_vec(v)) return true;
        return false;
    }

    int intrinsic_dim() const {
        std::vector<Vec<S>> edges;
        for (std::size_t i = 1; i < verts.size(); ++i) edges.push_back(verts[i] - verts[0]);
        return row_rank(edges).rank;
    }
};

// ---------------------------------------------------------------------------
// Constructions

// T^k in R^n: conv{o, e_1, ..., e_k}.
template <typename S>
Polytope<S> standard_simplex(int k, int n) {
    std::vector<Vec<S>> pts{Vec<S>(n)};
    for (int i = 0; i < k; ++i) pts.push_back(Vec<S>::unit(n, i));
    return Polytope<S>(n, std::move(pts));
}

// conv{e_1, ..., e_k} in R^n, the facet of T^k opposite the origin.
template <typename S>
Polytope<S> basis_simplex(int k, int n) {
    std::vector<Vec<S>> pts;
    for (int i = 0; i < k; ++i) pts.push_back(Vec<S>::unit(n, i));
    return Polytope<S>(n, std::move(pts));
}

// Axis-aligned box [lo, hi]^n.
template <typename S>
Polytope<S> box(int n, const S& lo, const S& hi) {
    std::vector<Vec<S>> pts;
    pts.reserve(std::size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Vec<S> p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? hi : lo;
        pts.push_back(std::move(p));
    }
    return Polytope<S>(n, std::move(pts));
}

template <typename S>
Polytope<S> scaled(const Polytope<S>& p, const S& c) {
    std::vector<Vec<S>> pts = p.vertices();
    for (auto& v : pts) v *= c;
    return Polytope<S>(p.ambient_dim(), std::move(pts));
}

template <typename S>
Polytope<S> translated(const Polytope<S>& p, const Vec<S>& t) {
    std::vector<Vec<S>> pts = p.vertices();
    for (auto& v : pts) v += t;
    return Polytope<S>(p.ambient_dim(), std::move(pts));
}

// ---------------------------------------------------------------------------
// Operations

template <typename S>
int intrinsic_dim(const Polytope<S>& p) {
    return p.intrinsic_dim();
}

template <typename S>
const std::vector<Facet<S>>& facets(const Polytope<S>& p) {
    return p.facets();
}

template <typename S>
S support(const Polytope<S>& p, const Vec<S>& u) {
    return p.support(u);
}

// The facet as a polytope of its own (lower-dimensional, same ambient space).
template <typename S>
Polytope<S> facet_polytope(const Polytope<S>& p, const Facet<S>& f) {
    std::vector<Vec<S>> pts;
    pts.reserve(f.incident.size());
    for (int i : f.incident) pts.push_back(p.vertices()[i]);
    return Polytope<S>(p.ambient_dim(), std::move(pts));
}

template <typename S>
Polytope<S> hull_with_origin(const Polytope<S>& p) {
    std::vector<Vec<S>> pts = p.vertices();
    pts.push_back(Vec<S>(p.ambient_dim()));
    return Polytope<S>(p.ambient_dim(), std::move(pts));
}

template <typename S>
Polytope<S> polar(const Polytope<S>& p) {
    if (!p.origin_interior())
        throw OriginNotInterior("polar duality needs the origin strictly inside");
    std::vector<Vec<S>> pts;
    pts.reserve(p.facets().size());
    for (const auto& f : p.facets()) {
        Vec<S> v = f.normal;
        v *= S(1) / f.offset;
        pts.push_back(std::move(v));
    }
    return Polytope<S>(p.ambient_dim(), std::move(pts));
}

template <typename S>
std::vector<Facet<S>> visible_facets(const Polytope<S>& p) {
    std::vector<Facet<S>> out;
    for (const auto& f : p.facets())
        if (scalar_traits<S>::sign(f.offset) < 0) out.push_back(f);
    return out;
}

template <typename S>
Polytope<S> apply_map(const Polytope<S>& p, const Mat<S>& a) {
    if (a.dim() != p.ambient_dim())
        throw WrongDimension("matrix dimension does not match the polytope");
    if (scalar_traits<S>::is_zero(determinant(a)))
        throw SingularMatrix("cannot apply a singular linear map to a polytope");
    std::vector<Vec<S>> pts;
    pts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) pts.push_back(a * v);
    return Polytope<S>(p.ambient_dim(), std::move(pts));
}

// The two volume-preserving-in-total cut maps for parameter lambda in (0,1):
// phi1 sends e1 to lambda e1 + (1-lambda) e2 and fixes the other basis
// vectors; phi2 sends e2 there and fixes the rest. Together they cut the
// standard simplex along the hyperplane with normal (1-lambda) e1 - lambda e2.
template <typename S>
std::pair<Mat<S>, Mat<S>> make_cut_transforms(const S& lambda, int n) {
    if (n < 2)
        throw WrongDimension("cut transforms need dimension at least 2");
    if (!(scalar_traits<S>::sign(lambda) > 0 && scalar_traits<S>::sign(S(1) - lambda) > 0))
        throw LambdaOutOfRange("cut parameter must lie strictly between 0 and 1");
    Mat<S> phi1 = Mat<S>::identity(n);
    Mat<S> phi2 = Mat<S>::identity(n);
    phi1.at(0, 0) = lambda;
    phi1.at(1, 0) = S(1) - lambda;
    phi2.at(0, 1) = lambda;
    phi2.at(1, 1) = S(1) - lambda;
    return {phi1, phi2};
}

// Intersections of a polytope with the two closed halfspaces of a hyperplane
// through the origin, plus the section. Pieces are absent when empty.
template <typename S>
struct CutPieces {
    std::optional<Polytope<S>> below;   // nu . x <= 0
    std::optional<Polytope<S>> above;   // nu . x >= 0
    std::optional<Polytope<S>> section; // nu . x  = 0
};

template <typename S>
CutPieces<S> cut_with_halfspace(const Polytope<S>& p, const Vec<S>& nu) {
    if (nu.dim() != p.ambient_dim())
        throw WrongDimension("cut normal dimension mismatch");
    if (is_zero_vec(nu))
        throw Error("cut normal must be nonzero");
    const auto& vs = p.vertices();
    std::vector<S> val(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) val[i] = dot(nu, vs[i]);

    std::vector<Vec<S>> below, above, section;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int s = scalar_traits<S>::sign(val[i]);
        if (s <= 0) below.push_back(vs[i]);
        if (s >= 0) above.push_back(vs[i]);
        if (s == 0) section.push_back(vs[i]);
    }
    // Every vertex of a piece is an original vertex or an edge crossing. For
    // full-dimensional input only actual edges are crossed (a pair is an edge
    // iff its common facet normals span a hyperplane), which keeps the piece
    // vertex lists small; otherwise all segments are crossed and normalization
    // discards the interior extras.
    const int n = p.ambient_dim();
    std::vector<std::vector<int>> facets_of_vertex;
    const bool filter_edges = p.full_dimensional();
    if (filter_edges) {
        facets_of_vertex.assign(vs.size(), {});
        const auto& fs = p.facets();
        for (std::size_t f = 0; f < fs.size(); ++f)
            for (int v : fs[f].incident) facets_of_vertex[v].push_back(static_cast<int>(f));
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            int si = scalar_traits<S>::sign(val[i]);
            int sj = scalar_traits<S>::sign(val[j]);
            if (si * sj >= 0) continue;
            if (filter_edges) {
                std::vector<Vec<S>> normals;
                for (int f : facets_of_vertex[i]) {
                    const auto& other = facets_of_vertex[j];
                    if (std::find(other.begin(), other.end(), f) != other.end())
                        normals.push_back(p.facets()[f].normal);
                }
                if (row_rank(normals).rank != n - 1) continue;
            }
            S t = val[i] / (val[i] - val[j]);
            Vec<S> x = vs[i] + t * (vs[j] - vs[i]);
            below.push_back(x);
            above.push_back(x);
            section.push_back(std::move(x));
        }

    CutPieces<S> out;
    if (!below.empty()) out.below.emplace(p.ambient_dim(), std::move(below));
    if (!above.empty()) out.above.emplace(p.ambient_dim(), std::move(above));
    if (!section.empty()) out.section.emplace(p.ambient_dim(), std::move(section));
    return out;
}

// Fan triangulation of the whole polytope from its first (lex-least) vertex.
// Index tuples refer to p.vertices().
template <typename S>
std::vector<std::vector<int>> pulling_triangulation(const Polytope<S>& p) {
    if (p.intrinsic_dim() == 0) return {};
    std::vector<int> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return detail::fan_triangulation(p.vertices(), all, detail::lowest_index_apex);
}

template <typename S>
S volume(const Polytope<S>& p) {
    if (!p.full_dimensional()) return S(0);
    const int n = p.ambient_dim();
    S total(0);
    S fact(1);
    for (int i = 2; i <= n; ++i) fact *= S(i);
    for (const auto& t : pulling_triangulation(p)) {
        Mat<S> e(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                e.at(i, j) = p.vertices()[t[i + 1]][j] - p.vertices()[t[0]][j];
        total += scalar_traits<S>::abs(determinant(e));
    }
    return total / fact;
}

// Cones from the origin over the facets whose hyperplanes miss the origin.
// Simplices are emitted with the origin first and the remaining vertex order
// normalized so the edge determinant is positive.
template <typename S>
std::vector<Simplex<S>> triangulate_at_origin(const Polytope<S>& p,
                                              const detail::ApexSelector& apex_of = detail::lowest_index_apex) {
    if (!p.full_dimensional())
        throw DegeneratePolytope("origin triangulation needs a full-dimensional polytope");
    if (!p.contains_origin())
        throw OriginOutside("origin triangulation needs the origin inside the polytope");
    const int n = p.ambient_dim();
    std::vector<Simplex<S>> out;
    for (const auto& f : p.facets()) {
        if (scalar_traits<S>::sign(f.offset) <= 0) continue;
        for (const auto& tri : detail::fan_triangulation(p.vertices(), f.incident, apex_of)) {
            std::vector<Vec<S>> vs;
            vs.reserve(tri.size() + 1);
            vs.push_back(Vec<S>(n));
            for (int i : tri) vs.push_back(p.vertices()[i]);
            Mat<S> e(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) e.at(i, j) = vs[i + 1][j];
            if (scalar_traits<S>::sign(determinant(e)) < 0)
                std::swap(vs[vs.size() - 1], vs[vs.size() - 2]);
            out.emplace_back(n, std::move(vs));
        }
    }
    return out;
}

// Data of the cone over a facet, radical-free. area_height is the product of
// the facet's (n-1)-area and its signed distance from the origin, measured
// against the unit normal; it equals n * vol([o,F]) up to the offset's sign.
// lyz_coefficient is area_height / offset^2 for the stored canonical normal,
// which is exactly the weight the LYZ matrix puts on direction * direction^T.
template <typename S>
struct FacetConeData {
    S area_height;
    S lyz_coefficient;
    Vec<S> direction;
};

template <typename S>
FacetConeData<S> facet_cone_data(const Polytope<S>& p, const Facet<S>& f) {
    if (scalar_traits<S>::is_zero(f.offset))
        throw ZeroOffsetFacet("cone data is undefined for a facet hyperplane through the origin");
    const int n = p.ambient_dim();
    S fact(1);
    for (int i = 2; i <= n - 1; ++i) fact *= S(i);
    S sum(0);
    for (const auto& tri : detail::fan_triangulation(p.vertices(), f.incident, detail::lowest_index_apex)) {
        Mat<S> e(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) e.at(i, j) = p.vertices()[tri[i]][j];
        sum += scalar_traits<S>::abs(determinant(e));
    }
    // |det(p_1..p_n)| over the facet triangulation sums to (n-1)! * area * |h|
    // for the unit normal; dividing once restores area * h with its sign.
    S ah = sum / fact;
    if (scalar_traits<S>::sign(f.offset) < 0) ah = -ah;
    FacetConeData<S> out{ah, ah / (f.offset * f.offset), f.normal};
    return out;
}

// Euclidean facet area. Float mode only: exact mode keeps all quantities
// rational and radicals would leave the scalar field.
template <typename S>
double facet_area(const Polytope<S>& p, const Facet<S>& f) {
    static_assert(!scalar_traits<S>::exact,
                  "facet_area is float-mode only; use facet_cone_data in exact mode");
    const int n = p.ambient_dim();
    double fact = 1;
    for (int i = 2; i <= n - 1; ++i) fact *= i;
    double total = 0;
    for (const auto& tri : detail::fan_triangulation(p.vertices(), f.incident, detail::lowest_index_apex)) {
        // Gram determinant of the simplex's edge vectors.
        std::vector<Vec<S>> e;
        for (std::size_t i = 1; i < tri.size(); ++i)
            e.push_back(p.vertices()[tri[i]] - p.vertices()[tri[0]]);
        Mat<S> g(n - 1);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) g.at(i, j) = dot(e[i], e[j]);
        double gd = determinant(g);
        total += std::sqrt(std::max(0.0, gd));
    }
    return total / fact;
}

} // namespace lyzval

#endif
