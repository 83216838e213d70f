#include <doctest.h>

#include <algorithm>

#include "lyzval/harness.hpp"
#include "lyzval/polytope.hpp"

using namespace lyzval;
using S = Rat;

namespace {

Vec<S> v3(int x, int y, int z) { return Vec<S>{S(x), S(y), S(z)}; }

}  // namespace

TEST_CASE("construction sorts, dedupes and drops non-extreme points") {
    std::vector<Vec<S>> pts = {v3(1, 0, 0), v3(0, 0, 0), v3(0, 1, 0), v3(0, 0, 1),
                               v3(0, 0, 0),  // duplicate
                               Vec<S>{S(1) / 4, S(1) / 4, S(1) / 4}};  // interior
    Polytope<S> p(3, pts);
    CHECK(p.vertices().size() == 4);
    CHECK(std::is_sorted(p.vertices().begin(), p.vertices().end(),
                         [](const Vec<S>& a, const Vec<S>& b) { return lex_less(a, b); }));
    CHECK(p == standard_simplex<S>(3, 3));
}

TEST_CASE("standard simplex geometry") {
    Polytope<S> t3 = standard_simplex<S>(3, 3);
    CHECK(t3.ambient_dim() == 3);
    CHECK(t3.intrinsic_dim() == 3);
    CHECK(t3.full_dimensional());
    CHECK(t3.facets().size() == 4);
    CHECK(volume(t3) == S(1) / 6);
    CHECK(t3.contains_origin());
    CHECK_FALSE(t3.origin_interior());
}

TEST_CASE("lower-dimensional polytopes know their rank") {
    Polytope<S> seg(3, {v3(0, 0, 0), v3(2, 2, 0)});
    CHECK(seg.intrinsic_dim() == 1);
    CHECK_FALSE(seg.full_dimensional());
    CHECK_THROWS_AS(seg.facets(), DegeneratePolytope);
    CHECK(volume(seg) == S(0));
    CHECK(seg.contains(v3(1, 1, 0)));
    CHECK_FALSE(seg.contains(v3(1, 1, 1)));
    CHECK_FALSE(seg.contains(v3(3, 3, 0)));
}

TEST_CASE("support function on the cube") {
    Polytope<S> cube = box<S>(3, S(-1), S(1));
    CHECK(support(cube, v3(1, 0, 0)) == S(1));
    CHECK(support(cube, v3(1, 1, 1)) == S(3));
    CHECK(support(cube, v3(-2, 0, 1)) == S(3));
}

TEST_CASE("containment uses facets in full dimension") {
    Polytope<S> cube = box<S>(3, S(-1), S(1));
    CHECK(cube.contains(v3(0, 0, 0)));
    CHECK(cube.contains(v3(1, 1, 1)));
    CHECK_FALSE(cube.contains(v3(1, 1, 2)));
    CHECK(cube.origin_interior());
}

TEST_CASE("polar of the cube is the cross-polytope and polar is an involution") {
    Polytope<S> cube = box<S>(3, S(-1), S(1));
    Polytope<S> oct = polar(cube);
    CHECK(oct.vertices().size() == 6);
    CHECK(oct.facets().size() == 8);
    CHECK(polar(oct) == cube);
    CHECK_THROWS_AS(polar(standard_simplex<S>(3, 3)), OriginNotInterior);
}

TEST_CASE("visible facets are those whose hyperplane separates the origin") {
    Polytope<S> shifted = translated(standard_simplex<S>(3, 3), v3(1, 1, 1));
    CHECK(visible_facets(shifted).size() == 3);
    CHECK(visible_facets(box<S>(3, S(-1), S(1))).empty());
}

TEST_CASE("hull with origin drops points absorbed by the cone") {
    Polytope<S> shifted = translated(standard_simplex<S>(3, 3), v3(1, 1, 1));
    Polytope<S> hull = hull_with_origin(shifted);
    // (1,1,1) lies on the segment from the origin to (4/3,4/3,4/3).
    CHECK(hull.vertices().size() == 4);
    CHECK(hull.contains_origin());
    CHECK(hull.contains(v3(1, 1, 1)));
}

TEST_CASE("facet normals transform contragrediently under apply_map") {
    Polytope<S> cube = box<S>(3, S(-1), S(1));
    Mat<S> phi = Mat<S>::identity(3);
    phi.at(0, 1) = S(2);
    phi.at(1, 2) = S(-1) / 3;
    Polytope<S> image = apply_map(cube, phi);
    Mat<S> cg = contragredient(phi);
    std::vector<Vec<S>> expected;
    for (const auto& f : cube.facets()) expected.push_back(canonical_direction(cg * f.normal));
    for (const auto& f : image.facets()) {
        CHECK(std::find(expected.begin(), expected.end(), f.normal) != expected.end());
    }
    CHECK(image.facets().size() == cube.facets().size());
    CHECK_THROWS_AS(apply_map(cube, Mat<S>(3)), SingularMatrix);
}

TEST_CASE("cut transform preconditions") {
    CHECK_THROWS_AS(make_cut_transforms(S(0), 3), LambdaOutOfRange);
    CHECK_THROWS_AS(make_cut_transforms(S(1), 3), LambdaOutOfRange);
    CHECK_THROWS_AS(make_cut_transforms(S(3) / 2, 3), LambdaOutOfRange);
    CHECK_THROWS_AS(make_cut_transforms(S(1) / 2, 1), WrongDimension);
}

TEST_CASE("halfspace cut of the scaled simplex reproduces the transform pieces") {
    const S lam = S(1) / 3;
    const S s = S(2);
    Polytope<S> big = scaled(standard_simplex<S>(3, 3), s);
    auto [phi1, phi2] = make_cut_transforms(lam, 3);
    // nu puts phi1's image on the non-positive side.
    Vec<S> nu{S(1) - lam, -lam, S(0)};
    CutPieces<S> cut = cut_with_halfspace(big, nu);
    REQUIRE(cut.below.has_value());
    REQUIRE(cut.above.has_value());
    REQUIRE(cut.section.has_value());
    CHECK(*cut.below == apply_map(big, phi1));
    CHECK(*cut.above == apply_map(big, phi2));
    // The section is the phi1 image of the facet simplex spanned by e1 and e3.
    Polytope<S> ridge(3, {v3(0, 0, 0), S(2) * Vec<S>{lam, S(1) - lam, S(0)}, v3(0, 0, 2)});
    CHECK(*cut.section == ridge);
}

TEST_CASE("edge-filtered cuts match the all-segments construction") {
    // The fast path only crosses genuine edges; brute force crossing of every
    // vertex pair plus extreme-point reduction must give the same pieces.
    harness::Stream rng(99, "cut-ab", 0);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = 3 + static_cast<int>(rng.below(2));
        Polytope<S> q = harness::gen_polytope<S>(rng, dim, 8, 3, harness::OriginConstraint::Any);
        Vec<S> nu(dim);
        bool found = false;
        for (int tries = 0; tries < 64 && !found; ++tries) {
            nu = harness::to_scalar_vec<S>(rng.rational_vector(dim, 3));
            if (is_zero_vec(nu)) continue;
            bool lo = false, hi = false;
            for (const auto& v : q.vertices()) {
                int sg = scalar_traits<S>::sign(dot(nu, v));
                lo = lo || sg < 0;
                hi = hi || sg > 0;
            }
            found = lo && hi;
        }
        if (!found) continue;
        CutPieces<S> fast = cut_with_halfspace(q, nu);

        std::vector<Vec<S>> below, above, section;
        for (const auto& v : q.vertices()) {
            int sg = scalar_traits<S>::sign(dot(nu, v));
            if (sg <= 0) below.push_back(v);
            if (sg >= 0) above.push_back(v);
            if (sg == 0) section.push_back(v);
        }
        const auto& vs = q.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                S a = dot(nu, vs[i]), b = dot(nu, vs[j]);
                if (scalar_traits<S>::sign(a) * scalar_traits<S>::sign(b) >= 0) continue;
                Vec<S> x = vs[i] + (a / (a - b)) * (vs[j] - vs[i]);
                below.push_back(x);
                above.push_back(x);
                section.push_back(x);
            }
        CHECK(*fast.below == Polytope<S>(dim, below));
        CHECK(*fast.above == Polytope<S>(dim, above));
        CHECK(*fast.section == Polytope<S>(dim, section));
    }
}

TEST_CASE("pulling triangulation partitions the volume") {
    Polytope<S> cube = box<S>(3, S(0), S(2));
    S total(0);
    for (const auto& tri : pulling_triangulation(cube)) {
        Mat<S> e(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                e.at(i, j) = cube.vertices()[tri[i + 1]][j] - cube.vertices()[tri[0]][j];
        total += scalar_traits<S>::abs(determinant(e));
    }
    CHECK(total / 6 == volume(cube));
    CHECK(volume(cube) == S(8));
}

TEST_CASE("triangulation at the origin covers interior-origin polytopes") {
    Polytope<S> cube = box<S>(3, S(-1), S(1));
    auto tris = triangulate_at_origin(cube);
    CHECK(tris.size() == 12);  // six facets, two triangles each
    S total(0);
    for (const auto& sx : tris) {
        REQUIRE(sx.verts.size() == 4);
        CHECK(is_zero_vec(sx.verts[0]));
        Mat<S> e(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) e.at(i, j) = sx.verts[i + 1][j];
        CHECK(scalar_traits<S>::sign(determinant(e)) > 0);  // orientation normalized
        total += determinant(e);
    }
    CHECK(total / 6 == volume(cube));

    Polytope<S> shifted = translated(standard_simplex<S>(3, 3), v3(1, 1, 1));
    CHECK_THROWS_AS(triangulate_at_origin(shifted), OriginOutside);
    Polytope<S> seg(3, {v3(0, 0, 0), v3(1, 0, 0)});
    CHECK_THROWS_AS(triangulate_at_origin(seg), DegeneratePolytope);
}

TEST_CASE("boundary-origin polytopes triangulate over non-incident facets only") {
    Polytope<S> t3 = standard_simplex<S>(3, 3);
    auto tris = triangulate_at_origin(t3);
    CHECK(tris.size() == 1);  // only the far facet has positive offset
    S total(0);
    for (const auto& sx : tris) {
        Mat<S> e(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) e.at(i, j) = sx.verts[i + 1][j];
        total += determinant(e);
    }
    CHECK(total / 6 == volume(t3));
}

TEST_CASE("facet cone data on the pinned examples") {
    Polytope<S> t3 = standard_simplex<S>(3, 3);
    int through_origin = 0;
    for (const auto& f : t3.facets()) {
        if (scalar_traits<S>::is_zero(f.offset)) {
            ++through_origin;
            CHECK_THROWS_AS(facet_cone_data(t3, f), ZeroOffsetFacet);
            continue;
        }
        FacetConeData<S> cd = facet_cone_data(t3, f);
        CHECK(cd.area_height == S(1) / 2);
        CHECK(cd.lyz_coefficient == S(1) / 2);
        CHECK(cd.direction == v3(1, 1, 1));
    }
    CHECK(through_origin == 3);

    Polytope<S> cube = box<S>(3, S(-1), S(1));
    for (const auto& f : cube.facets()) {
        FacetConeData<S> cd = facet_cone_data(cube, f);
        CHECK(cd.area_height == S(4));
        CHECK(cd.lyz_coefficient == S(4));
    }

    Polytope<S> sq = box<S>(2, S(0), S(1));
    for (const auto& f : sq.facets()) {
        if (scalar_traits<S>::is_zero(f.offset)) continue;
        CHECK(facet_cone_data(sq, f).area_height == S(1));
    }
}

TEST_CASE("area-height is negative on visible facets") {
    Polytope<S> shifted = translated(standard_simplex<S>(3, 3), v3(1, 1, 1));
    for (const auto& f : visible_facets(shifted)) {
        FacetConeData<S> cd = facet_cone_data(shifted, f);
        CHECK(scalar_traits<S>::sign(cd.area_height) < 0);
        CHECK(scalar_traits<S>::sign(cd.lyz_coefficient) < 0);
    }
}

TEST_CASE("float-mode facet areas") {
    Polytope<double> cube = box<double>(3, -1.0, 1.0);
    for (const auto& f : cube.facets()) CHECK(facet_area(cube, f) == doctest::Approx(4.0));
    Polytope<double> t3 = standard_simplex<double>(3, 3);
    double diag = 0;
    for (const auto& f : t3.facets())
        if (f.incident.size() == 3 && facet_area(t3, f) > 0.6) diag = facet_area(t3, f);
    CHECK(diag == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("simplex vertex handling") {
    Simplex<S> sx(3, {v3(0, 0, 0), v3(1, 0, 0), v3(1, 0, 0), v3(0, 1, 0)});
    CHECK(sx.verts.size() == 3);  // duplicate collapsed
    CHECK(sx.has_origin());
    CHECK(sx.intrinsic_dim() == 2);
    CHECK_THROWS_AS(Simplex<S>(3, {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1),
                                   v3(1, 1, 1)}),
                    DimensionMismatch);
}

TEST_CASE("scaled and translated builders") {
    Polytope<S> t3 = standard_simplex<S>(3, 3);
    CHECK(volume(scaled(t3, S(2))) == S(8) / 6);
    Polytope<S> moved = translated(t3, v3(5, 0, 0));
    CHECK(moved.contains(Vec<S>{S(21) / 4, S(1) / 4, S(1) / 4}));
    CHECK_FALSE(moved.contains_origin());
}
