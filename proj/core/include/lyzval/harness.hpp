#ifndef LYZVAL_HARNESS_HPP
#define LYZVAL_HARNESS_HPP

// Seeded property-verification harness.
//
// Every check is a pure function of (seed, config): per-trial RNG streams are
// derived by counter-based splitting from the seed, the check tag and the
// trial index, so reports are identical regardless of execution order or
// platform. Random draws happen in exact rationals and are converted to the
// working scalar afterwards, which keeps the generated instances themselves
// identical between exact and float mode.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lyzval/errors.hpp"
#include "lyzval/linalg.hpp"
#include "lyzval/polytope.hpp"
#include "lyzval/rational.hpp"
#include "lyzval/valuations.hpp"

namespace lyzval::harness {

// ---------------------------------------------------------------------------
// Deterministic RNG

// splitmix64 stream seeded from (seed, tag, trial counter).
class Stream {
public:
    Stream(std::uint64_t seed, std::string_view tag, std::uint64_t trial) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        state_ = mix(seed ^ h);
        state_ = mix(state_ ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix_output(state_);
    }

    // Uniform in [0, bound). Bounds here are tiny, so modulo bias is
    // irrelevant next to cross-platform byte-for-byte reproducibility.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // p/q with p in [-B, B] and q in [1, B]; may be zero.
    Rat rational(int bound) {
        long p = range(-bound, bound);
        long q = range(1, bound);
        return Rat(p) / q;
    }

    Rat nonzero_rational(int bound) {
        for (;;) {
            Rat r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }

    // p/q with p, q in [1, B].
    Rat positive(int bound) {
        long p = range(1, bound);
        long q = range(1, bound);
        return Rat(p) / q;
    }

    // Strictly between 0 and 1.
    Rat open_unit(int bound) {
        long q = range(2, bound + 1);
        long p = range(1, q - 1);
        return Rat(p, q);
    }

    std::vector<Rat> rational_vector(int n, int bound) {
        std::vector<Rat> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = rational(bound);
        return v;
    }

private:
    static std::uint64_t mix_output(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        return mix_output(z);
    }

    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Configuration and reports

struct TrialConfig {
    std::uint64_t seed = 2026;
    int trials = 100;
    int dim = 3;
    int max_vertices = 10;
    int coordinate_bound = 4;

    void validate() const {
        if (dim < 2 || dim > 6)
            throw Error("TrialConfig: dim must be between 2 and 6");
        if (trials < 1 || trials > 1000000)
            throw Error("TrialConfig: trials must be between 1 and 1000000");
        if (max_vertices < dim + 1 || max_vertices > 32)
            throw Error("TrialConfig: max_vertices must be between dim+1 and 32");
        if (coordinate_bound < 1 || coordinate_bound > 64)
            throw Error("TrialConfig: coordinate_bound must be between 1 and 64");
    }
};

struct CheckFailure {
    int trial;
    std::string detail;
};

struct CheckReport {
    std::string check;
    int dim = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    long failures_total = 0;
    std::vector<CheckFailure> failures; // at most kMaxStoredFailures entries

    static constexpr int kMaxStoredFailures = 10;
    bool pass() const { return failures_total == 0; }
};

namespace detail {

template <typename Body>
CheckReport run_trials(std::string name, const TrialConfig& cfg, int dim, Body&& body) {
    cfg.validate();
    CheckReport r;
    r.check = std::move(name);
    r.dim = dim;
    r.seed = cfg.seed;
    r.trials = cfg.trials;
    for (int t = 0; t < cfg.trials; ++t) {
        Stream rng(cfg.seed, r.check, static_cast<std::uint64_t>(t));
        std::optional<std::string> fail = body(t, rng);
        if (fail) {
            ++r.failures_total;
            if (static_cast<int>(r.failures.size()) < CheckReport::kMaxStoredFailures)
                r.failures.push_back({t, std::move(*fail)});
        }
    }
    return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Generators

enum class OriginConstraint { Any, Contains, Interior, Outside };

template <typename S>
Vec<S> to_scalar_vec(const std::vector<Rat>& r) {
    Vec<S> v(static_cast<int>(r.size()));
    for (int i = 0; i < v.dim(); ++i) v[i] = scalar_traits<S>::from_rational(r[i]);
    return v;
}

// Random full-dimensional polytope with rational vertices and the requested
// position relative to the origin. Throws GenerationExhausted if the
// constraints cannot be met within a bounded number of attempts.
template <typename S>
Polytope<S> gen_polytope(Stream& rng, int dim, int max_vertices, int bound, OriginConstraint oc) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        long k = rng.range(dim + 1, max_vertices);
        std::vector<Vec<S>> pts;
        pts.reserve(static_cast<std::size_t>(k));
        for (long i = 0; i < k; ++i) pts.push_back(to_scalar_vec<S>(rng.rational_vector(dim, bound)));
        Polytope<S> p(dim, std::move(pts));
        if (!p.full_dimensional()) continue;

        switch (oc) {
            case OriginConstraint::Any:
                return p;
            case OriginConstraint::Interior: {
                // The vertex centroid is a strict convex combination of all
                // vertices, hence interior.
                Vec<S> c(dim);
                for (const auto& v : p.vertices()) c += v;
                c *= S(1) / S(static_cast<long>(p.vertices().size()));
                return translated(p, -c);
            }
            case OriginConstraint::Contains: {
                if (rng.below(2) == 0) {
                    Vec<S> c(dim);
                    for (const auto& v : p.vertices()) c += v;
                    c *= S(1) / S(static_cast<long>(p.vertices().size()));
                    return translated(p, -c);
                }
                // Recenter on a vertex: the origin lands on the boundary.
                std::uint64_t i = rng.below(p.vertices().size());
                return translated(p, -p.vertices()[static_cast<int>(i)]);
            }
            case OriginConstraint::Outside: {
                // Push every coordinate above +1, then flip random axes so the
                // polytope can sit in any orthant.
                Vec<S> t(dim);
                for (int i = 0; i < dim; ++i) {
                    S m = p.vertices()[0][i];
                    for (const auto& v : p.vertices())
                        if (v[i] < m) m = v[i];
                    t[i] = S(1) + scalar_traits<S>::from_rational(rng.positive(bound)) - m;
                }
                Mat<S> flip = Mat<S>::identity(dim);
                for (int i = 0; i < dim; ++i)
                    if (rng.below(2) == 1) flip.at(i, i) = S(-1);
                return apply_map(translated(p, t), flip);
            }
        }
    }
    throw GenerationExhausted("gen_polytope: could not satisfy the constraints");
}

// Random volume-preserving map: a product of 2 to 6 elementary shears, so the
// determinant is exactly 1 by construction.
template <typename S>
Mat<S> gen_sl(Stream& rng, int dim, int bound) {
    long count = rng.range(2, 6);
    Mat<S> m = Mat<S>::identity(dim);
    for (long k = 0; k < count; ++k) {
        long i = rng.range(0, dim - 1);
        long j = rng.range(0, dim - 2);
        if (j >= i) ++j;
        Rat c = rng.positive(bound);
        if (rng.below(2) == 1) c = -c;
        Mat<S> shear = Mat<S>::identity(dim);
        shear.at(static_cast<int>(i), static_cast<int>(j)) = scalar_traits<S>::from_rational(c);
        m = m * shear;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Valuation handles: a named map P -> matrix plus the origin constraint its
// domain needs. Fixed representative parameters are deliberately distinct so
// that dropped factors cannot cancel between terms.

template <typename S>
struct ValuationHandle {
    std::string name;
    OriginConstraint domain;
    std::function<Mat<S>(const Polytope<S>&)> fn;
};

// Valuations whose domains are closed under cutting with origin hyperplanes.
template <typename S>
std::vector<ValuationHandle<S>> cut_handles(int dim) {
    std::vector<ValuationHandle<S>> hs;
    hs.push_back({"moment", OriginConstraint::Any,
                  [](const Polytope<S>& p) { return moment_matrix(p); }});
    hs.push_back({"general-lyz", OriginConstraint::Any, [](const Polytope<S>& p) {
                      return general_lyz(p, CauchyWitness<S>::linear(S(1)));
                  }});
    if (dim == 3) {
        hs.push_back({"i", OriginConstraint::Contains,
                      [](const Polytope<S>& p) { return i_polytope(p); }});
        hs.push_back({"theorem2", OriginConstraint::Contains, [](const Polytope<S>& p) {
                          ValuationSpec<S> spec = Theorem2Params<S>{S(2), CauchyWitness<S>::linear(S(3))};
                          return evaluate(spec, p);
                      }});
        hs.push_back({"theorem5", OriginConstraint::Any, [](const Polytope<S>& p) {
                          ValuationSpec<S> spec = Theorem5Params<S>{
                              S(1), S(-1), CauchyWitness<S>::linear(S(2)),
                              CauchyWitness<S>::linear(S(1) / S(2))};
                          return evaluate(spec, p);
                      }});
    }
    if (dim >= 4) {
        hs.push_back({"theorem4", OriginConstraint::Any, [](const Polytope<S>& p) {
                          ValuationSpec<S> spec = Theorem4Params<S>{CauchyWitness<S>::linear(S(1)),
                                                                    CauchyWitness<S>::linear(S(-2))};
                          return evaluate(spec, p);
                      }});
    }
    return hs;
}

// Contravariant valuations. The raw moment matrix is excluded: it transforms
// covariantly and only its polar twist is contravariant. The other cut
// handles qualify, plus two whose domains are not cut-stable.
template <typename S>
std::vector<ValuationHandle<S>> contravariance_handles(int dim) {
    std::vector<ValuationHandle<S>> hs;
    for (auto& h : cut_handles<S>(dim))
        if (h.name != "moment") hs.push_back(std::move(h));
    // Kept out of dims >= 5: the polar of a random 5-polytope has enough
    // vertices that brute-force facet enumeration on it dominates the run.
    if (dim <= 4)
        hs.push_back({"moment-polar", OriginConstraint::Interior, [](const Polytope<S>& p) {
                          return moment_matrix(polar(p));
                      }});
    hs.push_back({"classical-lyz", OriginConstraint::Interior,
                  [](const Polytope<S>& p) { return classical_lyz(p); }});
    return hs;
}

template <typename S>
ValuationHandle<S> find_handle(std::string_view name, int dim) {
    for (auto& h : contravariance_handles<S>(dim))
        if (h.name == name) return h;
    throw UnknownCheckName("no valuation handle named '" + std::string(name) + "'");
}

namespace detail {

template <typename S>
std::string describe_polytope(const Polytope<S>& p) {
    std::string s = "vertices";
    for (const auto& v : p.vertices()) s += " " + lyzval::to_string(v);
    return s;
}

template <typename S>
S pow_scalar(S base, int e) {
    S r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// A hyperplane through the origin that strictly separates some vertices of q
// from others, if one can be found within budget.
template <typename S>
std::optional<Vec<S>> find_cutting_normal(Stream& rng, const Polytope<S>& q, int bound) {
    for (int t = 0; t < 64; ++t) {
        std::vector<Rat> raw = rng.rational_vector(q.ambient_dim(), bound);
        Vec<S> nu = to_scalar_vec<S>(raw);
        if (is_zero_vec(nu)) continue;
        bool pos = false, neg = false;
        for (const auto& v : q.vertices()) {
            int s = scalar_traits<S>::sign(dot(nu, v));
            pos = pos || s > 0;
            neg = neg || s < 0;
        }
        if (pos && neg) return nu;
    }
    return std::nullopt;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Checks

// The valuation identity under the two constructed simplex cut maps, their
// lower-dimensional variant when the domain allows it, and a generic cut by a
// random hyperplane through the origin.
template <typename S>
CheckReport check_valuation_on_cuts(const ValuationHandle<S>& h, const TrialConfig& cfg) {
    const int n = cfg.dim;
    return detail::run_trials(
        "cut-additivity/" + h.name, cfg, n,
        [&](int trial, Stream& rng) -> std::optional<std::string> {
            S lam = scalar_traits<S>::from_rational(rng.open_unit(cfg.coordinate_bound));
            S s = scalar_traits<S>::from_rational(rng.positive(cfg.coordinate_bound));
            auto [phi1, phi2] = make_cut_transforms(lam, n);

            Polytope<S> p = scaled(standard_simplex<S>(n, n), s);
            Polytope<S> pm = scaled(standard_simplex<S>(n - 1, n), s);
            Mat<S> lhs = h.fn(apply_map(p, phi1)) + h.fn(apply_map(p, phi2));
            Mat<S> rhs = h.fn(p) + h.fn(apply_map(pm, phi1));
            if (lhs != rhs)
                return "constructed simplex cut: lambda=" + scalar_traits<S>::str(lam) +
                       " scale=" + scalar_traits<S>::str(s) + " lhs=" + lyzval::to_string(lhs) +
                       " rhs=" + lyzval::to_string(rhs);

            if (h.domain == OriginConstraint::Any) {
                Polytope<S> b = scaled(basis_simplex<S>(n, n), s);
                Polytope<S> bm = scaled(basis_simplex<S>(n - 1, n), s);
                Mat<S> tl = h.fn(apply_map(b, phi1)) + h.fn(apply_map(b, phi2));
                Mat<S> tr = h.fn(b) + h.fn(apply_map(bm, phi1));
                if (tl != tr)
                    return "constructed facet-simplex cut: lambda=" + scalar_traits<S>::str(lam) +
                           " scale=" + scalar_traits<S>::str(s) + " lhs=" + lyzval::to_string(tl) +
                           " rhs=" + lyzval::to_string(tr);
            }

            OriginConstraint oc = h.domain == OriginConstraint::Contains
                                      ? OriginConstraint::Contains
                                      : (trial % 2 ? OriginConstraint::Outside : OriginConstraint::Any);
            for (int attempt = 0; attempt < 16; ++attempt) {
                Polytope<S> q = gen_polytope<S>(rng, n, cfg.max_vertices, cfg.coordinate_bound, oc);
                auto nu = detail::find_cutting_normal(rng, q, cfg.coordinate_bound);
                if (!nu) continue;
                CutPieces<S> cut = cut_with_halfspace(q, *nu);
                Mat<S> gl = h.fn(*cut.below) + h.fn(*cut.above);
                Mat<S> gr = h.fn(q) + h.fn(*cut.section);
                if (gl != gr)
                    return "generic origin cut: nu=" + lyzval::to_string(*nu) + " " +
                           detail::describe_polytope(q) + " lhs=" + lyzval::to_string(gl) +
                           " rhs=" + lyzval::to_string(gr);
                return std::nullopt;
            }
            throw GenerationExhausted("check_valuation_on_cuts: no proper cut found");
        });
}

// mu(phi P) must equal phi^{-T} mu(P) phi^{-1} for volume-preserving phi.
template <typename S>
CheckReport check_contravariance(const ValuationHandle<S>& h, const TrialConfig& cfg) {
    const int n = cfg.dim;
    return detail::run_trials(
        "contravariance/" + h.name, cfg, n,
        [&](int trial, Stream& rng) -> std::optional<std::string> {
            OriginConstraint oc = h.domain;
            if (oc == OriginConstraint::Any && trial % 2)
                oc = OriginConstraint::Outside;
            Polytope<S> p = gen_polytope<S>(rng, n, cfg.max_vertices, cfg.coordinate_bound, oc);
            Mat<S> phi = gen_sl<S>(rng, n, cfg.coordinate_bound);
            Mat<S> inv = inverse(phi);
            Mat<S> lhs = h.fn(apply_map(p, phi));
            Mat<S> rhs = transpose(inv) * h.fn(p) * inv;
            if (lhs != rhs)
                return detail::describe_polytope(p) + " phi=" + lyzval::to_string(phi) +
                       " lhs=" + lyzval::to_string(lhs) + " rhs=" + lyzval::to_string(rhs);
            return std::nullopt;
        });
}

// Closed forms on scaled standard simplices in R^3: the family value on
// rho T^3 is c rho^4 anti((1,1,1)) + k rho J for xi(x) = k x, and the value
// vanishes on the lower-dimensional rho T^1, rho T^2.
template <typename S>
CheckReport check_simplex_oracles(const TrialConfig& cfg) {
    return detail::run_trials(
        "simplex-oracles", cfg, 3, [&](int, Stream& rng) -> std::optional<std::string> {
            S rho = scalar_traits<S>::from_rational(rng.positive(cfg.coordinate_bound));
            S c = scalar_traits<S>::from_rational(rng.rational(cfg.coordinate_bound));
            S k = scalar_traits<S>::from_rational(rng.rational(cfg.coordinate_bound));
            ValuationSpec<S> spec = Theorem2Params<S>{c, CauchyWitness<S>::linear(k)};

            Mat<S> got = evaluate(spec, scaled(standard_simplex<S>(3, 3), rho));
            Vec<S> ones{S(1), S(1), S(1)};
            Mat<S> expected = S(c * detail::pow_scalar(rho, 4)) * anti(ones) +
                              S(k * rho) * outer(ones, ones);
            if (got != expected)
                return "full simplex: rho=" + scalar_traits<S>::str(rho) +
                       " c=" + scalar_traits<S>::str(c) + " k=" + scalar_traits<S>::str(k) +
                       " got=" + lyzval::to_string(got) + " expected=" + lyzval::to_string(expected);

            for (int d = 1; d <= 2; ++d) {
                Mat<S> low = evaluate(spec, scaled(standard_simplex<S>(d, 3), rho));
                if (low != Mat<S>(3))
                    return "lower simplex T^" + std::to_string(d) +
                           " should vanish: got=" + lyzval::to_string(low);
            }
            return std::nullopt;
        });
}

// Additivity of the antisymmetric valuation on the four-simplex configuration:
// splitting [o,u,v,w] along the segment from v to w.
template <typename S>
CheckReport check_simplex_additivity(const TrialConfig& cfg) {
    return detail::run_trials(
        "simplex-additivity", cfg, 3, [&](int, Stream& rng) -> std::optional<std::string> {
            Vec<S> u(3), v(3), w(3);
            for (int tries = 0;; ++tries) {
                if (tries == 1000)
                    throw GenerationExhausted("check_simplex_additivity: no independent triple");
                u = to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound));
                v = to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound));
                w = to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound));
                Mat<S> e(3);
                for (int j = 0; j < 3; ++j) {
                    e.at(0, j) = u[j];
                    e.at(1, j) = v[j];
                    e.at(2, j) = w[j];
                }
                int sg = scalar_traits<S>::sign(determinant(e));
                if (sg == 0) continue;
                if (sg < 0) std::swap(v, w);
                break;
            }
            S k1 = scalar_traits<S>::from_rational(rng.open_unit(cfg.coordinate_bound));
            S k2 = scalar_traits<S>::from_rational(rng.open_unit(cfg.coordinate_bound));
            if (k2 < k1) std::swap(k1, k2);
            Vec<S> m1 = k1 * v + (S(1) - k1) * w;
            Vec<S> m2 = k2 * v + (S(1) - k2) * w;
            Vec<S> o(3);

            Mat<S> lhs = i_simplex(Simplex<S>(3, {o, u, v, m1})) +
                         i_simplex(Simplex<S>(3, {o, u, m2, w}));
            Mat<S> rhs = i_simplex(Simplex<S>(3, {o, u, v, w})) +
                         i_simplex(Simplex<S>(3, {o, u, m2, m1}));
            if (lhs != rhs)
                return "u=" + lyzval::to_string(u) + " v=" + lyzval::to_string(v) +
                       " w=" + lyzval::to_string(w) + " k1=" + scalar_traits<S>::str(k1) +
                       " k2=" + scalar_traits<S>::str(k2) + " lhs=" + lyzval::to_string(lhs) +
                       " rhs=" + lyzval::to_string(rhs);
            return std::nullopt;
        });
}

// The origin-triangulation sum must not depend on fan apex choices.
template <typename S>
CheckReport check_triangulation_independence(const TrialConfig& cfg) {
    return detail::run_trials(
        "triangulation-independence", cfg, 3, [&](int, Stream& rng) -> std::optional<std::string> {
            Polytope<S> p = gen_polytope<S>(rng, 3, cfg.max_vertices, cfg.coordinate_bound,
                                            OriginConstraint::Interior);
            Mat<S> base = i_polytope(p);
            lyzval::detail::ApexSelector random_apex = [&rng](const std::vector<int>& idxs) {
                return idxs[rng.below(idxs.size())];
            };
            Mat<S> alt(3);
            for (const auto& t : triangulate_at_origin(p, random_apex)) alt += i_simplex(t);
            if (base != alt)
                return detail::describe_polytope(p) + " base=" + lyzval::to_string(base) +
                       " alt=" + lyzval::to_string(alt);
            return std::nullopt;
        });
}

// Simple valuations vanish on lower-dimensional inputs: random polytopes of
// intrinsic dimension <= 2 in R^3 through the origin, and scaled T^1, T^2.
template <typename S>
CheckReport check_simplicity(const TrialConfig& cfg) {
    return detail::run_trials(
        "simplicity", cfg, 3, [&](int, Stream& rng) -> std::optional<std::string> {
            long d = static_cast<long>(rng.below(3));
            std::vector<Vec<S>> basis;
            for (int tries = 0; static_cast<long>(basis.size()) < d; ++tries) {
                if (tries == 1000)
                    throw GenerationExhausted("check_simplicity: no independent basis");
                basis.push_back(to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound)));
                if (row_rank(basis).rank != static_cast<int>(basis.size())) basis.pop_back();
            }
            long kpts = rng.range(d + 1, d + 4);
            std::vector<Vec<S>> pts;
            for (long i = 0; i < kpts; ++i) {
                Vec<S> x(3);
                for (const auto& b : basis)
                    x += scalar_traits<S>::from_rational(rng.rational(cfg.coordinate_bound)) * b;
                pts.push_back(std::move(x));
            }
            if (rng.below(2) == 0) {
                pts.push_back(Vec<S>(3));
            } else {
                Vec<S> c(3);
                for (const auto& x : pts) c += x;
                c *= S(1) / S(kpts);
                for (auto& x : pts) x -= c;
            }
            Polytope<S> p(3, std::move(pts));

            S c = scalar_traits<S>::from_rational(rng.rational(cfg.coordinate_bound));
            S k = scalar_traits<S>::from_rational(rng.rational(cfg.coordinate_bound));
            ValuationSpec<S> spec = Theorem2Params<S>{c, CauchyWitness<S>::linear(k)};
            if (evaluate(spec, p) != Mat<S>(3))
                return "flat polytope value nonzero: " + detail::describe_polytope(p);
            if (general_lyz(p, CauchyWitness<S>::linear(k)) != Mat<S>(3))
                return "flat LYZ value nonzero: " + detail::describe_polytope(p);

            S rho = scalar_traits<S>::from_rational(rng.positive(cfg.coordinate_bound));
            for (int dd = 1; dd <= 2; ++dd)
                if (evaluate(spec, scaled(standard_simplex<S>(dd, 3), rho)) != Mat<S>(3))
                    return "scaled T^" + std::to_string(dd) + " value nonzero, rho=" +
                           scalar_traits<S>::str(rho);
            return std::nullopt;
        });
}

// Degrees of homogeneity under dilation: n+2 for the moment matrix, n-2 for
// the classical LYZ matrix (facet area over offset), 4 for the antisymmetric
// valuation in R^3.  In R^3 the LYZ degree specializes to 1.
template <typename S>
CheckReport check_homogeneity(const TrialConfig& cfg) {
    const int n = cfg.dim;
    return detail::run_trials(
        "homogeneity", cfg, n, [&](int, Stream& rng) -> std::optional<std::string> {
            S s = scalar_traits<S>::from_rational(rng.positive(cfg.coordinate_bound));

            Polytope<S> p = gen_polytope<S>(rng, n, cfg.max_vertices, cfg.coordinate_bound,
                                            OriginConstraint::Any);
            if (moment_matrix(scaled(p, s)) != detail::pow_scalar(s, n + 2) * moment_matrix(p))
                return "moment not (n+2)-homogeneous: s=" + scalar_traits<S>::str(s) + " " +
                       detail::describe_polytope(p);

            Polytope<S> q = gen_polytope<S>(rng, n, cfg.max_vertices, cfg.coordinate_bound,
                                            OriginConstraint::Interior);
            if (classical_lyz(scaled(q, s)) != detail::pow_scalar(s, n - 2) * classical_lyz(q))
                return "LYZ not (n-2)-homogeneous: s=" + scalar_traits<S>::str(s) + " " +
                       detail::describe_polytope(q);

            if (n == 3) {
                Polytope<S> r = gen_polytope<S>(rng, 3, cfg.max_vertices, cfg.coordinate_bound,
                                                OriginConstraint::Contains);
                if (i_polytope(scaled(r, s)) != detail::pow_scalar(s, 4) * i_polytope(r))
                    return "I not 4-homogeneous: s=" + scalar_traits<S>::str(s) + " " +
                           detail::describe_polytope(r);
            }
            return std::nullopt;
        });
}

// The symmetric part of a theorem2 value is twice the LYZ term and the
// antisymmetric part is the I term.
template <typename S>
CheckReport check_symmetry_split(const TrialConfig& cfg) {
    return detail::run_trials(
        "symmetry-split", cfg, 3, [&](int, Stream& rng) -> std::optional<std::string> {
            Polytope<S> p = gen_polytope<S>(rng, 3, cfg.max_vertices, cfg.coordinate_bound,
                                            OriginConstraint::Contains);
            S c = scalar_traits<S>::from_rational(rng.rational(cfg.coordinate_bound));
            S k = scalar_traits<S>::from_rational(rng.rational(cfg.coordinate_bound));
            CauchyWitness<S> xi = CauchyWitness<S>::linear(k);
            ValuationSpec<S> spec = Theorem2Params<S>{c, xi};
            auto [sym, skew] = split_symmetric(evaluate(spec, p));
            if (sym != S(2) * general_lyz(p, xi))
                return "symmetric part mismatch: " + detail::describe_polytope(p);
            if (skew != c * i_polytope(p))
                return "antisymmetric part mismatch: " + detail::describe_polytope(p);
            return std::nullopt;
        });
}

// Polar duality is an involution on origin-interior polytopes.
template <typename S>
CheckReport check_polar_involution(const TrialConfig& cfg) {
    const int n = cfg.dim;
    return detail::run_trials(
        "polar-involution", cfg, n, [&](int, Stream& rng) -> std::optional<std::string> {
            Polytope<S> p = gen_polytope<S>(rng, n, cfg.max_vertices, cfg.coordinate_bound,
                                            OriginConstraint::Interior);
            if (polar(polar(p)) != p)
                return detail::describe_polytope(p);
            return std::nullopt;
        });
}

// The origin triangulation partitions the volume.
template <typename S>
CheckReport check_volume_partition(const TrialConfig& cfg) {
    const int n = cfg.dim;
    return detail::run_trials(
        "volume-partition", cfg, n, [&](int, Stream& rng) -> std::optional<std::string> {
            Polytope<S> p = gen_polytope<S>(rng, n, cfg.max_vertices, cfg.coordinate_bound,
                                            OriginConstraint::Contains);
            S fact(1);
            for (int i = 2; i <= n; ++i) fact *= S(i);
            S total(0);
            for (const auto& t : triangulate_at_origin(p)) {
                Mat<S> e(n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) e.at(i, j) = t.verts[i + 1][j];
                total += scalar_traits<S>::abs(determinant(e));
            }
            total /= fact;
            if (!scalar_traits<S>::eq(total, volume(p)))
                return detail::describe_polytope(p) + " cones=" + scalar_traits<S>::str(total) +
                       " volume=" + scalar_traits<S>::str(volume(p));
            return std::nullopt;
        });
}

// cross(phi a, phi b) = phi^{-T} cross(a, b) for volume-preserving phi, and
// anti(a) b is the cross product.
template <typename S>
CheckReport check_cross_transform(const TrialConfig& cfg) {
    return detail::run_trials(
        "cross-transform", cfg, 3, [&](int, Stream& rng) -> std::optional<std::string> {
            Vec<S> a = to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound));
            Vec<S> b = to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound));
            Mat<S> phi = gen_sl<S>(rng, 3, cfg.coordinate_bound);
            if (cross(phi * a, phi * b) != contragredient(phi) * cross(a, b))
                return "a=" + lyzval::to_string(a) + " b=" + lyzval::to_string(b) +
                       " phi=" + lyzval::to_string(phi);
            if (anti(a) * b != cross(a, b))
                return "anti/cross mismatch at a=" + lyzval::to_string(a) +
                       " b=" + lyzval::to_string(b);
            return std::nullopt;
        });
}

// Planted defects must be detected: each control is fed through the same
// machinery as the genuine checks and the check fails if any control is never
// caught. The non-valuation control is the vertex-sum outer product; note the
// tempting alternative, the first-vertex outer product, is useless here
// because the lexicographic minimum is genuinely additive on convex unions
// (lexmin of a piece not holding the global minimum always lies on the cut).
template <typename S>
CheckReport check_negative_controls(const TrialConfig& cfg) {
    cfg.validate();
    CheckReport r;
    r.check = "negative-controls";
    r.dim = cfg.dim;
    r.seed = cfg.seed;
    r.trials = cfg.trials;

    ValuationHandle<S> vertex_sum{"planted-vertex-sum", OriginConstraint::Any,
                                  [](const Polytope<S>& p) {
                                      Vec<S> s(p.ambient_dim());
                                      for (const auto& v : p.vertices()) s += v;
                                      return outer(s, s);
                                  }};
    CheckReport cuts = check_valuation_on_cuts(vertex_sum, cfg);

    ValuationHandle<S> raw_moment{"planted-raw-moment", OriginConstraint::Interior,
                                  [](const Polytope<S>& p) { return moment_matrix(p); }};
    CheckReport contra = check_contravariance(raw_moment, cfg);

    // Dropping the orientation normalization (signed determinant instead of
    // its absolute value) breaks additivity as soon as a simplex is presented
    // with two vertices swapped, which is legitimate input.
    int caught_orientation = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        Stream rng(cfg.seed, "negative-controls/orientation", static_cast<std::uint64_t>(t));
        Vec<S> u(3), v(3), w(3);
        bool ok = false;
        for (int tries = 0; tries < 1000; ++tries) {
            u = to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound));
            v = to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound));
            w = to_scalar_vec<S>(rng.rational_vector(3, cfg.coordinate_bound));
            Mat<S> e(3);
            for (int j = 0; j < 3; ++j) {
                e.at(0, j) = u[j];
                e.at(1, j) = v[j];
                e.at(2, j) = w[j];
            }
            int sg = scalar_traits<S>::sign(determinant(e));
            if (sg == 0 || is_zero_vec(u + v + w)) continue;
            if (sg < 0) std::swap(v, w);
            ok = true;
            break;
        }
        if (!ok) continue;
        auto signed_i = [](const Simplex<S>& sx) {
            std::vector<Vec<S>> rest;
            for (const auto& vert : sx.verts)
                if (!is_zero_vec(vert)) rest.push_back(vert);
            if (rest.size() != 3) return Mat<S>(3);
            Mat<S> e(3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) e.at(i, j) = rest[i][j];
            return determinant(e) * anti(rest[0] + rest[1] + rest[2]);
        };
        S k1 = scalar_traits<S>::from_rational(rng.open_unit(cfg.coordinate_bound));
        S k2 = scalar_traits<S>::from_rational(rng.open_unit(cfg.coordinate_bound));
        if (k2 < k1) std::swap(k1, k2);
        Vec<S> m1 = k1 * v + (S(1) - k1) * w;
        Vec<S> m2 = k2 * v + (S(1) - k2) * w;
        Vec<S> o(3);
        Mat<S> lhs = signed_i(Simplex<S>(3, {o, u, v, m1})) + signed_i(Simplex<S>(3, {o, u, m2, w}));
        Mat<S> rhs = signed_i(Simplex<S>(3, {o, u, w, v})) + signed_i(Simplex<S>(3, {o, u, m2, m1}));
        if (lhs != rhs) ++caught_orientation;
    }

    auto expect_caught = [&](bool caught, const char* what) {
        if (!caught) {
            ++r.failures_total;
            if (static_cast<int>(r.failures.size()) < CheckReport::kMaxStoredFailures)
                r.failures.push_back({-1, std::string("planted defect was never detected: ") + what});
        }
    };
    expect_caught(cuts.failures_total > 0, "vertex-sum outer product passed every cut identity");
    expect_caught(contra.failures_total > 0, "raw moment matrix passed every contravariance trial");
    expect_caught(caught_orientation > 0, "signed-determinant valuation passed every additivity trial");
    return r;
}

// ---------------------------------------------------------------------------
// Suite

inline const std::vector<std::string>& suite_check_names() {
    static const std::vector<std::string> names = {
        "cut-additivity",    "contravariance", "simplex-oracles",  "simplex-additivity",
        "triangulation-independence", "simplicity", "homogeneity", "symmetry-split",
        "polar-involution",  "volume-partition", "cross-transform", "negative-controls"};
    return names;
}

// Runs the named checks (or all checks applicable at cfg.dim for "all") and
// returns one report per check, per valuation handle where applicable.
// Checks specific to R^3 run there regardless of cfg.dim when requested by
// name; "all" includes them only when cfg.dim is 3.
template <typename S>
std::vector<CheckReport> run_suite(const TrialConfig& cfg, const std::vector<std::string>& names) {
    cfg.validate();
    std::vector<std::string> wanted;
    for (const auto& n : names) {
        if (n == "all") {
            wanted.insert(wanted.end(),
                          {"cut-additivity", "contravariance", "homogeneity", "polar-involution",
                           "volume-partition", "negative-controls"});
            if (cfg.dim == 3)
                wanted.insert(wanted.end(),
                              {"simplex-oracles", "simplex-additivity", "triangulation-independence",
                               "simplicity", "symmetry-split", "cross-transform"});
        } else {
            wanted.push_back(n);
        }
    }

    std::vector<CheckReport> reports;
    for (const auto& name : wanted) {
        if (name == "cut-additivity") {
            for (const auto& h : cut_handles<S>(cfg.dim))
                reports.push_back(check_valuation_on_cuts(h, cfg));
        } else if (name == "contravariance") {
            for (const auto& h : contravariance_handles<S>(cfg.dim))
                reports.push_back(check_contravariance(h, cfg));
        } else if (name == "simplex-oracles") {
            reports.push_back(check_simplex_oracles<S>(cfg));
        } else if (name == "simplex-additivity") {
            reports.push_back(check_simplex_additivity<S>(cfg));
        } else if (name == "triangulation-independence") {
            reports.push_back(check_triangulation_independence<S>(cfg));
        } else if (name == "simplicity") {
            reports.push_back(check_simplicity<S>(cfg));
        } else if (name == "homogeneity") {
            reports.push_back(check_homogeneity<S>(cfg));
        } else if (name == "symmetry-split") {
            reports.push_back(check_symmetry_split<S>(cfg));
        } else if (name == "polar-involution") {
            reports.push_back(check_polar_involution<S>(cfg));
        } else if (name == "volume-partition") {
            reports.push_back(check_volume_partition<S>(cfg));
        } else if (name == "cross-transform") {
            reports.push_back(check_cross_transform<S>(cfg));
        } else if (name == "negative-controls") {
            reports.push_back(check_negative_controls<S>(cfg));
        } else {
            std::string valid;
            for (const auto& v : suite_check_names()) valid += (valid.empty() ? "" : ", ") + v;
            throw UnknownCheckName("unknown check '" + name + "'; valid names: all, " + valid);
        }
    }
    return reports;
}

} // namespace lyzval::harness

#endif
