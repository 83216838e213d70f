#ifndef LYZVAL_LINALG_HPP
#define LYZVAL_LINALG_HPP

// Dense vectors and square matrices over an exact or floating scalar.
// Dimensions in this library are tiny (n <= 6), so everything is plain
// O(n^3) elimination with no blocking or pivot heuristics beyond what
// correctness requires.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lyzval/errors.hpp"
#include "lyzval/rational.hpp"

namespace lyzval {

template <typename S>
class Vec {
public:
    Vec() = default;
    explicit Vec(int n) : e_(static_cast<std::size_t>(n), S(0)) {}
    Vec(std::initializer_list<S> xs) : e_(xs) {}
    explicit Vec(std::vector<S> xs) : e_(std::move(xs)) {}

    static Vec unit(int n, int i) {
        Vec v(n);
        v[i] = S(1);
        return v;
    }

    int dim() const { return static_cast<int>(e_.size()); }
    S& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const S& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<S>& data() const { return e_; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < dim(); ++i) e_[i] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < dim(); ++i) e_[i] -= o[i];
        return *this;
    }
    Vec& operator*=(const S& c) {
        for (auto& x : e_) x *= c;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const S& c, Vec a) { return a *= c; }
    friend Vec operator-(Vec a) {
        for (auto& x : a.e_) x = -x;
        return a;
    }

    // Mode-aware equality: exact in exact mode, tolerance in float mode.
    friend bool operator==(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) return false;
        for (int i = 0; i < a.dim(); ++i)
            if (!scalar_traits<S>::eq(a[i], b[i])) return false;
        return true;
    }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

private:
    std::vector<S> e_;
};

template <typename S>
S dot(const Vec<S>& a, const Vec<S>& b) {
    S r(0);
    for (int i = 0; i < a.dim(); ++i) r += a[i] * b[i];
    return r;
}

template <typename S>
bool is_zero_vec(const Vec<S>& a) {
    for (int i = 0; i < a.dim(); ++i)
        if (!scalar_traits<S>::is_zero(a[i])) return false;
    return true;
}

// Raw lexicographic order on coordinates; the canonical vertex order.
template <typename S>
bool lex_less(const Vec<S>& a, const Vec<S>& b) {
    for (int i = 0; i < a.dim() && i < b.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.dim() < b.dim();
}

template <typename S>
std::string to_string(const Vec<S>& v) {
    std::string s = "(";
    for (int i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += scalar_traits<S>::str(v[i]);
    }
    return s + ")";
}

template <typename S>
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, S(0)) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }
    static Mat zero(int n) { return Mat(n); }

    // Row-major construction from a nested list, validated square.
    static Mat from_rows(std::initializer_list<std::initializer_list<S>> rows) {
        Mat m(static_cast<int>(rows.size()));
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != m.n_)
                throw DimensionMismatch("matrix rows must all have length equal to the row count");
            int j = 0;
            for (const auto& x : row) m.at(i, j++) = x;
            ++i;
        }
        return m;
    }

    int dim() const { return n_; }
    S& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const S& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    Mat& operator+=(const Mat& o) {
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    Mat& operator*=(const S& c) {
        for (auto& x : e_) x *= c;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const S& c, Mat a) { return a *= c; }
    friend Mat operator-(Mat a) {
        for (auto& x : a.e_) x = -x;
        return a;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const S& aik = a.at(i, k);
                if (scalar_traits<S>::is_zero(aik)) continue;
                for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend Vec<S> operator*(const Mat& a, const Vec<S>& v) {
        Vec<S> r(a.n_);
        for (int i = 0; i < a.n_; ++i) {
            S acc(0);
            for (int j = 0; j < a.n_; ++j) acc += a.at(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            if (!scalar_traits<S>::eq(a.e_[k], b.e_[k])) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<S> e_;
};

template <typename S>
Mat<S> transpose(const Mat<S>& a) {
    Mat<S> r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

template <typename S>
Mat<S> outer(const Vec<S>& u, const Vec<S>& v) {
    if (u.dim() != v.dim())
        throw DimensionMismatch("outer product needs equal-length vectors");
    Mat<S> r(u.dim());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j) r.at(i, j) = u[i] * v[j];
    return r;
}

template <typename S>
std::string to_string(const Mat<S>& m) {
    std::string s = "[";
    for (int i = 0; i < m.dim(); ++i) {
        if (i) s += "; ";
        for (int j = 0; j < m.dim(); ++j) {
            if (j) s += " ";
            s += scalar_traits<S>::str(m.at(i, j));
        }
    }
    return s + "]";
}

namespace detail {

// Picks the elimination pivot: any nonzero entry in exact mode, the entry of
// largest magnitude in float mode (plain partial pivoting).
template <typename S>
int pick_pivot(const std::vector<std::vector<S>>& rows, int from_row, int col) {
    int best = -1;
    for (int r = from_row; r < static_cast<int>(rows.size()); ++r) {
        if (scalar_traits<S>::is_zero(rows[r][col])) continue;
        if constexpr (scalar_traits<S>::exact) {
            return r;
        } else {
            if (best < 0 || scalar_traits<S>::abs(rows[r][col]) > scalar_traits<S>::abs(rows[best][col]))
                best = r;
        }
    }
    return best;
}

} // namespace detail

struct RankInfo {
    int rank = 0;
    std::vector<int> pivot_columns;
};

// Row-reduces a copy of the given rows (any count, common length) and reports
// the rank together with the pivot columns, in increasing column order.
template <typename S>
RankInfo row_rank(std::vector<Vec<S>> vecs) {
    RankInfo info;
    if (vecs.empty()) return info;
    const int cols = vecs[0].dim();
    std::vector<std::vector<S>> rows;
    rows.reserve(vecs.size());
    for (auto& v : vecs) {
        if (v.dim() != cols)
            throw DimensionMismatch("rank computation needs equal-length vectors");
        rows.push_back(v.data());
    }
    if constexpr (!scalar_traits<S>::exact) {
        // Scale each row to unit max-magnitude so the zero threshold is
        // meaningful regardless of the data's scale.
        for (auto& row : rows) {
            double m = 0;
            for (double x : row) m = std::max(m, std::abs(x));
            if (m > 0)
                for (auto& x : row) x /= m;
        }
    }
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int p = detail::pick_pivot(rows, r, c);
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        for (int k = r + 1; k < static_cast<int>(rows.size()); ++k) {
            if (scalar_traits<S>::is_zero(rows[k][c])) continue;
            S f = rows[k][c] / rows[r][c];
            for (int j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
        }
        info.pivot_columns.push_back(c);
        ++r;
    }
    info.rank = r;
    return info;
}

template <typename S>
S determinant(const Mat<S>& m) {
    const int n = m.dim();
    if (n == 0) return S(1);
    std::vector<std::vector<S>> rows(n, std::vector<S>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    S det(1);
    for (int c = 0; c < n; ++c) {
        int p = detail::pick_pivot(rows, c, c);
        if (p < 0) return S(0);
        if (p != c) {
            std::swap(rows[p], rows[c]);
            det = -det;
        }
        det *= rows[c][c];
        for (int k = c + 1; k < n; ++k) {
            if (scalar_traits<S>::is_zero(rows[k][c])) continue;
            S f = rows[k][c] / rows[c][c];
            for (int j = c; j < n; ++j) rows[k][j] -= f * rows[c][j];
        }
    }
    return det;
}

template <typename S>
Mat<S> inverse(const Mat<S>& m) {
    const int n = m.dim();
    std::vector<std::vector<S>> a(n, std::vector<S>(2 * n, S(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n + i] = S(1);
    }
    for (int c = 0; c < n; ++c) {
        int p = detail::pick_pivot(a, c, c);
        if (p < 0)
            throw SingularMatrix("matrix is singular, cannot invert");
        std::swap(a[p], a[c]);
        S inv = S(1) / a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
        for (int k = 0; k < n; ++k) {
            if (k == c || scalar_traits<S>::is_zero(a[k][c])) continue;
            S f = a[k][c];
            for (int j = 0; j < 2 * n; ++j) a[k][j] -= f * a[c][j];
        }
    }
    Mat<S> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = a[i][n + j];
    return r;
}

// inverse-transpose: the conjugation that contravariant valuations transform by.
template <typename S>
Mat<S> contragredient(const Mat<S>& m) {
    return transpose(inverse(m));
}

// Vector orthogonal to the span of n-1 vectors in R^n, by cofactor expansion
// along a phantom first row. Zero iff the input rows are linearly dependent.
template <typename S>
Vec<S> orthogonal_complement(const std::vector<Vec<S>>& rows) {
    if (rows.empty())
        return Vec<S>{S(1)};
    const int n = rows[0].dim();
    if (static_cast<int>(rows.size()) != n - 1)
        throw DimensionMismatch("orthogonal complement needs exactly n-1 vectors in R^n");
    Vec<S> w(n);
    Mat<S> minor(n - 1);
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r, cc++) = rows[r][c];
            }
        }
        S d = determinant(minor);
        w[j] = (j % 2 == 0) ? d : S(-d);
    }
    return w;
}

// Primitive integer representative of a nonzero rational direction: clears
// denominators, divides by the gcd, keeps orientation.
inline Vec<Rat> make_primitive(const Vec<Rat>& v) {
    BigInt l = 1;
    for (int i = 0; i < v.dim(); ++i)
        l = detail::lcm(l, boost::multiprecision::denominator(v[i]));
    BigInt g = 0;
    std::vector<BigInt> scaled(static_cast<std::size_t>(v.dim()));
    for (int i = 0; i < v.dim(); ++i) {
        scaled[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
        g = detail::gcd(g, scaled[i]);
    }
    if (g == 0)
        throw Error("cannot normalize the zero vector");
    Vec<Rat> w(v.dim());
    for (int i = 0; i < v.dim(); ++i) w[i] = Rat(scaled[i] / g);
    return w;
}

// Canonical representative of a direction: primitive integers in exact mode,
// unit Euclidean length in float mode. Orientation is preserved.
template <typename S>
Vec<S> canonical_direction(const Vec<S>& v) {
    if constexpr (scalar_traits<S>::exact) {
        return make_primitive(v);
    } else {
        double norm2 = 0;
        for (int i = 0; i < v.dim(); ++i) norm2 += v[i] * v[i];
        if (norm2 == 0)
            throw Error("cannot normalize the zero vector");
        double inv = 1.0 / std::sqrt(norm2);
        Vec<S> w(v.dim());
        for (int i = 0; i < v.dim(); ++i) w[i] = v[i] * inv;
        return w;
    }
}

} // namespace lyzval

#endif
