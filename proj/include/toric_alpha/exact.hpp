#pragma once

// Exact rational and integer linear algebra. Every other header builds on
// these types; nothing in the library touches floating point.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric_alpha/errors.hpp"

namespace toric_alpha {

using Integer = mpz_class;
using Rational = mpq_class;  // arithmetic results are canonical; build fractions with makeRational
using QVector = std::vector<Rational>;
using LatticeVector = std::vector<Integer>;
using IntMatrix = std::vector<LatticeVector>;  // row-major

namespace detail {
inline std::int64_t floorDiv(std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars

inline Rational makeRational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string toString(const Rational& r) { return r.get_str(); }
inline std::string toString(const Integer& z) { return z.get_str(); }

inline Integer parseInteger(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("malformed integer: " + s);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

/// Accepts "p/q", "p", with an optional sign on p.
inline Rational parseRational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parseInteger(text));
    Integer num = parseInteger(text.substr(0, slash));
    Integer den = parseInteger(text.substr(slash + 1));
    return makeRational(num, den);
}

inline Integer floorOf(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

inline Integer ceilOf(const Rational& r) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

inline Rational fractionalPart(const Rational& r) { return r - Rational(floorOf(r)); }

inline Integer gcdOf(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcmOf(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Rational power(const Rational& base, unsigned long exponent) {
    Rational out(1);
    for (unsigned long i = 0; i < exponent; ++i) out *= base;
    return out;
}

// ---------------------------------------------------------------------------
// Vectors

inline QVector toQ(const LatticeVector& v) { return QVector(v.begin(), v.end()); }

inline bool isIntegral(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.get_den() == 1; });
}

inline LatticeVector toLattice(const QVector& v) {
    LatticeVector out;
    out.reserve(v.size());
    for (const auto& r : v) {
        if (r.get_den() != 1) throw std::invalid_argument("vector is not integral");
        out.push_back(r.get_num());
    }
    return out;
}

inline Integer denominatorLcm(const QVector& v) {
    Integer l(1);
    for (const auto& r : v) l = lcmOf(l, r.get_den());
    return l;
}

template <typename A, typename B>
Rational dot(const A& u, const B& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch in dot product");
    Rational s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += Rational(u[i]) * Rational(v[i]);
    return s;
}

inline QVector add(const QVector& u, const QVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    QVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
    return out;
}

inline QVector subtract(const QVector& u, const QVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    QVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
    return out;
}

inline QVector scale(const Rational& t, const QVector& v) {
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
    return out;
}

inline bool isZero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

inline bool isZero(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

inline Integer contentOf(const LatticeVector& v) {
    Integer g(0);
    for (const auto& z : v) g = gcdOf(g, z);
    return g;
}

inline bool isPrimitive(const LatticeVector& v) { return contentOf(v) == 1; }

struct PrimitiveDecomposition {
    LatticeVector primitive;
    Integer multiplicity;
};

/// Splits v = multiplicity * primitive with gcd(primitive) = 1.
inline PrimitiveDecomposition primitivePart(const LatticeVector& v) {
    Integer g = contentOf(v);
    if (g == 0) throw DomainError("zero-vector", "the zero vector has no primitive part");
    LatticeVector p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
    return {std::move(p), g};
}

/// Scales a nonzero rational vector by a positive factor to a primitive
/// integer vector; returns the factor used.
inline std::pair<LatticeVector, Rational> primitiveScaling(const QVector& v) {
    Integer l = denominatorLcm(v);
    LatticeVector z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) z[i] = Rational(v[i] * Rational(l)).get_num();
    Integer g = contentOf(z);
    if (g == 0) throw DomainError("zero-vector", "cannot normalize the zero vector");
    for (auto& e : z) e /= g;
    return {std::move(z), Rational(l) / Rational(g)};
}

// ---------------------------------------------------------------------------
// Matrices

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static QMatrix fromRows(const std::vector<QVector>& rows) {
        if (rows.empty()) return {};
        QMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Columns given as vectors.
    static QMatrix fromColumns(const std::vector<QVector>& cols) {
        return fromRows(cols).transposed();
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool isSquare() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVector row(std::size_t i) const {
        return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    QVector column(std::size_t j) const {
        QVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    QMatrix transposed() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    QVector operator*(const QVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
        QVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational s(0);
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
            out[i] = s;
        }
        return out;
    }

    QMatrix operator*(const QMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
        QMatrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
            }
        return out;
    }

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Bareiss fraction-free elimination. The entries are cleared of
/// denominators row by row first, so every intermediate division is an
/// exact integer division.
inline Rational determinant(const QMatrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    std::vector<LatticeVector> a(n, LatticeVector(n));
    Rational scaleBack(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = denominatorLcm(m.row(i));
        scaleBack /= Rational(l);
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j) * Rational(l)).get_num();
    }

    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(a[n - 1][n - 1] * sign) * scaleBack;
}

/// The matrix with 1 + T_i on the diagonal and 1 everywhere else.
inline QMatrix assembleDiagonalPlusOnes(const QVector& t) {
    QMatrix m(t.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) m(i, j) = (i == j) ? Rational(1) + t[i] : Rational(1);
    return m;
}

/// Closed form (1 + sum 1/T_i) * prod T_i for det(assembleDiagonalPlusOnes(T)).
/// A zero T_i makes the closed form undefined; the assembled matrix is used instead.
inline Rational detDC(const QVector& t) {
    if (t.empty()) throw std::invalid_argument("detDC needs at least one entry");
    if (std::any_of(t.begin(), t.end(), [](const Rational& r) { return r == 0; }))
        return determinant(assembleDiagonalPlusOnes(t));
    Rational sum(1), prod(1);
    for (const auto& ti : t) {
        sum += Rational(1) / ti;
        prod *= ti;
    }
    return sum * prod;
}

struct RowReduction {
    QMatrix reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

inline RowReduction rowReduce(QMatrix m) {
    RowReduction out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const QMatrix& m) { return rowReduce(m).pivots.size(); }

/// Basis of {v : m v = 0}.
inline std::vector<QVector> nullspace(const QMatrix& m) {
    auto rr = rowReduce(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto c : rr.pivots) isPivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (isPivot[free]) continue;
        QVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact solution of m x = b; a singular m is a "degenerate-system" error.
inline QVector solveLinear(const QMatrix& m, const QVector& b) {
    if (!m.isSquare()) throw std::invalid_argument("solveLinear needs a square matrix");
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has the wrong dimension");
    const std::size_t n = m.rows();
    QMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto rr = rowReduce(std::move(aug));
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
        throw DomainError("degenerate-system", "matrix is singular");
    return rr.reduced.column(n);
}

inline QMatrix inverse(const QMatrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto rr = rowReduce(std::move(aug));
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
        throw DomainError("degenerate-system", "matrix is singular");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

/// Coefficients of p in the columns of m when p lies in their span
/// (columns need not be independent of p's ambient dimension); nullopt otherwise.
/// Solves the normal equations and verifies the result exactly.
inline std::optional<QVector> solveInSpan(const QMatrix& m, const QVector& p) {
    QMatrix mt = m.transposed();
    QMatrix gram = mt * m;
    QVector rhs = mt * p;
    QVector coeffs;
    try {
        coeffs = solveLinear(gram, rhs);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    if (m * coeffs != p) return std::nullopt;
    return coeffs;
}

// ---------------------------------------------------------------------------
// Integer matrices: Hermite normal form and unimodular reduction

/// Row-style Hermite normal form of an integer matrix under left
/// multiplication by GL(n, Z): row echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows are dropped.
inline IntMatrix hermiteNormalForm(IntMatrix a) {
    if (a.empty()) return a;
    const std::size_t rows = a.size(), cols = a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c among rows r..end until one nonzero entry remains.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == rows) break;
            std::swap(a[r], a[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows && a[r][c] != 0) {
            if (a[r][c] < 0)
                for (auto& e : a[r]) e = -e;
            for (std::size_t i = 0; i < r; ++i) {
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            }
            ++r;
        }
    }
    a.resize(r);
    return a;
}

/// A unimodular U with U v = (g, 0, ..., 0), g = gcd(v) >= 0.
inline IntMatrix unimodularColumnReducer(const LatticeVector& v) {
    const std::size_t n = v.size();
    IntMatrix u(n, LatticeVector(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    LatticeVector w = v;
    // Combine entry i into entry 0 with an extended-gcd 2x2 block.
    for (std::size_t i = 1; i < n; ++i) {
        if (w[i] == 0) continue;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w[0].get_mpz_t(), w[i].get_mpz_t());
        Integer a0 = w[0] / g, ai = w[i] / g;
        // [[s, t], [-ai, a0]] has determinant s*a0 + t*ai = 1.
        LatticeVector row0(n), rowi(n);
        for (std::size_t j = 0; j < n; ++j) {
            row0[j] = s * u[0][j] + t * u[i][j];
            rowi[j] = -ai * u[0][j] + a0 * u[i][j];
        }
        u[0] = std::move(row0);
        u[i] = std::move(rowi);
        w[0] = g;
        w[i] = 0;
    }
    if (w[0] < 0)
        for (auto& e : u[0]) e = -e;
    return u;
}

inline LatticeVector multiply(const IntMatrix& m, const LatticeVector& v) {
    LatticeVector out(m.size(), Integer(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw std::invalid_argument("dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

inline QMatrix toQ(const IntMatrix& m) {
    std::vector<QVector> rows;
    for (const auto& r : m) rows.push_back(toQ(r));
    return QMatrix::fromRows(rows);
}

}  // namespace toric_alpha
