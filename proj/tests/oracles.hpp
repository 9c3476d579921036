#pragma once

// Independent brute-force oracles used by the test suites. Nothing here
// calls into the algorithm it is used to check.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "toric_alpha/exact.hpp"

namespace oracle {

using toric_alpha::Integer;
using toric_alpha::LatticeVector;
using toric_alpha::QMatrix;
using toric_alpha::QVector;
using toric_alpha::Rational;

/// Laplace expansion along the first row.
inline Rational cofactorDeterminant(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rational total(0);
    for (std::size_t j = 0; j < n; ++j) {
        QMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Rational term = m(0, j) * cofactorDeterminant(minor);
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

/// Calls f on every z in N^d with 1 <= |z| <= maxTotal, by increasing |z|.
inline void forEachNonnegative(std::size_t d, long maxTotal, const std::function<bool(const std::vector<long>&)>& f) {
    std::vector<long> z(d, 0);
    std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) -> bool {
        if (i + 1 == d) {
            z[i] = left;
            return f(z);
        }
        for (long v = 0; v <= left; ++v) {
            z[i] = v;
            if (!rec(i + 1, left - v)) return false;
        }
        return true;
    };
    for (long total = 1; total <= maxTotal; ++total)
        if (!rec(0, total)) return;
}

/// Brute force for  c_j z_j / (1 + sum c_i z_i) < x_j  for all j.
inline std::optional<std::vector<long>> bruteForceLHN(const QVector& x, const QVector& c, long maxTotal) {
    std::optional<std::vector<long>> found;
    forEachNonnegative(x.size(), maxTotal, [&](const std::vector<long>& z) {
        Rational denom(1);
        for (std::size_t i = 0; i < z.size(); ++i) denom += c[i] * Rational(z[i]);
        for (std::size_t j = 0; j < z.size(); ++j)
            if (!(c[j] * Rational(z[j]) / denom < x[j])) return true;
        found = z;
        return false;
    });
    return found;
}

/// Random rational in [lo, hi] with denominator at most maxDen.
inline Rational randomRational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long maxDen) {
    std::uniform_int_distribution<long> denDist(1, maxDen);
    long den = denDist(rng);
    Integer a = toric_alpha::ceilOf(lo * Rational(den));
    Integer b = toric_alpha::floorOf(hi * Rational(den));
    if (a > b) return lo;
    std::uniform_int_distribution<long> numDist(a.get_si(), b.get_si());
    return toric_alpha::makeRational(Integer(numDist(rng)), Integer(den));
}

inline long randomInt(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace oracle
