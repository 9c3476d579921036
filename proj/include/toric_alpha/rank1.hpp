#pragma once

// Toric log Fano pairs of Picard rank one, encoded by the relation
// sum x_i e_i = 0 (x barycentric, q x primitive) and log discrepancies a_i.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "toric_alpha/errors.hpp"
#include "toric_alpha/exact.hpp"
#include "toric_alpha/polytope.hpp"
#include "toric_alpha/sylvester.hpp"
#include "toric_alpha/toric.hpp"

namespace toric_alpha {

struct RankOneFano {
    std::size_t d = 0;
    QVector x;  // d+1 positive, summing to 1
    QVector a;
    Integer q;          // least q with q x integral
    QVector w;          // (sum a x) / x_j
    QVector gamma;      // a_j x_j / sum a x
    LatticeVector n;    // primitivity indices

    Rational weightedSum() const {
        Rational s(0);
        for (std::size_t i = 0; i < x.size(); ++i) s += a[i] * x[i];
        return s;
    }
};

inline RankOneFano fromBarycentric(QVector x, QVector a) {
    for (auto& v : x) v.canonicalize();
    for (auto& v : a) v.canonicalize();
    if (x.size() < 2 || x.size() != a.size()) throw std::invalid_argument("need d+1 >= 2 matching entries for x and a");
    Rational sum(0);
    for (const auto& xi : x) {
        if (xi <= 0) throw DomainError("non-positive", "barycentric coordinates must be positive", {{"x", toString(xi)}});
        sum += xi;
    }
    if (sum != 1) throw DomainError("bad-sum", "barycentric coordinates must sum to 1", {{"sum", toString(sum)}});
    bool anyPositive = false;
    for (const auto& ai : a) {
        if (ai < 0 || ai > 1)
            throw DomainError("coefficient-out-of-range", "log discrepancies must lie in [0,1]", {{"a", toString(ai)}});
        if (ai > 0) anyPositive = true;
    }
    if (!anyPositive) throw DomainError("coefficient-out-of-range", "log discrepancies must not all vanish");

    RankOneFano f;
    f.d = x.size() - 1;
    f.x = x;
    f.a = a;
    f.q = denominatorLcm(x);
    LatticeVector qx = toLattice(scale(Rational(f.q), x));
    Integer all = contentOf(qx);
    for (std::size_t i = 0; i < qx.size(); ++i) {
        LatticeVector rest;
        for (std::size_t j = 0; j < qx.size(); ++j)
            if (j != i) rest.push_back(qx[j]);
        f.n.push_back(contentOf(rest) / all);
        if (f.n.back() != 1)
            throw DomainError("not-primitive", "a ray is not primitive, so the pair has a nontrivial toric cover",
                              {{"index", std::to_string(i)}, {"n", toString(f.n.back())}});
    }
    Rational s = f.weightedSum();
    for (std::size_t j = 0; j < x.size(); ++j) {
        f.w.push_back(s / x[j]);
        f.gamma.push_back(a[j] * x[j] / s);
    }
    return f;
}

/// N = Z^{d+1} / Z(qx): a unimodular U with U(qx) = e_0 maps the standard
/// basis to columns whose last d rows are the rays.
inline ToricLogPair toToricPair(const RankOneFano& f) {
    LatticeVector qx = toLattice(scale(Rational(f.q), f.x));
    IntMatrix u = unimodularColumnReducer(qx);
    ToricLogPair p;
    p.dim = f.d;
    for (std::size_t i = 0; i <= f.d; ++i) {
        LatticeVector e;
        for (std::size_t r = 1; r <= f.d; ++r) e.push_back(u[r][i]);
        if (!isPrimitive(e)) throw std::logic_error("constructed ray is not primitive");
        p.rays.push_back(std::move(e));
    }
    p.a = f.a;
    std::vector<Cone> cones;
    for (std::size_t skip = 0; skip <= f.d; ++skip) {
        Cone c;
        for (std::size_t i = 0; i <= f.d; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(std::move(c));
    }
    p.maxCones = std::move(cones);
    return p;
}

struct AlphaCartier {
    Rational alpha;
    Integer r;  // least r with r a_i, r w_i integral
};

inline AlphaCartier alphaAndCartier(const RankOneFano& f) {
    AlphaCartier out{*std::min_element(f.gamma.begin(), f.gamma.end()), Integer(1)};
    out.r = lcmOf(denominatorLcm(f.a), denominatorLcm(f.w));
    return out;
}

/// Log discrepancy of the point sum_i y_i e_i, with y = {kx}.
inline Rational fractionalDiscrepancy(const RankOneFano& f, const QVector& y) {
    Rational s(0);
    std::optional<Rational> lo;
    for (std::size_t i = 0; i < y.size(); ++i) {
        s += f.a[i] * y[i];
        Rational t = f.w[i] * y[i];
        if (!lo || t < *lo) lo = t;
    }
    return s - *lo;
}

inline QVector fractionalMultiple(const QVector& x, const Integer& k) {
    QVector y;
    for (const auto& xi : x) y.push_back(fractionalPart(Rational(xi * Rational(k))));
    return y;
}

inline bool sumsToOne(const QVector& y) {
    Rational s(0);
    for (const auto& v : y) s += v;
    return s == 1;
}

/// Lattice points of conv(e_i) besides the rays are sum {kx_i} e_i with
/// sum {kx_i} = 1; k runs over one period, 2..q.
inline Rational mldScan(const RankOneFano& f) {
    Rational best = *std::min_element(f.a.begin(), f.a.end());
    if (best == 0) return best;
    for (Integer k = 2; k <= f.q; ++k) {
        QVector y = fractionalMultiple(f.x, k);
        if (!sumsToOne(y) || y == f.x) continue;
        best = std::min(best, fractionalDiscrepancy(f, y));
    }
    return best;
}

inline void checkEpsilon(const RankOneFano& f, const Rational& epsilon) {
    if (epsilon <= 0 || epsilon > *std::min_element(f.a.begin(), f.a.end()))
        throw DomainError("epsilon-out-of-range", "epsilon must lie in (0, min a_i]", {{"epsilon", toString(epsilon)}});
}

/// Vertices Q_i = (1 - eps/a_i) x + (eps/a_i) P_i of S_eps(x).
inline std::vector<QVector> shrunkSimplex(const RankOneFano& f, const Rational& epsilon) {
    std::vector<QVector> q;
    for (std::size_t i = 0; i <= f.d; ++i) {
        Rational t = epsilon / f.a[i];
        QVector p(f.d + 1, Rational(0));
        p[i] = 1;
        q.push_back(add(scale(Rational(1) - t, f.x), scale(t, p)));
    }
    return q;
}

/// True iff int S_eps(x) holds no fractional multiple {kx} besides x.
inline bool mldAtLeastGeometric(const RankOneFano& f, const Rational& epsilon) {
    checkEpsilon(f, epsilon);
    auto verts = shrunkSimplex(f, epsilon);
    QVector recombined(f.d + 1, Rational(0));
    for (std::size_t i = 0; i <= f.d; ++i) recombined = add(recombined, scale(f.gamma[i], verts[i]));
    if (recombined != f.x) throw std::logic_error("x is not the gamma-combination of the shrunk simplex");
    for (Integer k = 1; k <= f.q; ++k) {
        QVector y = fractionalMultiple(f.x, k);
        if (!sumsToOne(y) || y == f.x) continue;
        auto bary = barycentricCoordinates(verts, y);
        if (!bary) continue;
        if (std::all_of(bary->begin(), bary->end(), [](const Rational& c) { return c > 0; })) return false;
    }
    return true;
}

/// z in N^{d+1} with max_j w_j z_j - sum a_i z_i in (0, eps). Such z equals
/// floor((1+|z|) x), so totals 1..q-1 suffice.
inline std::optional<LatticeVector> existsZCriterion(const RankOneFano& f, const Rational& epsilon) {
    checkEpsilon(f, epsilon);
    for (Integer total = 1; total < f.q; ++total) {
        LatticeVector z;
        Integer sum(0);
        for (const auto& xi : f.x) {
            z.push_back(floorOf(xi * Rational(total + 1)));
            sum += z.back();
        }
        if (sum != total) continue;
        std::optional<Rational> hi;
        Rational az(0);
        for (std::size_t j = 0; j < z.size(); ++j) {
            Rational t = f.w[j] * Rational(z[j]);
            if (!hi || t > *hi) hi = t;
            az += f.a[j] * Rational(z[j]);
        }
        Rational v = *hi - az;
        if (v > 0 && v < epsilon) return z;
    }
    return std::nullopt;
}

/// (-q(K+B))^d computed from the moment polytope of the realized pair.
inline Rational scaledVolume(const RankOneFano& f, unsigned long q) {
    ToricLogPair p = toToricPair(f);
    return power(Rational(q), f.d) * selfIntersection(momentPolytope(p));
}

/// The sharp pair: relation e_0 + sum_i u_{d+1}/(q(1+u_i)) e_i = 0 with
/// a_0 = 1/q, other a_i = 1. Its defining properties are checked on return.
inline RankOneFano extremalExample(unsigned long d, unsigned long q) {
    if (d == 0 || q == 0) throw std::invalid_argument("d and q must be positive");
    SylvesterTable t(q);
    QVector rel{Rational(1)};
    for (unsigned long i = 1; i <= d; ++i) rel.push_back(Rational(t.u(d + 1) / (Integer(q) * (1 + t.u(i)))));
    Rational total(0);
    for (const auto& r : rel) total += r;
    QVector x = scale(Rational(1) / total, rel);
    QVector a(d + 1, Rational(1));
    a[0] = Rational(1, q);
    RankOneFano f = fromBarycentric(x, a);

    if (mldScan(f) != Rational(1, q)) throw std::logic_error("extremal example: mld is not 1/q");
    if (alphaAndCartier(f).alpha != gammaBound(d, q)) throw std::logic_error("extremal example: alpha is not q/u");
    for (std::size_t i = 0; i <= d; ++i)
        if (!isIntegral(QVector{Rational(Rational(q) * f.a[i]), Rational(Rational(q) * f.w[i])}))
            throw std::logic_error("extremal example: -q(K+B) is not Cartier");
    if (scaledVolume(f, q) != Rational(t.u(d + 1)) / Rational(q))
        throw std::logic_error("extremal example: volume is not u/q");
    return f;
}

}  // namespace toric_alpha
