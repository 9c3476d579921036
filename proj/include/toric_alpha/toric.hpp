#pragma once

// Toric log pairs (X, B) given by rays e_i and log discrepancies a_i = 1 - b_i,
// with K_X + B = sum -a_i E_i. Invariant divisors L = sum l_i E_i are handled
// through their moment polytopes.

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "toric_alpha/errors.hpp"
#include "toric_alpha/exact.hpp"
#include "toric_alpha/extended.hpp"
#include "toric_alpha/parallel.hpp"
#include "toric_alpha/polytope.hpp"
#include "toric_alpha/sylvester.hpp"

namespace toric_alpha {

using Cone = std::vector<std::size_t>;

struct ToricLogPair {
    std::size_t dim = 0;
    std::vector<LatticeVector> rays;
    QVector a;
    std::optional<std::vector<Cone>> maxCones;
};

struct InvariantDivisor {
    QVector l;
};

struct FiniteLinearSystem {
    InvariantDivisor divisor;
    std::vector<LatticeVector> A;
};

inline InvariantDivisor anticanonical(const ToricLogPair& pair) { return {pair.a}; }

namespace detail {

inline std::string renderVector(const LatticeVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + toString(v[i]);
    return s + ")";
}

inline Rational pairing(const QVector& m, const LatticeVector& e) { return dot(m, e); }

inline void checkDivisorSize(const ToricLogPair& pair, const InvariantDivisor& L) {
    if (L.l.size() != pair.rays.size())
        throw std::invalid_argument("divisor needs one coefficient per ray");
}

}  // namespace detail

/// □_L = {m : <m, e_i> + l_i >= 0}.
inline Polytope momentPolytope(const ToricLogPair& pair, const InvariantDivisor& L) {
    detail::checkDivisorSize(pair, L);
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < pair.rays.size(); ++i) hs.push_back({pair.rays[i], L.l[i]});
    return Polytope::fromHalfSpaces(pair.dim, std::move(hs));
}

inline Polytope momentPolytope(const ToricLogPair& pair) { return momentPolytope(pair, anticanonical(pair)); }

/// P = conv(e_i / a_i); requires every a_i > 0.
inline Polytope rayPolytope(const ToricLogPair& pair) {
    std::vector<QVector> pts;
    for (std::size_t i = 0; i < pair.rays.size(); ++i) {
        if (pair.a[i] <= 0) throw DomainError("zero-coefficient", "conv(e_i/a_i) needs every a_i > 0");
        pts.push_back(scale(Rational(1) / pair.a[i], toQ(pair.rays[i])));
    }
    return Polytope::fromVertices(pair.dim, std::move(pts));
}

// ---------------------------------------------------------------------------
// Fan data

/// psi with <psi, e_i> = l_i on the rays of the cone; nullopt when no such
/// linear function exists (L not Q-Cartier there).
inline std::optional<QVector> coneFunction(const ToricLogPair& pair, const Cone& cone, const QVector& l) {
    std::vector<QVector> rows;
    QVector rhs;
    for (std::size_t i : cone) {
        if (i >= pair.rays.size()) throw std::invalid_argument("cone refers to a missing ray");
        rows.push_back(toQ(pair.rays[i]));
        rhs.push_back(l[i]);
    }
    if (rows.empty() || rank(QMatrix::fromRows(rows)) < pair.dim)
        throw DomainError("cone-not-full-dimensional", "maximal cones must span N_R");
    return solveInSpan(QMatrix::fromRows(rows), rhs);
}

struct ValidationReport {
    bool nef = true;
    bool ample = true;
    std::vector<std::string> warnings;
};

inline const std::vector<Cone>& requireCones(const ToricLogPair& pair) {
    if (!pair.maxCones) throw DomainError("no-fan", "this check needs the maximal cones of the fan");
    return *pair.maxCones;
}

/// The points m_sigma with <m_sigma, e_i> = -l_i on each maximal cone.
inline std::vector<QVector> conePoints(const ToricLogPair& pair, const InvariantDivisor& L) {
    std::vector<QVector> out;
    QVector neg;
    for (const auto& x : L.l) neg.push_back(-x);
    for (const auto& cone : requireCones(pair)) {
        auto psi = coneFunction(pair, cone, neg);
        if (!psi) throw DomainError("not-q-cartier", "no linear function matches the divisor on a maximal cone");
        out.push_back(*psi);
    }
    return out;
}

inline bool isNef(const ToricLogPair& pair, const InvariantDivisor& L) {
    detail::checkDivisorSize(pair, L);
    auto pts = conePoints(pair, L);
    Polytope box = momentPolytope(pair, L);
    return std::all_of(pts.begin(), pts.end(), [&](const QVector& m) { return box.contains(m); });
}

/// Ample iff the vertices of □_L are exactly the cone points, one per cone.
inline bool isAmple(const ToricLogPair& pair, const InvariantDivisor& L) {
    detail::checkDivisorSize(pair, L);
    auto pts = conePoints(pair, L);
    Polytope box = momentPolytope(pair, L);
    if (!box.isFullDimensional()) return false;
    std::vector<QVector> distinct = pts;
    detail::sortUnique(distinct);
    return distinct.size() == pts.size() && distinct == box.vertices();
}

/// Structural checks. Throws for malformed rays or coefficients; a failed
/// nefness check is only reported.
inline ValidationReport validatePair(const ToricLogPair& pair) {
    if (pair.dim == 0) throw std::invalid_argument("dimension must be positive");
    if (pair.rays.size() != pair.a.size()) throw std::invalid_argument("need one coefficient per ray");
    for (const auto& e : pair.rays) {
        if (e.size() != pair.dim) throw std::invalid_argument("ray has the wrong dimension");
        if (isZero(e)) throw DomainError("zero-ray", "rays must be nonzero");
        if (!isPrimitive(e))
            throw DomainError("non-primitive-ray", "rays must be primitive",
                              {{"ray", detail::renderVector(e)},
                               {"suggestion", detail::renderVector(primitivePart(e).primitive)}});
    }
    for (const auto& ai : pair.a)
        if (ai < 0 || ai > 1)
            throw DomainError("coefficient-out-of-range", "log discrepancies must lie in [0,1]", {{"a", toString(ai)}});
    {
        std::vector<QVector> pts;
        for (const auto& e : pair.rays) pts.push_back(toQ(e));
        Polytope hull = Polytope::fromVertices(pair.dim, pts);
        if (!hull.isFullDimensional() || !hull.containsInRelativeInterior(QVector(pair.dim)))
            throw DomainError("incomplete", "the rays do not span N_R positively");
    }
    ValidationReport r;
    if (!pair.maxCones) return r;
    r.nef = isNef(pair, anticanonical(pair));
    r.ample = r.nef && isAmple(pair, anticanonical(pair));
    if (!r.nef) r.warnings.push_back("-K-B is not nef on the given fan");
    return r;
}

inline ToricLogPair makePair(std::size_t dim, std::vector<LatticeVector> rays, QVector a,
                             std::optional<std::vector<Cone>> cones = std::nullopt) {
    ToricLogPair p{dim, std::move(rays), std::move(a), std::move(cones)};
    validatePair(p);
    return p;
}

// ---------------------------------------------------------------------------
// Widths, fixed multiplicities and thresholds

struct DivisorProfile {
    Polytope box;
    QVector width;      // max over □_L of <., e_i> + l_i
    QVector fixedMult;  // min over □_L of <., e_i> + l_i
};

inline DivisorProfile divisorProfile(const ToricLogPair& pair, const InvariantDivisor& L) {
    DivisorProfile p{momentPolytope(pair, L), {}, {}};
    for (std::size_t i = 0; i < pair.rays.size(); ++i) {
        std::optional<Rational> lo, hi;
        for (const auto& v : p.box.vertices()) {
            Rational s = detail::pairing(v, pair.rays[i]) + L.l[i];
            if (!lo || s < *lo) lo = s;
            if (!hi || s > *hi) hi = s;
        }
        p.width.push_back(*hi);
        p.fixedMult.push_back(*lo);
    }
    return p;
}

inline Rational widthAt(const ToricLogPair& pair, const InvariantDivisor& L, std::size_t i) {
    return divisorProfile(pair, L).width.at(i);
}

inline Rational fixedMultAt(const ToricLogPair& pair, const InvariantDivisor& L, std::size_t i) {
    return divisorProfile(pair, L).fixedMult.at(i);
}

inline RationalOrInfinity threshold(const Rational& a, const Rational& w) {
    if (w == 0) return RationalOrInfinity::infinity();
    return Rational(a / w);
}

struct FiniteSystemGamma {
    RationalOrInfinity global;
    std::vector<RationalOrInfinity> perRay;
};

inline FiniteSystemGamma gammaFiniteSystem(const ToricLogPair& pair, const FiniteLinearSystem& sys) {
    detail::checkDivisorSize(pair, sys.divisor);
    if (sys.A.empty()) throw DomainError("empty-system", "the linear system has no members");
    const auto& l = sys.divisor.l;
    for (const auto& m : sys.A) {
        if (m.size() != pair.dim) throw std::invalid_argument("exponent has the wrong dimension");
        for (std::size_t i = 0; i < pair.rays.size(); ++i)
            if (dot(m, pair.rays[i]) + l[i] < 0)
                throw DomainError("not-in-polytope", "exponent lies outside the moment polytope",
                                  {{"m", detail::renderVector(m)}});
    }
    FiniteSystemGamma g;
    for (std::size_t i = 0; i < pair.rays.size(); ++i) {
        std::optional<Rational> hi;
        for (const auto& m : sys.A) {
            Rational s = Rational(dot(m, pair.rays[i])) + l[i];
            if (!hi || s > *hi) hi = s;
        }
        g.perRay.push_back(threshold(pair.a[i], *hi));
        g.global = minOf(g.global, g.perRay.back());
    }
    return g;
}

inline RationalOrInfinity alphaFromProfile(const ToricLogPair& pair, const DivisorProfile& prof) {
    RationalOrInfinity best;
    for (std::size_t i = 0; i < pair.rays.size(); ++i) best = minOf(best, threshold(pair.a[i], prof.width[i]));
    return best;
}

inline RationalOrInfinity alphaInvariant(const ToricLogPair& pair, const InvariantDivisor& L) {
    return alphaFromProfile(pair, divisorProfile(pair, L));
}

inline RationalOrInfinity lctInvariant(const ToricLogPair& pair, const InvariantDivisor& D) {
    detail::checkDivisorSize(pair, D);
    RationalOrInfinity best;
    for (std::size_t i = 0; i < D.l.size(); ++i) {
        if (D.l[i] < 0) throw DomainError("not-effective", "the divisor has a negative coefficient");
        if (D.l[i] > 0) best = minOf(best, Rational(pair.a[i] / D.l[i]));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Log discrepancies

/// -h(e) = -min over □_{-K-B} of <., e>; homogeneous in e.
inline Rational negSupport(const Polytope& box, const LatticeVector& e) {
    std::optional<Rational> lo;
    for (const auto& v : box.vertices()) {
        Rational s = detail::pairing(v, e);
        if (!lo || s < *lo) lo = s;
    }
    return -*lo;
}

struct LogDiscrepancy {
    Rational value;
    LatticeVector valuation;  // primitive part of the input
    bool rescaled = false;
};

inline LogDiscrepancy logDiscrepancy(const ToricLogPair& pair, const LatticeVector& e) {
    if (e.size() != pair.dim) throw std::invalid_argument("vector has the wrong dimension");
    if (isZero(e)) throw DomainError("zero-vector", "log discrepancy needs a nonzero vector");
    auto pp = primitivePart(e);
    return {negSupport(momentPolytope(pair), pp.primitive), pp.primitive, pp.multiplicity != 1};
}

/// Minimal log discrepancy: smallest -h over nonzero lattice points of the
/// closed body (min a) * conv(e_i / a_i), where the infimum is attained.
/// Without -K-B nef this is the polytope quantity, which can undercut the
/// valuative mld (F_3 gives 2/3).
inline Rational mld(const ToricLogPair& pair) {
    Rational amin = *std::min_element(pair.a.begin(), pair.a.end());
    if (amin == 0) return Rational(0);
    Polytope box = momentPolytope(pair);
    Polytope body = scaled(rayPolytope(pair), amin);
    std::optional<Rational> best;
    for (const auto& e : latticePoints(body, LatticeMode::Closed)) {
        if (isZero(e)) continue;
        Rational v = negSupport(box, e);
        if (!best || v < *best) best = v;
    }
    if (!best) throw std::logic_error("mld body contains no ray");
    return *best;
}

inline Rational gammaAnticanonical(const ToricLogPair& pair) {
    for (const auto& ai : pair.a)
        if (ai == 0) return Rational(0);
    return gammaPoint(QVector(pair.dim), momentPolytope(pair));
}

// ---------------------------------------------------------------------------
// Global checks

struct MobileCheck {
    RationalOrInfinity lhs;  // alpha invariant
    RationalOrInfinity rhs;  // sup{t : t(□_L - □_L) in □}
    bool pass = false;
};

inline MobileCheck mobileGammaCheck(const ToricLogPair& pair, const InvariantDivisor& L) {
    auto prof = divisorProfile(pair, L);
    for (std::size_t i = 0; i < prof.fixedMult.size(); ++i)
        if (prof.fixedMult[i] != 0)
            throw DomainError("not-mobile", "the divisor has a fixed component",
                              {{"ray", std::to_string(i)}, {"multiplicity", toString(prof.fixedMult[i])}});
    MobileCheck r;
    r.lhs = alphaFromProfile(pair, prof);
    // t(□_L - □_L) lies in □ iff t * width(□_L; e_i) <= a_i for every ray.
    for (std::size_t i = 0; i < pair.rays.size(); ++i)
        r.rhs = minOf(r.rhs, threshold(pair.a[i], width(prof.box, pair.rays[i])));
    r.pass = r.lhs == r.rhs;
    return r;
}

/// (L^d) = d! vol(□_L).
inline Rational selfIntersection(const Polytope& box) {
    return Rational(factorial(box.dim())) * normalizedVolume(box);
}

struct SLCheck {
    RationalOrInfinity gamma;
    Rational volume;  // (L^d)
    Rational lhs;     // gamma^d (L^d)
    Rational rhs;     // d^d
    bool vacuous = false;
    bool nefChecked = false;
    bool pass = false;
};

inline SLCheck slInequalityCheck(const ToricLogPair& pair, const InvariantDivisor& L) {
    SLCheck r;
    if (pair.maxCones) {
        if (!isNef(pair, L)) throw DomainError("not-nef", "the divisor is not nef on the given fan");
        r.nefChecked = true;
    }
    auto prof = divisorProfile(pair, L);
    r.gamma = alphaFromProfile(pair, prof);
    r.volume = selfIntersection(prof.box);
    r.rhs = power(Rational(static_cast<long>(pair.dim)), pair.dim);
    if (r.volume == 0 || r.gamma.isInfinite()) {
        r.vacuous = true;
        r.pass = true;
        return r;
    }
    r.lhs = power(r.gamma.value(), pair.dim) * r.volume;
    r.pass = r.lhs <= r.rhs;
    return r;
}

struct GlobalBoundReport {
    unsigned long q = 1;
    Rational mld;
    bool applicable = false;  // mld >= 1/q
    Rational gamma;
    Rational gammaBound;
    bool gammaPass = false;
    bool equality = false;
    Rational volume;  // (-K-B)^d
    Rational volumeBound;
    bool volumePass = false;

    bool pass() const { return !applicable || (gammaPass && volumePass); }
};

inline GlobalBoundReport gbAndVbChecks(const ToricLogPair& pair, unsigned long q) {
    if (q == 0) throw std::invalid_argument("q must be positive");
    GlobalBoundReport r;
    r.q = q;
    r.mld = mld(pair);
    r.applicable = r.mld >= Rational(1, q);
    if (!r.applicable) return r;
    const unsigned long d = pair.dim;
    r.gamma = gammaAnticanonical(pair);
    r.gammaBound = gammaBound(d, q);
    r.gammaPass = r.gamma >= r.gammaBound;
    r.equality = r.gamma == r.gammaBound;
    r.volume = selfIntersection(momentPolytope(pair));
    r.volumeBound = power(Rational(static_cast<long>(d)) / Rational(q) * Rational(sylvesterU(d + 1, q)), d);
    r.volumePass = r.volume <= r.volumeBound;
    return r;
}

// ---------------------------------------------------------------------------
// Products

inline ToricLogPair productPair(const ToricLogPair& p1, const ToricLogPair& p2) {
    ToricLogPair p;
    p.dim = p1.dim + p2.dim;
    for (const auto& e : p1.rays) {
        LatticeVector v = e;
        v.resize(p.dim, Integer(0));
        p.rays.push_back(std::move(v));
    }
    for (const auto& f : p2.rays) {
        LatticeVector v(p1.dim, Integer(0));
        v.insert(v.end(), f.begin(), f.end());
        p.rays.push_back(std::move(v));
    }
    p.a = p1.a;
    p.a.insert(p.a.end(), p2.a.begin(), p2.a.end());
    if (p1.maxCones && p2.maxCones) {
        std::vector<Cone> cones;
        for (const auto& s : *p1.maxCones)
            for (const auto& t : *p2.maxCones) {
                Cone c = s;
                for (std::size_t j : t) c.push_back(p1.rays.size() + j);
                cones.push_back(std::move(c));
            }
        p.maxCones = std::move(cones);
    }
    return p;
}

inline InvariantDivisor productDivisor(const InvariantDivisor& L1, const InvariantDivisor& L2) {
    InvariantDivisor L = L1;
    L.l.insert(L.l.end(), L2.l.begin(), L2.l.end());
    return L;
}

struct ProductCheck {
    RationalOrInfinity alpha1, alpha2, alphaProduct;
    bool pass = false;
};

inline ProductCheck productAlphaCheck(const ToricLogPair& p1, const InvariantDivisor& L1, const ToricLogPair& p2,
                                      const InvariantDivisor& L2) {
    ProductCheck r;
    r.alpha1 = alphaInvariant(p1, L1);
    r.alpha2 = alphaInvariant(p2, L2);
    r.alphaProduct = alphaInvariant(productPair(p1, p2), productDivisor(L1, L2));
    r.pass = r.alphaProduct == minOf(r.alpha1, r.alpha2);
    return r;
}

// ---------------------------------------------------------------------------
// The sharp family

/// Rays e_0 = -sum_i (u_{d+1}/(q(1+u_i))) e_i, e_1..e_d standard, with
/// a_0 = 1/q and a_i = 1; cones are all d-subsets.
inline ToricLogPair extremalPair(unsigned long d, unsigned long q) {
    if (d == 0 || q == 0) throw std::invalid_argument("d and q must be positive");
    SylvesterTable t(q);
    ToricLogPair p;
    p.dim = d;
    LatticeVector e0(d);
    for (unsigned long i = 0; i < d; ++i) e0[i] = -(t.u(d + 1) / (Integer(q) * (1 + t.u(i + 1))));
    p.rays.push_back(e0);
    for (unsigned long i = 0; i < d; ++i) {
        LatticeVector e(d, Integer(0));
        e[i] = 1;
        p.rays.push_back(e);
    }
    p.a.assign(d + 1, Rational(1));
    p.a[0] = Rational(1, q);
    std::vector<Cone> cones;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        Cone c;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(c);
    }
    p.maxCones = std::move(cones);
    return p;
}

// ---------------------------------------------------------------------------
// Finiteness census of epsilon-lc toric Fano pairs

struct FanoMember {
    std::vector<LatticeVector> rays;  // counterclockwise
    QVector a;
    IntMatrix canonical;
};

struct FanoCensus {
    std::size_t d = 0;
    Rational epsilon;
    unsigned long q = 1;
    Rational volumeBound;  // on vol(P - P)
    long radius = 0;
    std::size_t candidates = 0;  // complete fans reaching the exact test
    std::vector<FanoMember> members;
};

inline constexpr long kFanoRadiusLimit = 72;

namespace detail {

using V2 = std::array<std::int64_t, 2>;

inline std::int64_t cross2(const V2& a, const V2& b) { return a[0] * b[1] - a[1] * b[0]; }

inline std::int64_t gcd2(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline std::int64_t ceilDiv(std::int64_t a, std::int64_t b) { return -floorDiv(-a, b); }

/// s with cross(t, s) = 1 for primitive t.
inline V2 unimodularPartner(const V2& t) {
    // Extended Euclid: t0 * u + t1 * v = 1, then s = (-v, u).
    std::int64_t r0 = t[0], r1 = t[1], u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        std::int64_t qt = floorDiv(r0, r1);
        std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
        std::tie(u0, u1) = std::make_pair(u1, u0 - qt * u1);
        std::tie(v0, v1) = std::make_pair(v1, v0 - qt * v1);
    }
    if (r0 < 0) {
        u0 = -u0;
        v0 = -v0;
    }
    return {-v0, u0};
}

inline bool angleLess(const V2& a, const V2& b) {
    auto half = [](const V2& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
    if (half(a) != half(b)) return half(a) < half(b);
    return cross2(a, b) > 0;
}

/// True when conv({0} and pts) has no nonzero lattice point in its interior.
inline bool hullLatticeFree(std::vector<V2> pts) {
    pts.push_back({0, 0});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return true;
    std::vector<V2> hull(2 * pts.size());
    std::size_t k = 0;
    auto turn = [](const V2& o, const V2& a, const V2& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) return true;
    std::int64_t ylo = hull[0][1], yhi = ylo;
    for (const auto& p : hull) {
        ylo = std::min(ylo, p[1]);
        yhi = std::max(yhi, p[1]);
    }
    // Each row meets the open hull in an open x-interval cut out by the edges.
    for (std::int64_t y = ylo + 1; y < yhi; ++y) {
        std::int64_t lo = INT64_MIN, hi = INT64_MAX;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const V2& a = hull[i];
            const V2& b = hull[(i + 1) % hull.size()];
            // turn(a, b, (x, y)) = cx * x + c0 > 0
            std::int64_t cx = -(b[1] - a[1]);
            std::int64_t c0 = (b[0] - a[0]) * (y - a[1]) + (b[1] - a[1]) * a[0];
            if (cx > 0) {
                lo = std::max(lo, floorDiv(-c0, cx) + 1);
            } else if (cx < 0) {
                hi = std::min(hi, ceilDiv(c0, -cx) - 1);
            } else if (c0 <= 0) {
                lo = 1;
                hi = 0;
            }
        }
        for (std::int64_t x = lo; x <= hi; ++x)
            if (x != 0 || y != 0) return false;
    }
    return true;
}

inline LatticeVector toLV(const V2& v) { return {Integer(static_cast<long>(v[0])), Integer(static_cast<long>(v[1]))}; }

/// Lexicographically least HNF over cyclic relabelings and both orientations.
inline IntMatrix canonicalFan(const std::vector<LatticeVector>& rays) {
    const std::size_t n = rays.size();
    std::optional<IntMatrix> best;
    for (int dir = 0; dir < 2; ++dir)
        for (std::size_t s = 0; s < n; ++s) {
            IntMatrix m(rays.front().size(), LatticeVector(n));
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t idx = dir == 0 ? (s + j) % n : (s + n - j) % n;
                for (std::size_t r = 0; r < m.size(); ++r) m[r][j] = rays[idx][r];
            }
            IntMatrix h = hermiteNormalForm(m);
            if (!best || h < *best) best = std::move(h);
        }
    return *best;
}

inline std::vector<Cone> cyclicCones(std::size_t n) {
    std::vector<Cone> cones;
    if (n == 2) return {{0}, {1}};
    for (std::size_t i = 0; i < n; ++i) cones.push_back({i, (i + 1) % n});
    return cones;
}

/// First coefficient vector on the grid {k/m} (k/m >= epsilon) admitting
/// mld >= epsilon with -K-B nef.
inline std::optional<QVector> admissibleCoefficients(std::size_t dim, const std::vector<LatticeVector>& rays,
                                                     const Rational& epsilon, unsigned long m) {
    const std::size_t n = rays.size();
    std::vector<Rational> grid;
    for (unsigned long k = m; k >= 1; --k)
        if (Rational(k, m) >= epsilon) grid.push_back(Rational(k, m));
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        ToricLogPair p{dim, rays, {}, cyclicCones(n)};
        for (std::size_t i = 0; i < n; ++i) p.a.push_back(grid[idx[i]]);
        if (mld(p) >= epsilon && isNef(p, anticanonical(p))) return p.a;
        std::size_t i = n;
        while (i > 0 && idx[i - 1] + 1 == grid.size()) idx[--i] = 0;
        if (i == 0) return std::nullopt;
        ++idx[i - 1];
    }
}

}  // namespace detail

/// Enumerates complete fans whose rays fit the volume bound and keeps those
/// admitting coefficients with mld >= epsilon and -K-B nef, one per
/// isomorphism class. d is 1 or 2.
inline FanoCensus fanoFinitenessCensus(std::size_t d, const Rational& epsilon) {
    if (epsilon <= 0 || epsilon > 1) throw DomainError("epsilon-out-of-range", "epsilon must lie in (0,1]");
    if (d != 1 && d != 2) throw DomainError("unsupported-dimension", "the fan census covers d = 1 and d = 2");
    FanoCensus c;
    c.d = d;
    c.epsilon = epsilon;
    c.q = ceilOf(Rational(1) / epsilon).get_ui();
    Rational gamma = gammaBound(d, c.q);
    c.volumeBound = power(Rational(2) / (gamma * epsilon), d);
    c.radius = floorOf(c.volumeBound / 2).get_si();

    if (d == 1) {
        // The only complete fan in N = Z.
        std::vector<LatticeVector> rays{{Integer(1)}, {Integer(-1)}};
        c.candidates = 1;
        if (auto a = detail::admissibleCoefficients(1, rays, epsilon, c.q))
            c.members.push_back({rays, *a, detail::canonicalFan(rays)});
        return c;
    }
    if (c.radius > kFanoRadiusLimit)
        throw DomainError("guard-exceeded", "the ray box is too large to enumerate",
                          {{"radius", std::to_string(c.radius)}, {"limit", std::to_string(kFanoRadiusLimit)}});
    // Below the guard only epsilon = 1 remains (q = 2 already gives radius 882).
    // Then a_i = 1, and mld >= 1 says C = conv(rays) has no interior lattice
    // point but 0. So every ray lies on the boundary of C, and a fan is a
    // lattice polygon C together with a set of boundary points containing
    // its vertices.
    if (epsilon != 1) throw std::logic_error("fan census below the guard expects epsilon = 1");

    using detail::V2;
    const std::int64_t R = c.radius;
    // Twice area(C) is at most vol(C - C) / 2.
    const std::int64_t detBudget = floorOf(c.volumeBound / 2).get_si();
    auto turn = [](const V2& o, const V2& a, const V2& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    auto emptyEdge = [](const V2& a, const V2& b) {
        std::int64_t det = detail::cross2(a, b);
        return det > 0 && det == detail::gcd2(b[0] - a[0], b[1] - a[1]);
    };

    // Vertex (1,0) first; a shear puts the next vertex at (p, k), 0 <= p < k.
    const V2 first{1, 0};
    std::vector<V2> seeds;
    for (std::int64_t k = 1; k <= std::min(R, detBudget); ++k)
        for (std::int64_t p = 0; p < k; ++p)
            if (detail::gcd2(p, k) == 1 && emptyEdge(first, {p, k})) seeds.push_back({p, k});

    using Polygon = std::vector<V2>;
    auto explore = [&](std::size_t si) -> std::vector<Polygon> {
        std::vector<Polygon> out;
        Polygon verts{first, seeds[si]};
        std::function<void(std::int64_t)> rec = [&](std::int64_t used) {
            const V2 tail = verts.back();
            const V2 prev = verts[verts.size() - 2];
            if (verts.size() >= 3 && emptyEdge(tail, first) && used + detail::cross2(tail, first) <= detBudget &&
                turn(prev, tail, first) > 0 && turn(tail, first, verts[1]) > 0)
                out.push_back(verts);
            // An empty triangle (0, t, e) with cross(t, e) = k forces
            // e = k s + (1 + k m) t, where cross(t, s) = 1.
            const V2 sv = detail::unimodularPartner(tail);
            for (std::int64_t k = 1; used + k <= detBudget; ++k) {
                std::int64_t mlo = INT64_MIN, mhi = INT64_MAX;
                for (int ci = 0; ci < 2; ++ci) {
                    std::int64_t base = k * sv[ci] + tail[ci], slope = k * tail[ci];
                    if (slope == 0) {
                        if (base < -R || base > R) mlo = 1, mhi = 0;
                    } else if (slope > 0) {
                        mlo = std::max(mlo, detail::ceilDiv(-R - base, slope));
                        mhi = std::min(mhi, detail::floorDiv(R - base, slope));
                    } else {
                        mlo = std::max(mlo, detail::ceilDiv(R - base, slope));
                        mhi = std::min(mhi, detail::floorDiv(-R - base, slope));
                    }
                }
                for (std::int64_t m = mlo; m <= mhi; ++m) {
                    V2 e{k * sv[0] + (1 + k * m) * tail[0], k * sv[1] + (1 + k * m) * tail[1]};
                    if (!detail::angleLess(tail, e) || turn(prev, tail, e) <= 0) continue;
                    if (turn(tail, e, first) <= 0 || turn(first, verts[1], e) <= 0) continue;
                    verts.push_back(e);
                    if (detail::hullLatticeFree(verts)) rec(used + k);
                    verts.pop_back();
                }
            }
        };
        rec(detail::cross2(first, seeds[si]));
        return out;
    };
    auto found = parallelMap<std::vector<Polygon>>(seeds.size(), explore);

    std::map<IntMatrix, FanoMember> classes;
    for (const auto& polys : found)
        for (const auto& poly : polys) {
            // Boundary lattice points in counterclockwise order; vertices flagged.
            std::vector<V2> boundary;
            std::vector<std::size_t> optional;
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const V2& a = poly[i];
                const V2& b = poly[(i + 1) % poly.size()];
                std::int64_t g = detail::gcd2(b[0] - a[0], b[1] - a[1]);
                for (std::int64_t j = 0; j < g; ++j) {
                    if (j > 0) optional.push_back(boundary.size());
                    boundary.push_back({a[0] + j * (b[0] - a[0]) / g, a[1] + j * (b[1] - a[1]) / g});
                }
            }
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << optional.size()); ++mask) {
                std::vector<bool> keep(boundary.size(), true);
                for (std::size_t j = 0; j < optional.size(); ++j) keep[optional[j]] = (mask >> j) & 1;
                std::vector<LatticeVector> rays;
                for (std::size_t j = 0; j < boundary.size(); ++j)
                    if (keep[j]) rays.push_back(detail::toLV(boundary[j]));
                IntMatrix key = detail::canonicalFan(rays);
                if (classes.count(key)) continue;
                ++c.candidates;
                if (auto a = detail::admissibleCoefficients(2, rays, epsilon, c.q))
                    classes.emplace(key, FanoMember{rays, *a, key});
                else
                    classes.emplace(key, FanoMember{});
            }
        }
    for (auto& [key, m] : classes)
        if (!m.rays.empty()) c.members.push_back(std::move(m));
    return c;
}

inline ToricLogPair memberPair(const FanoCensus& c, const FanoMember& m) {
    return {c.d, m.rays, m.a, detail::cyclicCones(m.rays.size())};
}

}  // namespace toric_alpha
