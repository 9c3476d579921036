#pragma once

// Sharp lower bounds for gamma(0 in S) on lattice simplices and polytopes,
// the equality classification, and a brute-force census for plane triangles.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <optional>
#include <random>
#include <vector>

#include "toric_alpha/errors.hpp"
#include "toric_alpha/exact.hpp"
#include "toric_alpha/parallel.hpp"
#include "toric_alpha/polytope.hpp"
#include "toric_alpha/sylvester.hpp"

namespace toric_alpha {

struct SSReport {
    QVector barycentric;  // of the origin, in the input vertex order
    Rational gamma;
    Rational bound;
    bool boundHolds = false;
    bool equality = false;
    std::optional<IntMatrix> witness;  // sends the non-minimal vertices to e_1..e_d
};

/// Sorted barycentric profile of the extremal simplex:
/// (q/u_{d+1,q}, q/(1+u_{d,q}), ..., q/(1+u_{1,q})).
inline QVector extremalProfile(unsigned long d, unsigned long q) {
    QVector out{gammaBound(d, q)};
    QVector ext = extremalVector(d, q);
    for (std::size_t i = ext.size(); i-- > 0;) out.push_back(ext[i]);
    return out;
}

/// The extremal simplex conv(e_0, e_1, ..., e_d), e_0 = -sum u_{d+1}/(1+u_i) e_i.
inline std::vector<LatticeVector> extremalSimplex(unsigned long d, unsigned long q) {
    SylvesterTable table(q);
    std::vector<LatticeVector> out;
    LatticeVector e0(d);
    for (unsigned long i = 1; i <= d; ++i) e0[i - 1] = -(table.u(d + 1) / (1 + table.u(i)));
    out.push_back(e0);
    for (unsigned long i = 0; i < d; ++i) {
        LatticeVector e(d, 0);
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

inline std::vector<QVector> toQPoints(const std::vector<LatticeVector>& pts) {
    std::vector<QVector> out;
    for (const auto& p : pts) out.push_back(toQ(p));
    return out;
}

/// Nonzero lattice points m with q m in the interior of the simplex.
inline std::vector<LatticeVector> scaledInteriorPoints(const Polytope& simplex, unsigned long q) {
    std::vector<LatticeVector> out;
    for (auto& m : latticePoints(scaled(simplex, Rational(1, static_cast<long>(q))), LatticeMode::Interior))
        if (!isZero(m)) out.push_back(std::move(m));
    return out;
}

inline SSReport verifySS(const std::vector<LatticeVector>& vertices, unsigned long q) {
    if (q == 0) throw std::invalid_argument("q must be positive");
    if (vertices.empty()) throw std::invalid_argument("no vertices");
    const std::size_t d = vertices.front().size();
    if (vertices.size() != d + 1) throw std::invalid_argument("a d-simplex needs d+1 vertices");
    auto qverts = toQPoints(vertices);
    if (detail::affineDimension(qverts) != static_cast<long>(d))
        throw DomainError("degenerate-simplex", "vertices are affinely dependent");
    auto simplex = Polytope::fromVertices(d, qverts);
    if (!simplex.containsInRelativeInterior(QVector(d)))
        throw DomainError("not-interior", "the origin is not interior to the simplex");
    auto bad = scaledInteriorPoints(simplex, q);
    if (!bad.empty()) {
        std::string point;
        for (std::size_t i = 0; i < d; ++i) point += (i ? "," : "") + toString(bad.front()[i]);
        throw DomainError("precondition", "a nonzero lattice point lies in the interior of S/q",
                          {{"point", "(" + point + ")"}});
    }

    SSReport r;
    r.barycentric = *barycentricCoordinates(qverts, QVector(d));
    r.gamma = *std::min_element(r.barycentric.begin(), r.barycentric.end());
    r.bound = gammaBound(d, q);
    r.boundHolds = r.gamma >= r.bound;

    QVector sorted = r.barycentric;
    std::sort(sorted.begin(), sorted.end());
    r.equality = sorted == extremalProfile(d, q);
    if (!r.equality) return r;

    // order[0] carries q/u_{d+1}; order[d + 1 - i] carries q/(1 + u_i).
    std::vector<std::size_t> order(d + 1);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return r.barycentric[a] < r.barycentric[b]; });
    std::vector<QVector> cols;
    for (std::size_t i = 1; i <= d; ++i) cols.push_back(qverts[order[d + 1 - i]]);
    QMatrix u = inverse(QMatrix::fromColumns(cols));
    IntMatrix witness(d, LatticeVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (u(i, j).get_den() != 1) throw std::logic_error("equality witness is not integral");
            witness[i][j] = u(i, j).get_num();
        }
    if (abs(determinant(u)) != 1) throw std::logic_error("equality witness is not unimodular");
    QVector image = u * qverts[order[0]];
    QVector expected = toQ(extremalSimplex(d, q).front());
    if (image != expected) throw std::logic_error("equality witness does not reach the extremal simplex");
    r.witness = witness;
    return r;
}

/// Scale invariance reduces vertices in (1/q)Z^d to verifySS on qS.
inline SSReport verifyBL(const std::vector<QVector>& vertices, unsigned long q) {
    if (q == 0) throw std::invalid_argument("q must be positive");
    std::vector<LatticeVector> scaledVerts;
    for (const auto& v : vertices) {
        QVector w = scale(Rational(static_cast<long>(q)), v);
        if (!isIntegral(w)) throw DomainError("not-in-lattice", "vertices must lie in (1/q)Z^d");
        scaledVerts.push_back(toLattice(w));
    }
    return verifySS(scaledVerts, q);
}

struct SHEReport {
    unsigned long q = 0;  // interior lattice points
    std::vector<LatticeVector> interiorPoints;
    Rational minGamma;
    Rational gammaBound;
    Rational volume;
    Rational volumeBound;
    Integer latticeCount;
    Rational countBound;
    bool gammaPass = false;
    bool volumePass = false;
    bool countPass = false;
    bool pass() const { return gammaPass && volumePass && countPass; }
};

inline SHEReport verifySHE(const Polytope& body) {
    const std::size_t d = body.dim();
    for (const auto& v : body.vertices())
        if (!isIntegral(v)) throw DomainError("not-lattice", "vertices must be lattice points");
    if (!body.isFullDimensional()) throw DomainError("not-full-dimensional", "polytope must be full-dimensional");
    SHEReport r;
    r.interiorPoints = latticePoints(body, LatticeMode::Interior);
    if (r.interiorPoints.empty()) throw DomainError("no-interior-points", "no interior lattice point");
    r.q = r.interiorPoints.size();
    r.gammaBound = gammaBound(d, r.q);
    r.minGamma = gammaPoint(toQ(r.interiorPoints.front()), body);
    for (const auto& p : r.interiorPoints) r.minGamma = std::min(r.minGamma, gammaPoint(toQ(p), body));
    r.gammaPass = r.minGamma >= r.gammaBound;

    Rational qq(static_cast<long>(r.q));
    Rational ratio = Rational(sylvesterU(d + 1, r.q)) / qq;
    r.volume = normalizedVolume(body);
    r.volumeBound = qq * power(ratio, d);
    r.volumePass = r.volume <= r.volumeBound;
    r.latticeCount = static_cast<unsigned long>(latticePoints(body, LatticeMode::Closed).size());
    r.countBound = Rational(static_cast<long>(d)) + Rational(factorial(d)) * r.volumeBound;
    r.countPass = Rational(r.latticeCount) <= r.countBound;
    return r;
}

/// Lexicographically least Hermite form of the vertex matrix over all vertex
/// orders. Lattice isomorphisms fix the origin, so the vertex matrix (not the
/// edge matrix) is the invariant to normalise.
inline IntMatrix canonicalSimplexForm(const std::vector<LatticeVector>& vertices) {
    const std::size_t d = vertices.front().size();
    std::vector<std::size_t> perm(vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<IntMatrix> best;
    do {
        IntMatrix m(d, LatticeVector(vertices.size()));
        for (std::size_t c = 0; c < perm.size(); ++c)
            for (std::size_t r = 0; r < d; ++r) m[r][c] = vertices[perm[c]][r];
        IntMatrix h = hermiteNormalForm(m);
        if (!best || h < *best) best = h;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

struct EqualityClass {
    IntMatrix canonical;
    std::vector<LatticeVector> representative;
    std::size_t count = 0;
};

struct Census {
    std::size_t d = 2;
    long radius = 0;
    unsigned long q = 1;
    std::size_t admissible = 0;
    std::optional<Rational> minGamma;
    std::size_t violations = 0;
    std::size_t equalityCases = 0;
    std::vector<EqualityClass> equalityClasses;
    std::size_t spotChecks = 0;  // d = 3 random samples verified
};

namespace detail {

using P2 = std::array<std::int64_t, 2>;

inline std::int64_t cross(const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Strict interior test for a triangle of orientation `sign`.
inline bool strictlyInside(const P2& a, const P2& b, const P2& c, const P2& p, std::int64_t sign) {
    return cross(a, b, p) * sign > 0 && cross(b, c, p) * sign > 0 && cross(c, a, p) * sign > 0;
}


// Origin interior and no other m with q m in the interior.
inline bool admissibleTriangle(const P2& a, const P2& b, const P2& c, std::int64_t q) {
    std::int64_t o = cross(a, b, c);
    if (o == 0) return false;
    std::int64_t sign = o > 0 ? 1 : -1;
    const P2 zero{0, 0};
    if (!strictlyInside(a, b, c, zero, sign)) return false;
    std::int64_t lo[2], hi[2];
    for (int i = 0; i < 2; ++i) {
        lo[i] = floorDiv(std::min({a[i], b[i], c[i]}), q);
        hi[i] = -floorDiv(-std::max({a[i], b[i], c[i]}), q);
    }
    for (std::int64_t x = lo[0]; x <= hi[0]; ++x)
        for (std::int64_t y = lo[1]; y <= hi[1]; ++y) {
            if (x == 0 && y == 0) continue;
            if (strictlyInside(a, b, c, P2{q * x, q * y}, sign)) return false;
        }
    return true;
}

}  // namespace detail

inline constexpr long kCensusRadiusLimit = 8;

inline Census enumerateAndVerify(std::size_t d, long radius, unsigned long q, std::uint64_t seed = 1,
                                 std::size_t spotSamples = 200) {
    if (q == 0) throw std::invalid_argument("q must be positive");
    if (radius < 1) throw std::invalid_argument("radius must be positive");
    if (radius > kCensusRadiusLimit)
        throw DomainError("guard-exceeded", "census radius is limited to 8", {{"radius", std::to_string(radius)}});
    if (d != 2 && d != 3) throw DomainError("unsupported-dimension", "census supports d = 2 (exhaustive) and d = 3 (spot checks)");

    Census census;
    census.d = d;
    census.radius = radius;
    census.q = q;
    std::map<IntMatrix, EqualityClass> classes;
    auto absorb = [&](const std::vector<LatticeVector>& verts, const SSReport& r) {
        ++census.admissible;
        if (!census.minGamma || r.gamma < *census.minGamma) census.minGamma = r.gamma;
        if (!r.boundHolds) ++census.violations;
        if (r.equality) {
            ++census.equalityCases;
            IntMatrix key = canonicalSimplexForm(verts);
            auto& cls = classes[key];
            if (cls.count++ == 0) {
                cls.canonical = key;
                cls.representative = verts;
            }
        }
    };

    if (d == 2) {
        std::vector<detail::P2> pts;
        for (long x = -radius; x <= radius; ++x)
            for (long y = -radius; y <= radius; ++y) pts.push_back({x, y});
        const std::size_t n = pts.size();
        using Found = std::vector<std::pair<std::vector<LatticeVector>, SSReport>>;
        auto perFirst = parallelMap<Found>(n, [&](std::size_t i) {
            Found found;
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    if (!detail::admissibleTriangle(pts[i], pts[j], pts[k], static_cast<std::int64_t>(q))) continue;
                    std::vector<LatticeVector> verts;
                    for (auto idx : {i, j, k}) verts.push_back({Integer(static_cast<long>(pts[idx][0])), Integer(static_cast<long>(pts[idx][1]))});
                    found.emplace_back(verts, verifySS(verts, q));
                }
            return found;
        });
        for (const auto& chunk : perFirst)
            for (const auto& [verts, r] : chunk) absorb(verts, r);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> coord(-radius, radius);
        for (std::size_t s = 0; s < spotSamples; ++s) {
            std::vector<LatticeVector> verts(4, LatticeVector(3));
            for (auto& v : verts)
                for (auto& x : v) x = coord(rng);
            auto qv = toQPoints(verts);
            if (detail::affineDimension(qv) != 3) continue;
            auto simplex = Polytope::fromVertices(3, qv);
            if (!simplex.containsInRelativeInterior(QVector(3))) continue;
            if (!scaledInteriorPoints(simplex, q).empty()) continue;
            absorb(verts, verifySS(verts, q));
            ++census.spotChecks;
        }
    }
    for (auto& [key, cls] : classes) census.equalityClasses.push_back(std::move(cls));
    return census;
}

}  // namespace toric_alpha
