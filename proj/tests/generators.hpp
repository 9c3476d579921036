#pragma once

// Random instance generators shared by the property tests and the
// acceptance binary.

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "toric_alpha/diophantine.hpp"
#include "toric_alpha/rank1.hpp"
#include "toric_alpha/toric.hpp"

namespace gen {

using namespace toric_alpha;

inline bool throwsDomain(const std::function<void()>& f) {
    try {
        f();
    } catch (const DomainError&) {
        return true;
    }
    return false;
}

/// Complete pair without a fan: 1..3 extra primitive rays in [-3,3]^d,
/// coefficients in [1/4, 1].
inline ToricLogPair randomPair(std::mt19937_64& rng, std::size_t d) {
    while (true) {
        std::vector<LatticeVector> rays;
        long n = oracle::randomInt(rng, static_cast<long>(d) + 1, static_cast<long>(d) + 3);
        for (long i = 0; i < n; ++i) {
            LatticeVector e(d);
            for (auto& x : e) x = oracle::randomInt(rng, -3, 3);
            if (isZero(e)) continue;
            rays.push_back(primitivePart(e).primitive);
        }
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        if (rays.size() < d + 1) continue;
        QVector a;
        for (std::size_t i = 0; i < rays.size(); ++i) a.push_back(oracle::randomRational(rng, Rational(1, 4), 1, 4));
        ToricLogPair p{d, rays, a, std::nullopt};
        if (throwsDomain([&] { validatePair(p); })) continue;
        return p;
    }
}

/// Rank-one data with q at most about maxQ; a in [1/5, 1] or all ones.
inline RankOneFano randomFano(std::mt19937_64& rng, long maxQ, bool boundary = true) {
    while (true) {
        std::size_t d = static_cast<std::size_t>(oracle::randomInt(rng, 1, 3));
        std::vector<long> m;
        long total = 0;
        for (std::size_t i = 0; i <= d; ++i) {
            m.push_back(oracle::randomInt(rng, 1, maxQ / static_cast<long>(d + 1)));
            total += m.back();
        }
        QVector x, a;
        for (std::size_t i = 0; i <= d; ++i) {
            x.push_back(makeRational(m[i], total));
            a.push_back(boundary ? oracle::randomRational(rng, Rational(1, 5), 1, 4) : Rational(1));
        }
        if (throwsDomain([&] { fromBarycentric(x, a); })) continue;
        return fromBarycentric(x, a);
    }
}

/// Descending x with sum at least that of the extremal vector, x not extremal.
inline LHNInstance randomValidInstance(std::mt19937_64& rng) {
    while (true) {
        LHNInstance inst;
        std::size_t d = static_cast<std::size_t>(oracle::randomInt(rng, 1, 4));
        inst.q = static_cast<unsigned long>(oracle::randomInt(rng, 1, 3));
        for (std::size_t i = 0; i < d; ++i) {
            inst.x.push_back(oracle::randomRational(rng, Rational(1, 40), 1, 40));
            inst.c.push_back(oracle::randomRational(rng, 1, Rational(inst.q), 3));
        }
        std::sort(inst.x.begin(), inst.x.end(), std::greater<>());
        QVector ext = extremalVector(d, inst.q);
        Rational s(0), e(0);
        for (std::size_t i = 0; i < d; ++i) {
            s += inst.x[i];
            e += ext[i];
        }
        if (s >= e && inst.x != ext) return inst;
    }
}

/// Hull of 3..7 points of [-4,4]^2 with an interior lattice point.
inline Polytope randomLatticePolygon(std::mt19937_64& rng) {
    while (true) {
        std::vector<QVector> pts;
        long n = oracle::randomInt(rng, 3, 7);
        for (long i = 0; i < n; ++i) pts.push_back({Rational(oracle::randomInt(rng, -4, 4)), Rational(oracle::randomInt(rng, -4, 4))});
        auto body = Polytope::fromVertices(2, pts);
        if (!body.isFullDimensional() || latticePoints(body, LatticeMode::Interior).empty()) continue;
        return body;
    }
}

/// Hull of random rational points, kept when 0 is interior.
inline Polytope randomRationalPolytope(std::mt19937_64& rng, std::size_t d) {
    while (true) {
        std::vector<QVector> pts;
        long n = oracle::randomInt(rng, static_cast<long>(d) + 1, static_cast<long>(d) + 5);
        for (long i = 0; i < n; ++i) {
            QVector p;
            for (std::size_t k = 0; k < d; ++k) p.push_back(oracle::randomRational(rng, -3, 3, 4));
            pts.push_back(p);
        }
        auto body = Polytope::fromVertices(d, pts);
        if (!body.isFullDimensional() || !body.containsInRelativeInterior(QVector(d))) continue;
        return body;
    }
}

}  // namespace gen
