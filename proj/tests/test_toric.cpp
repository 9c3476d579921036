#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "toric_alpha/toric.hpp"

using namespace toric_alpha;

namespace {

Rational q(const char* s) { return parseRational(s); }

LatticeVector lv(std::vector<long> v) { return LatticeVector(v.begin(), v.end()); }

std::string codeOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.code();
    }
    return "";
}

// Rays e1, e2, -e1-e2.
ToricLogPair projectivePlane(QVector a = {1, 1, 1}) {
    return makePair(2, {lv({1, 0}), lv({0, 1}), lv({-1, -1})}, std::move(a), std::vector<Cone>{{0, 1}, {1, 2}, {2, 0}});
}

ToricLogPair projectiveLine(QVector a = {1, 1}) {
    return makePair(1, {lv({1}), lv({-1})}, std::move(a), std::vector<Cone>{{0}, {1}});
}

ToricLogPair quadric() {
    return makePair(2, {lv({1, 0}), lv({-1, 0}), lv({0, 1}), lv({0, -1})}, {1, 1, 1, 1},
                    std::vector<Cone>{{0, 2}, {2, 1}, {1, 3}, {3, 0}});
}

std::vector<QVector> sortedVertices(std::vector<QVector> v) {
    detail::sortUnique(v);
    return v;
}

}  // namespace

TEST(MomentPolytope, Examples) {
    auto p2 = projectivePlane();
    EXPECT_EQ(momentPolytope(p2, {{0, 0, 1}}).vertices(), sortedVertices({{0, 0}, {1, 0}, {0, 1}}));

    auto me = extremalPair(2, 1);
    EXPECT_EQ(me.rays.front(), lv({-3, -2}));
    EXPECT_EQ(momentPolytope(me).vertices(), sortedVertices({{-1, -1}, {-1, 2}, {1, -1}}));

    EXPECT_EQ(momentPolytope(projectiveLine()).vertices(), sortedVertices({{-1}, {1}}));
    EXPECT_EQ(codeOf([&] { momentPolytope(p2, {{-1, 0, 0}}); }), "empty");
}

TEST(ToricLogPair, Validation) {
    EXPECT_EQ(codeOf([] { makePair(2, {lv({2, 0}), lv({0, 1}), lv({-1, -1})}, {1, 1, 1}); }), "non-primitive-ray");
    try {
        makePair(2, {lv({2, 0}), lv({0, 1}), lv({-1, -1})}, {1, 1, 1});
    } catch (const DomainError& e) {
        EXPECT_EQ(e.data().at("suggestion"), "(1,0)");
    }
    EXPECT_EQ(codeOf([] { makePair(2, {lv({1, 0}), lv({0, 1}), lv({1, 1})}, {1, 1, 1}); }), "incomplete");
    EXPECT_EQ(codeOf([] { makePair(1, {lv({1}), lv({-1})}, {q("3/2"), 1}); }), "coefficient-out-of-range");

    auto report = validatePair(projectivePlane());
    EXPECT_TRUE(report.nef);
    EXPECT_TRUE(report.ample);
    // -K is not nef on the Hirzebruch surface F_3.
    ToricLogPair f3{2, {lv({1, 0}), lv({0, 1}), lv({-1, 3}), lv({0, -1})}, {1, 1, 1, 1},
                    std::vector<Cone>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    auto r = validatePair(f3);
    EXPECT_FALSE(r.nef);
    EXPECT_FALSE(r.warnings.empty());
}

TEST(WidthsAndFixedParts, Examples) {
    auto p2 = projectivePlane();
    auto prof = divisorProfile(p2, {{0, 0, 2}});
    EXPECT_EQ(prof.width, (QVector{2, 2, 2}));
    EXPECT_EQ(prof.fixedMult, (QVector{0, 0, 0}));

    auto blown = makePair(2, {lv({1, 0}), lv({0, 1}), lv({-1, -1}), lv({1, 1})}, {1, 1, 1, 1});
    InvariantDivisor L{{0, 0, 1, 1}};
    EXPECT_EQ(fixedMultAt(blown, L, 3), 1);
    EXPECT_EQ(widthAt(blown, L, 3), 2);

    // □_L is the single point (0,0) on every bounding line.
    auto point = divisorProfile(p2, {{0, 0, 0}});
    EXPECT_EQ(point.width, (QVector{0, 0, 0}));
    EXPECT_TRUE(alphaInvariant(p2, {{0, 0, 0}}).isInfinite());
}

TEST(GammaFiniteSystem, Examples) {
    // Rays ordered -e1-e2, e1, e2 here.
    auto p2 = makePair(2, {lv({-1, -1}), lv({1, 0}), lv({0, 1})}, {1, 1, 1});
    auto g = gammaFiniteSystem(p2, {{{2, 0, 0}}, {lv({0, 0}), lv({1, 0}), lv({0, 1})}});
    EXPECT_EQ(g.global, RationalOrInfinity(q("1/2")));
    EXPECT_EQ(g.perRay[1], RationalOrInfinity(Rational(1)));

    auto pt = gammaFiniteSystem(p2, {{{0, 0, 0}}, {lv({0, 0})}});
    EXPECT_TRUE(pt.global.isInfinite());

    auto boundary = projectivePlane({1, 1, q("1/2")});
    FiniteLinearSystem all{{{0, 0, 2}}, latticePoints(momentPolytope(boundary, {{0, 0, 2}}), LatticeMode::Closed)};
    EXPECT_EQ(all.A.size(), 6u);
    EXPECT_EQ(gammaFiniteSystem(boundary, all).global, RationalOrInfinity(q("1/4")));

    EXPECT_EQ(codeOf([&] { gammaFiniteSystem(p2, {{{0, 0, 0}}, {}}); }), "empty-system");
    EXPECT_EQ(codeOf([&] { gammaFiniteSystem(p2, {{{0, 0, 0}}, {lv({1, 1})}}); }), "not-in-polytope");
}

TEST(AlphaInvariant, KnownValues) {
    auto p2 = projectivePlane();
    EXPECT_EQ(alphaInvariant(p2, {{1, 0, 0}}), RationalOrInfinity(Rational(1)));
    EXPECT_EQ(alphaInvariant(p2, {{2, 0, 0}}), RationalOrInfinity(q("1/2")));
    EXPECT_EQ(alphaInvariant(p2, anticanonical(p2)), RationalOrInfinity(q("1/3")));
    // Curves: min(a+, a-) / deg.
    for (long n = 1; n <= 4; ++n) {
        auto line = projectiveLine({q("1/3"), q("3/4")});
        EXPECT_EQ(alphaInvariant(line, {{n, 0}}), RationalOrInfinity(Rational(1, 3) / n));
        EXPECT_EQ(alphaInvariant(line, {{n, 0}}), RationalOrInfinity(Rational(mld(line) / n)));
    }
}

TEST(LctInvariant, Examples) {
    auto p2 = makePair(2, {lv({-1, -1}), lv({1, 0}), lv({0, 1})}, {1, 1, 1});
    EXPECT_EQ(lctInvariant(p2, {{3, 0, 0}}), RationalOrInfinity(q("1/3")));
    EXPECT_TRUE(lctInvariant(p2, {{0, 0, 0}}).isInfinite());
    EXPECT_EQ(codeOf([&] { lctInvariant(p2, {{-1, 0, 0}}); }), "not-effective");
}

TEST(LogDiscrepancy, Examples) {
    auto p2 = projectivePlane();
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(logDiscrepancy(p2, p2.rays[i]).value, 1);
    EXPECT_EQ(logDiscrepancy(p2, lv({1, 1})).value, 2);

    auto me = extremalPair(2, 2);
    EXPECT_EQ(me.rays.front(), lv({-7, -3}));
    EXPECT_EQ(momentPolytope(me).vertices(), sortedVertices({{-1, -1}, {-1, q("5/2")}, {q("1/2"), -1}}));
    EXPECT_EQ(logDiscrepancy(me, lv({-7, -3})).value, q("1/2"));

    auto scaledUp = logDiscrepancy(p2, lv({2, 2}));
    EXPECT_TRUE(scaledUp.rescaled);
    EXPECT_EQ(scaledUp.valuation, lv({1, 1}));
    EXPECT_EQ(scaledUp.value, 2);
    EXPECT_EQ(negSupport(momentPolytope(p2), lv({2, 2})), 4);
    EXPECT_EQ(codeOf([&] { logDiscrepancy(p2, lv({0, 0})); }), "zero-vector");
}

TEST(Mld, Examples) {
    EXPECT_EQ(mld(projectivePlane()), 1);
    EXPECT_EQ(mld(extremalPair(2, 1)), 1);
    EXPECT_EQ(mld(extremalPair(2, 2)), q("1/2"));
    EXPECT_EQ(mld(extremalPair(3, 1)), 1);
    EXPECT_EQ(mld(projectivePlane({1, 0, 1})), 0);
    // P(1,1,2): an A1 point, canonical.
    auto weighted = makePair(2, {lv({1, 0}), lv({0, 1}), lv({-1, -2})}, {1, 1, 1});
    EXPECT_EQ(mld(weighted), 1);
    // P(1,1,3): a 1/3(1,1) point, log discrepancy 2/3 at (0,-1).
    auto quotient = makePair(2, {lv({1, 0}), lv({0, 1}), lv({-1, -3})}, {1, 1, 1});
    EXPECT_EQ(mld(quotient), q("2/3"));
}

TEST(GammaAnticanonical, Examples) {
    EXPECT_EQ(gammaAnticanonical(projectivePlane()), q("1/3"));
    EXPECT_EQ(gammaAnticanonical(extremalPair(2, 1)), q("1/6"));
    EXPECT_EQ(gammaAnticanonical(extremalPair(2, 2)), q("1/21"));
    EXPECT_EQ(gammaAnticanonical(projectivePlane({1, 1, 0})), 0);
}

TEST(MobileGamma, Examples) {
    auto r = mobileGammaCheck(projectivePlane(), {{1, 0, 0}});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.rhs, RationalOrInfinity(Rational(1)));

    auto box = mobileGammaCheck(quadric(), {{1, 0, 2, 0}});
    EXPECT_TRUE(box.pass);
    EXPECT_EQ(box.lhs, RationalOrInfinity(q("1/2")));

    for (unsigned long qq = 1; qq <= 2; ++qq) {
        auto me = extremalPair(2, qq);
        auto c = mobileGammaCheck(me, anticanonical(me));
        EXPECT_TRUE(c.pass);
        EXPECT_EQ(c.lhs, RationalOrInfinity(gammaBound(2, qq)));
    }

    auto blown = makePair(2, {lv({1, 0}), lv({0, 1}), lv({-1, -1}), lv({1, 1})}, {1, 1, 1, 1});
    EXPECT_EQ(codeOf([&] { mobileGammaCheck(blown, {{0, 0, 1, 1}}); }), "not-mobile");
}

TEST(SLInequality, Examples) {
    auto r = slInequalityCheck(projectivePlane(), {{2, 0, 0}});
    EXPECT_TRUE(r.nefChecked);
    EXPECT_EQ(r.volume, 4);
    EXPECT_EQ(r.lhs, 1);
    EXPECT_EQ(r.rhs, 4);
    EXPECT_TRUE(r.pass);

    auto me = slInequalityCheck(extremalPair(2, 1), {{1, 1, 1}});
    EXPECT_EQ(me.volume, 6);
    EXPECT_EQ(me.lhs, q("1/6"));

    auto line = slInequalityCheck(projectiveLine({q("1/2"), 1}), {{3, 0}});
    EXPECT_EQ(line.lhs, q("1/2"));
    EXPECT_TRUE(line.pass);

    auto flat = slInequalityCheck(projectivePlane(), {{0, 0, 0}});
    EXPECT_TRUE(flat.vacuous);

    ToricLogPair blown{2, {lv({1, 0}), lv({0, 1}), lv({-1, -1}), lv({1, 1})}, {1, 1, 1, 1},
                       std::vector<Cone>{{0, 3}, {3, 1}, {1, 2}, {2, 0}}};
    EXPECT_EQ(codeOf([&] { slInequalityCheck(blown, {{0, 0, 0, 1}}); }), "not-nef");
}

TEST(GlobalBounds, Examples) {
    auto r = gbAndVbChecks(extremalPair(2, 1), 1);
    EXPECT_TRUE(r.applicable);
    EXPECT_TRUE(r.equality);
    EXPECT_EQ(r.volume, 6);
    EXPECT_EQ(r.volumeBound, 144);
    EXPECT_TRUE(r.pass());

    auto p2 = gbAndVbChecks(projectivePlane(), 1);
    EXPECT_EQ(p2.gamma, q("1/3"));
    EXPECT_EQ(p2.volume, 9);
    EXPECT_FALSE(p2.equality);
    EXPECT_TRUE(p2.pass());

    auto me2 = gbAndVbChecks(extremalPair(2, 2), 2);
    EXPECT_TRUE(me2.equality);
    EXPECT_EQ(me2.volume, q("21/4"));
    EXPECT_EQ(me2.volumeBound, 42 * 42);
    EXPECT_EQ(me2.volume * 4, Rational(sylvesterU(3, 2)) / 2);

    // mld 1/2 < 1 makes the q = 1 statement vacuous.
    auto skip = gbAndVbChecks(extremalPair(2, 2), 1);
    EXPECT_FALSE(skip.applicable);
    EXPECT_TRUE(skip.pass());

    auto d3 = gbAndVbChecks(extremalPair(3, 1), 1);
    EXPECT_TRUE(d3.equality);
    EXPECT_EQ(d3.gamma, q("1/42"));
    EXPECT_EQ(d3.volume, 42);
}

TEST(Products, Examples) {
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            auto r = productAlphaCheck(projectiveLine(), {{a, 0}}, projectiveLine(), {{b, 0}});
            EXPECT_TRUE(r.pass);
            EXPECT_EQ(r.alphaProduct, RationalOrInfinity(std::min(Rational(1, a), Rational(1, b))));
        }
    auto trivial = productAlphaCheck(projectivePlane(), {{0, 0, 0}}, projectiveLine(), {{2, 0}});
    EXPECT_EQ(trivial.alphaProduct, RationalOrInfinity(q("1/2")));
    auto mixed = productAlphaCheck(projectiveLine({q("1/2"), 1}), {{1, 0}}, projectiveLine(), {{1, 0}});
    EXPECT_EQ(mixed.alphaProduct, RationalOrInfinity(q("1/2")));
    auto prod = productPair(projectiveLine(), projectiveLine());
    EXPECT_TRUE(validatePair(prod).ample);
}

TEST(ToricProperties, AnticanonicalGammaAgreesThreeWays) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = gen::randomPair(rng, trial % 3 == 0 ? 3 : 2);
        Rational g = gammaAnticanonical(p);
        EXPECT_EQ(alphaInvariant(p, anticanonical(p)), RationalOrInfinity(g));
        EXPECT_EQ(gammaPoint(QVector(p.dim), rayPolytope(p)), g);
        EXPECT_EQ(dual(momentPolytope(p)), rayPolytope(p));
        Rational m = mld(p);
        EXPECT_LE(m, *std::min_element(p.a.begin(), p.a.end()));
        EXPECT_GT(m, 0);
    }
}

TEST(ToricProperties, WidthIdentityOnRandomDivisors) {
    std::mt19937_64 rng(6);
    int tested = 0;
    while (tested < 100) {
        auto p = gen::randomPair(rng, 2);
        InvariantDivisor L;
        for (std::size_t i = 0; i < p.rays.size(); ++i) L.l.push_back(oracle::randomRational(rng, -1, 3, 3));
        if (codeOf([&] { momentPolytope(p, L); }) == "empty") continue;
        ++tested;
        auto prof = divisorProfile(p, L);
        for (std::size_t i = 0; i < p.rays.size(); ++i)
            EXPECT_EQ(prof.width[i] - prof.fixedMult[i], width(prof.box, p.rays[i]));
    }
}

TEST(ToricProperties, FiniteSystemsConvergeToAlpha) {
    // With A = lattice points of r□_L, r clearing denominators, the finite
    // threshold times r is the alpha invariant.
    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 30) {
        auto p = gen::randomPair(rng, 2);
        InvariantDivisor L;
        for (std::size_t i = 0; i < p.rays.size(); ++i) L.l.push_back(oracle::randomRational(rng, 0, 2, 2));
        Polytope box = momentPolytope(p, L);
        Integer r(1);
        for (const auto& v : box.vertices()) r = lcmOf(r, denominatorLcm(v));
        if (r > 6) continue;
        InvariantDivisor rL{scale(Rational(r), L.l)};
        FiniteLinearSystem sys{rL, latticePoints(momentPolytope(p, rL), LatticeMode::Closed)};
        ++tested;
        auto g = gammaFiniteSystem(p, sys).global;
        auto alpha = alphaInvariant(p, L);
        if (alpha.isInfinite()) {
            EXPECT_TRUE(g.isInfinite());
        } else {
            EXPECT_EQ(Rational(g.value() * Rational(r)), alpha.value());
        }
    }
}

TEST(ToricProperties, SupportFunctionIsHomogeneous) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = gen::randomPair(rng, 2);
        Polytope box = momentPolytope(p);
        LatticeVector e{Integer(oracle::randomInt(rng, -4, 4)), Integer(oracle::randomInt(rng, -4, 4))};
        if (isZero(e)) continue;
        long n = oracle::randomInt(rng, 2, 5);
        EXPECT_EQ(negSupport(box, multiply({{Integer(n), 0}, {0, Integer(n)}}, e)), n * negSupport(box, e));
        EXPECT_EQ(logDiscrepancy(p, e).value * Rational(contentOf(e)), negSupport(box, e));
    }
}

TEST(ToricProperties, SmoothPairsHaveMldOne) {
    EXPECT_EQ(mld(quadric()), 1);
    auto blown = makePair(2, {lv({1, 0}), lv({1, 1}), lv({0, 1}), lv({-1, -1})}, {1, 1, 1, 1});
    EXPECT_EQ(mld(blown), 1);
    auto hirzebruch = makePair(2, {lv({1, 0}), lv({0, 1}), lv({-1, 2}), lv({0, -1})}, {1, 1, 1, 1});
    EXPECT_EQ(mld(hirzebruch), 1);
}

TEST(FanoCensus, CurveCase) {
    auto c = fanoFinitenessCensus(1, Rational(1));
    ASSERT_EQ(c.members.size(), 1u);
    EXPECT_EQ(c.members.front().rays, (std::vector<LatticeVector>{lv({1}), lv({-1})}));
    auto half = fanoFinitenessCensus(1, q("1/2"));
    ASSERT_EQ(half.members.size(), 1u);
}

TEST(FanoCensus, GuardsAndErrors) {
    EXPECT_EQ(codeOf([] { fanoFinitenessCensus(2, q("1/2")); }), "guard-exceeded");
    EXPECT_EQ(codeOf([] { fanoFinitenessCensus(2, Rational(0)); }), "epsilon-out-of-range");
    EXPECT_EQ(codeOf([] { fanoFinitenessCensus(3, Rational(1)); }), "unsupported-dimension");
}

namespace {

// Vertices of conv(rays) in counterclockwise order.
std::vector<LatticeVector> hullCycle(const std::vector<LatticeVector>& rays) {
    std::vector<QVector> pts;
    for (const auto& r : rays) pts.push_back(toQ(r));
    std::vector<LatticeVector> verts;
    Polytope hull = Polytope::fromVertices(2, pts);
    for (const auto& v : hull.vertices()) verts.push_back(toLattice(v));
    std::sort(verts.begin(), verts.end(), [](const LatticeVector& a, const LatticeVector& b) {
        return std::atan2(a[1].get_d(), a[0].get_d()) < std::atan2(b[1].get_d(), b[0].get_d());
    });
    return verts;
}

// Independent enumeration: grow lattice polygons in a box by adding points,
// keeping only hulls whose interior lattice points lie in {0} and which
// contain 0; each polygon with 0 strictly inside contributes every superset
// of its vertices inside its boundary points.
std::set<IntMatrix> bruteForceFanoFans(long R) {
    using P = std::array<long, 2>;
    auto cr = [](const P& o, const P& a, const P& b) { return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]); };
    auto hull = [&](std::vector<P> pts) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::vector<P> h;
        for (int pass = 0; pass < 2; ++pass) {
            std::size_t base = h.size();
            for (const auto& p : pts) {
                while (h.size() >= base + 2 && cr(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
                h.push_back(p);
            }
            h.pop_back();
            std::reverse(pts.begin(), pts.end());
        }
        return h;
    };
    auto side = [&](const std::vector<P>& h, const P& p) {  // 2 interior, 1 boundary, 0 outside
        int res = 2;
        for (std::size_t i = 0; i < h.size(); ++i) {
            const P &a = h[i], &b = h[(i + 1) % h.size()];
            long c = cr(a, b, p);
            if (c < 0) return 0;
            if (c == 0) {
                if (p[0] < std::min(a[0], b[0]) || p[0] > std::max(a[0], b[0]) || p[1] < std::min(a[1], b[1]) ||
                    p[1] > std::max(a[1], b[1]))
                    return 0;
                res = 1;
            }
        }
        return res;
    };
    std::vector<P> box;
    for (long x = -R; x <= R; ++x)
        for (long y = -R; y <= R; ++y) box.push_back({x, y});
    auto ok = [&](const std::vector<P>& h) {
        if (h.size() < 3 || side(h, {0, 0}) == 0) return false;
        for (const auto& p : box)
            if ((p[0] || p[1]) && side(h, p) == 2) return false;
        return true;
    };
    std::set<std::vector<P>> seen;
    std::vector<std::vector<P>> frontier;
    for (std::size_t i = 0; i < box.size(); ++i)
        for (std::size_t j = i + 1; j < box.size(); ++j)
            for (std::size_t k = j + 1; k < box.size(); ++k) {
                auto h = hull({box[i], box[j], box[k]});
                if (ok(h) && seen.insert(h).second) frontier.push_back(h);
            }
    while (!frontier.empty()) {
        auto h = frontier.back();
        frontier.pop_back();
        for (const auto& p : box) {
            auto pts = h;
            pts.push_back(p);
            auto g = hull(pts);
            if (ok(g) && seen.insert(g).second) frontier.push_back(g);
        }
    }
    std::set<IntMatrix> fans;
    for (const auto& h : seen) {
        if (side(h, {0, 0}) != 2) continue;
        std::vector<P> extra;
        for (const auto& p : box)
            if (side(h, p) == 1 && std::find(h.begin(), h.end(), p) == h.end()) extra.push_back(p);
        for (unsigned mask = 0; mask < (1u << extra.size()); ++mask) {
            std::vector<LatticeVector> rays;
            for (const auto& v : h) rays.push_back(lv({v[0], v[1]}));
            for (std::size_t b = 0; b < extra.size(); ++b)
                if (mask >> b & 1) rays.push_back(lv({extra[b][0], extra[b][1]}));
            std::sort(rays.begin(), rays.end(), [](const LatticeVector& a, const LatticeVector& b) {
                return std::atan2(a[1].get_d(), a[0].get_d()) < std::atan2(b[1].get_d(), b[0].get_d());
            });
            fans.insert(detail::canonicalFan(rays));
        }
    }
    return fans;
}

}  // namespace

TEST(FanoCensus, SurfacesWithMldOne) {
    auto c = fanoFinitenessCensus(2, Rational(1));
    EXPECT_EQ(c.radius, 72);
    ASSERT_FALSE(c.members.empty());
    std::set<IntMatrix> keys, polygons;
    for (const auto& m : c.members) {
        keys.insert(m.canonical);
        polygons.insert(detail::canonicalFan(hullCycle(m.rays)));
        auto pair = memberPair(c, m);
        EXPECT_GE(mld(pair), 1);
        EXPECT_TRUE(isNef(pair, anticanonical(pair)));
        auto gb = gbAndVbChecks(pair, c.q);
        EXPECT_TRUE(gb.applicable);
        EXPECT_TRUE(gb.pass());
        EXPECT_TRUE(slInequalityCheck(pair, anticanonical(pair)).pass);
        // The only interior lattice point of conv(rays) is the origin.
        EXPECT_EQ(latticePoints(rayPolytope(pair), LatticeMode::Interior).size(), 1u);
    }
    EXPECT_EQ(keys.size(), c.members.size());
    EXPECT_EQ(keys, bruteForceFanoFans(3));
    EXPECT_EQ(keys.size(), 86u);
    // Ray hulls with a single interior lattice point: the 16 reflexive polygons.
    EXPECT_EQ(polygons.size(), 16u);
    auto plane = detail::canonicalFan({lv({1, 0}), lv({0, 1}), lv({-1, -1})});
    auto quadricKey = detail::canonicalFan({lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})});
    EXPECT_TRUE(keys.count(plane));
    EXPECT_TRUE(keys.count(quadricKey));
}
