#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric_alpha/json_io.hpp"

using namespace toric_alpha;
using io::json;

namespace {

Rational q(const char* s) { return parseRational(s); }

LatticeVector lv(std::vector<long> v) { return LatticeVector(v.begin(), v.end()); }

}  // namespace

TEST(JsonIO, Scalars) {
    EXPECT_EQ(io::toJson(q("-3/6")), json("-1/2"));
    EXPECT_EQ(io::readRational(json("4/6")), q("2/3"));
    EXPECT_EQ(io::readRational(json(7)), 7);
    EXPECT_THROW(io::readRational(json(0.5)), io::MalformedInput);
    EXPECT_THROW(io::readRational(json("1/0")), io::MalformedInput);
    EXPECT_THROW(io::readRational(json("abc")), io::MalformedInput);
    EXPECT_THROW(io::readInteger(json("1/2")), io::MalformedInput);

    Integer big("123456789012345678901234567890");
    EXPECT_EQ(io::toJson(big), json("123456789012345678901234567890"));
    EXPECT_EQ(io::readInteger(io::toJson(big)), big);
    EXPECT_EQ(io::toJson(Integer(-5)), json("-5"));
    EXPECT_EQ(io::toJson(RationalOrInfinity()), json("inf"));
}

TEST(JsonIO, PolytopeRoundTrip) {
    auto square = io::readPolytope(json::parse(R"({"dim":2,"vertices":[[0,0],[1,0],[0,1],[1,1]]})"));
    EXPECT_EQ(square.facets().size(), 4u);
    auto again = io::readPolytope(io::toJson(square));
    EXPECT_EQ(again, square);

    auto fromHs = io::readPolytope(json::parse(
        R"({"dim":1,"halfspaces":[{"normal":["2"],"offset":"1"},{"normal":[-1],"offset":"1/3"}]})"));
    EXPECT_EQ(fromHs.vertices(), (std::vector<QVector>{{q("-1/2")}, {q("1/3")}}));
    EXPECT_EQ(io::readPolytope(io::toJson(fromHs)), fromHs);

    EXPECT_THROW(io::readPolytope(json::parse(R"({"vertices":[[0]]})")), io::MalformedInput);
    EXPECT_THROW(io::readPolytope(json::parse(R"({"dim":2,"vertices":[[0]]})")), io::MalformedInput);
}

TEST(JsonIO, PairDivisorRankOneRoundTrip) {
    auto p = makePair(2, {lv({1, 0}), lv({0, 1}), lv({-1, -1})}, {1, q("1/2"), 1},
                      std::vector<Cone>{{0, 1}, {1, 2}, {2, 0}});
    auto pj = io::toJson(p);
    EXPECT_TRUE(pj.contains("maxCones"));
    auto p2 = io::readPair(pj);
    EXPECT_EQ(p2.rays, p.rays);
    EXPECT_EQ(p2.a, p.a);
    EXPECT_EQ(p2.maxCones, p.maxCones);

    auto noFan = io::readPair(json::parse(R"({"dim":1,"rays":[[1],[-1]],"a":["1","1"]})"));
    EXPECT_FALSE(noFan.maxCones.has_value());
    EXPECT_FALSE(io::toJson(noFan).contains("maxCones"));
    EXPECT_THROW(io::readPair(json::parse(R"({"dim":1,"rays":[[1],[-1]],"a":["1"]})")), io::MalformedInput);
    EXPECT_THROW(io::readPair(json::parse(R"({"dim":1,"rays":[[1],[-1]],"a":[1,1],"maxCones":[[2]]})")),
                 io::MalformedInput);

    InvariantDivisor L{{1, q("2/3"), 0}};
    EXPECT_EQ(io::readDivisor(io::toJson(L)).l, L.l);

    auto f = fromBarycentric({q("1/6"), q("1/2"), q("1/3")}, {1, 1, 1});
    auto g = io::readRankOne(io::toJson(f));
    EXPECT_EQ(g.x, f.x);
    EXPECT_EQ(g.w, f.w);

    LHNInstance inst{2, {1, 1}, {q("1/2"), q("1/3")}};
    auto inst2 = io::readLHN(io::toJson(inst));
    EXPECT_EQ(inst2.q, 2u);
    EXPECT_EQ(inst2.x, inst.x);
}

TEST(JsonIO, RandomPolytopesRoundTrip) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t d = static_cast<std::size_t>(oracle::randomInt(rng, 1, 3));
        std::vector<QVector> pts;
        for (int k = 0; k < 6; ++k) {
            QVector p;
            for (std::size_t i = 0; i < d; ++i) p.push_back(oracle::randomRational(rng, -3, 3, 5));
            pts.push_back(p);
        }
        auto body = Polytope::fromVertices(d, pts);
        if (!body.isFullDimensional()) continue;
        auto text = io::toJson(body).dump();
        EXPECT_EQ(io::readPolytope(io::parseText(text)), body);
        // Half-space form alone gives the same body.
        auto j = io::toJson(body);
        j.erase("vertices");
        EXPECT_EQ(io::readPolytope(j), body);
    }
}

TEST(JsonIO, ApproxKeepsExactFields) {
    json j{{"alpha", "1/3"}, {"name", "x"}, {"v", {"1/2", "3"}}, {"inner", {{"mld", "2/5"}}}};
    io::addApprox(j);
    EXPECT_EQ(j["alpha"], "1/3");
    EXPECT_DOUBLE_EQ(j["alphaApprox"].get<double>(), 1.0 / 3);
    EXPECT_FALSE(j.contains("nameApprox"));
    EXPECT_DOUBLE_EQ(j["vApprox"][0].get<double>(), 0.5);
    EXPECT_DOUBLE_EQ(j["inner"]["mldApprox"].get<double>(), 0.4);
}

TEST(JsonIO, MalformedText) { EXPECT_THROW(io::parseText("{nope"), io::MalformedInput); }
