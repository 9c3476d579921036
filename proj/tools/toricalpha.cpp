// toricalpha: JSON front end to the library.
// Exit codes: 0 success, 1 malformed input, 2 domain error, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "toric_alpha/toric_alpha.hpp"

using namespace toric_alpha;
using io::json;

namespace {

struct Options {
    std::string file;
    std::string inlineJson;
    unsigned long q = 0;  // 0: not given
    unsigned long d = 2;
    unsigned long p = 1;
    std::string epsilon;
    long radius = 4;
    std::uint64_t seed = 1;
    bool approx = false;
    bool interior = false;
};

json readInput(const Options& o) {
    if (!o.inlineJson.empty()) return io::parseText(o.inlineJson);
    if (o.file.empty()) throw io::MalformedInput("this subcommand needs --file or --json");
    std::ifstream in(o.file);
    if (!in) throw io::MalformedInput("cannot open " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return io::parseText(buf.str());
}

// Accepts a bare polytope or {"polytope": ...}.
Polytope polytopeOf(const json& in) { return io::readPolytope(in.contains("polytope") ? in.at("polytope") : in); }

ToricLogPair pairOf(const json& in, const char* key = "pair") { return io::readPair(in.contains(key) ? in.at(key) : in); }

InvariantDivisor divisorOr(const json& in, const char* key, const ToricLogPair& pair) {
    return in.contains(key) ? io::readDivisor(in.at(key)) : anticanonical(pair);
}

unsigned long qOr(const Options& o, const json& in, unsigned long fallback) {
    if (o.q) return o.q;
    if (in.contains("q")) return io::readSize(in.at("q"));
    return fallback;
}

Rational epsilonOf(const Options& o) {
    try {
        return parseRational(o.epsilon);
    } catch (const std::exception&) {
        throw io::MalformedInput("bad --epsilon: " + o.epsilon);
    }
}

json ssJson(const SSReport& r) {
    json out{{"barycentric", io::toJson(r.barycentric)},
             {"gamma", io::toJson(r.gamma)},
             {"bound", io::toJson(r.bound)},
             {"boundHolds", r.boundHolds},
             {"equality", r.equality}};
    if (r.witness) out["witness"] = io::toJson(*r.witness);
    return out;
}

json sheJson(const SHEReport& r) {
    return {{"q", r.q},
            {"interiorPoints", io::toJson(r.interiorPoints)},
            {"minGamma", io::toJson(r.minGamma)},
            {"gammaBound", io::toJson(r.gammaBound)},
            {"volume", io::toJson(r.volume)},
            {"volumeBound", io::toJson(r.volumeBound)},
            {"latticeCount", io::toJson(r.latticeCount)},
            {"countBound", io::toJson(r.countBound)},
            {"pass", r.pass()}};
}

json gbJson(const GlobalBoundReport& r) {
    return {{"q", r.q},
            {"mld", io::toJson(r.mld)},
            {"applicable", r.applicable},
            {"gamma", io::toJson(r.gamma)},
            {"gammaBound", io::toJson(r.gammaBound)},
            {"equality", r.equality},
            {"volume", io::toJson(r.volume)},
            {"volumeBound", io::toJson(r.volumeBound)},
            {"pass", r.pass()}};
}

json slJson(const SLCheck& r) {
    return {{"gamma", io::toJson(r.gamma)}, {"volume", io::toJson(r.volume)}, {"lhs", io::toJson(r.lhs)},
            {"rhs", io::toJson(r.rhs)},     {"vacuous", r.vacuous},            {"pass", r.pass}};
}

using Handler = std::function<json(const Options&)>;

std::map<std::string, std::pair<std::string, Handler>> handlers() {
    std::map<std::string, std::pair<std::string, Handler>> h;

    h["sylvester"] = {"u_{p,q} and the identity checks (--p, --q)", [](const Options& o) -> json {
                          unsigned long q = o.q ? o.q : 1;
                          return {{"u", io::toJson(sylvesterU(o.p, q))},
                                  {"identities", identityChecks(o.p, q).allPass() ? "pass" : "fail"}};
                      }};

    h["gamma-point"] = {"gamma(P in polytope); input {polytope, point?}, point defaults to 0",
                        [](const Options& o) -> json {
                            json in = readInput(o);
                            Polytope body = polytopeOf(in);
                            QVector pt = in.contains("point") ? io::readQVector(in.at("point")) : QVector(body.dim());
                            if (pt.size() != body.dim()) throw io::MalformedInput("point of the wrong dimension");
                            return {{"gamma", io::toJson(gammaPoint(pt, body))}};
                        }};

    h["dual"] = {"dual polytope", [](const Options& o) -> json { return io::toJson(dual(polytopeOf(readInput(o)))); }};

    h["width"] = {"width along a direction; input {polytope, direction}", [](const Options& o) -> json {
                      json in = readInput(o);
                      Polytope body = polytopeOf(in);
                      QVector e = io::readQVector(io::field(in, "direction"));
                      if (e.size() != body.dim()) throw io::MalformedInput("direction of the wrong dimension");
                      return {{"width", io::toJson(width(body, e))}};
                  }};

    h["lattice-points"] = {"lattice points (closed, or --interior)", [](const Options& o) -> json {
                               auto pts = latticePoints(polytopeOf(readInput(o)),
                                                        o.interior ? LatticeMode::Interior : LatticeMode::Closed);
                               return {{"count", pts.size()}, {"points", io::toJson(pts)}};
                           }};

    h["volume"] = {"volume and d! volume", [](const Options& o) -> json {
                       Polytope body = polytopeOf(readInput(o));
                       Rational v = normalizedVolume(body);
                       return {{"volume", io::toJson(v)},
                               {"latticeNormalized", io::toJson(Rational(Rational(factorial(body.dim())) * v))}};
                   }};

    h["lhn-solve"] = {"solve the Diophantine system; input {q, c, x}", [](const Options& o) -> json {
                          LHNInstance inst = io::readLHN(readInput(o));
                          if (o.q) inst.q = o.q;
                          Solution s = solveLHN(inst);
                          json out = io::toJson(s);
                          out["verified"] = verifySolution(inst.x, inst.c, s.z);
                          return out;
                      }};

    h["simplex-verify"] = {"simplex bounds; input {kind: ss|bl|she, vertices | polytope, q?}",
                           [](const Options& o) -> json {
                               json in = readInput(o);
                               std::string kind = in.contains("kind") ? in.at("kind").get<std::string>() : "ss";
                               unsigned long q = qOr(o, in, 1);
                               if (kind == "ss")
                                   return ssJson(verifySS(
                                       io::readArray<LatticeVector>(io::field(in, "vertices"), io::readLatticeVector), q));
                               if (kind == "bl")
                                   return ssJson(
                                       verifyBL(io::readArray<QVector>(io::field(in, "vertices"), io::readQVector), q));
                               if (kind == "she") {
                                   if (in.contains("polytope")) return sheJson(verifySHE(polytopeOf(in)));
                                   auto verts = io::readArray<QVector>(io::field(in, "vertices"), io::readQVector);
                                   if (verts.empty()) throw io::MalformedInput("no vertices");
                                   return sheJson(verifySHE(Polytope::fromVertices(verts.front().size(), verts)));
                               }
                               throw io::MalformedInput("unknown kind " + kind);
                           }};

    h["census"] = {"admissible simplex census (--d, --radius, --q, --seed)", [](const Options& o) -> json {
                       Census c = enumerateAndVerify(o.d, o.radius, o.q ? o.q : 1, o.seed);
                       json classes = json::array();
                       for (const auto& e : c.equalityClasses)
                           classes.push_back({{"canonical", io::toJson(e.canonical)},
                                              {"representative", io::toJson(e.representative)},
                                              {"count", e.count}});
                       return {{"d", c.d},
                               {"radius", c.radius},
                               {"q", c.q},
                               {"admissible", c.admissible},
                               {"minGamma", c.minGamma ? io::toJson(*c.minGamma) : json(nullptr)},
                               {"bound", io::toJson(gammaBound(c.d, c.q))},
                               {"violations", c.violations},
                               {"equalityCases", c.equalityCases},
                               {"equalityClasses", classes},
                               {"spotChecks", c.spotChecks}};
                   }};

    h["toric-alpha"] = {"alpha invariant; input {pair, divisor?}, divisor defaults to -K-B",
                        [](const Options& o) -> json {
                            json in = readInput(o);
                            ToricLogPair pair = pairOf(in);
                            InvariantDivisor L = divisorOr(in, "divisor", pair);
                            auto prof = divisorProfile(pair, L);
                            return {{"alpha", io::toJson(alphaFromProfile(pair, prof))},
                                    {"width", io::toJson(prof.width)},
                                    {"fixedMult", io::toJson(prof.fixedMult)},
                                    {"polytope", io::toJson(prof.box)}};
                        }};

    h["toric-mld"] = {"mld; input {pair, vector?} adds one log discrepancy", [](const Options& o) -> json {
                          json in = readInput(o);
                          ToricLogPair pair = pairOf(in);
                          json out{{"mld", io::toJson(mld(pair))}};
                          if (in.contains("vector")) {
                              auto ld = logDiscrepancy(pair, io::readLatticeVector(in.at("vector")));
                              out["logDiscrepancy"] = io::toJson(ld.value);
                              out["valuation"] = io::toJson(ld.valuation);
                              out["rescaled"] = ld.rescaled;
                          }
                          return out;
                      }};

    h["toric-check"] = {"validation and global bounds for -K-B (--q defaults to ceil(1/mld))",
                        [](const Options& o) -> json {
                            json in = readInput(o);
                            ToricLogPair pair = pairOf(in);
                            auto v = validatePair(pair);
                            Rational m = mld(pair);
                            unsigned long fallback = m > 0 ? ceilOf(Rational(1) / m).get_ui() : 1;
                            auto gb = gbAndVbChecks(pair, qOr(o, in, fallback));
                            json out{{"nef", v.nef},
                                     {"ample", v.ample},
                                     {"warnings", v.warnings},
                                     {"mld", io::toJson(m)},
                                     {"gammaAnticanonical", io::toJson(gammaAnticanonical(pair))},
                                     {"globalBounds", gbJson(gb)}};
                            bool pass = gb.pass();
                            if (v.nef) {
                                auto sl = slInequalityCheck(pair, anticanonical(pair));
                                out["slInequality"] = slJson(sl);
                                pass = pass && sl.pass;
                            }
                            out["pass"] = pass;
                            return out;
                        }};

    h["product-check"] = {"alpha of a product; input {pair1, divisor1?, pair2, divisor2?}",
                          [](const Options& o) -> json {
                              json in = readInput(o);
                              ToricLogPair p1 = io::readPair(io::field(in, "pair1"));
                              ToricLogPair p2 = io::readPair(io::field(in, "pair2"));
                              auto r = productAlphaCheck(p1, divisorOr(in, "divisor1", p1), p2,
                                                         divisorOr(in, "divisor2", p2));
                              return {{"alpha1", io::toJson(r.alpha1)},
                                      {"alpha2", io::toJson(r.alpha2)},
                                      {"alphaProduct", io::toJson(r.alphaProduct)},
                                      {"pass", r.pass}};
                          }};

    h["rank1-analyze"] = {"rank-one pair; input {x, a}; --epsilon adds the criteria", [](const Options& o) -> json {
                              RankOneFano f = io::readRankOne(readInput(o));
                              auto ac = alphaAndCartier(f);
                              json out{{"q", io::toJson(f.q)},
                                       {"w", io::toJson(f.w)},
                                       {"gamma", io::toJson(f.gamma)},
                                       {"alpha", io::toJson(ac.alpha)},
                                       {"cartierIndex", io::toJson(ac.r)},
                                       {"mld", io::toJson(mldScan(f))},
                                       {"pair", io::toJson(toToricPair(f))}};
                              if (!o.epsilon.empty()) {
                                  Rational eps = epsilonOf(o);
                                  auto z = existsZCriterion(f, eps);
                                  out["epsilon"] = io::toJson(eps);
                                  out["mldAtLeastEpsilon"] = mldAtLeastGeometric(f, eps);
                                  out["witness"] = z ? io::toJson(*z) : json(nullptr);
                              }
                              return out;
                          }};

    h["rank1-extremal"] = {"the sharp rank-one pair (--d, --q)", [](const Options& o) -> json {
                               unsigned long q = o.q ? o.q : 1;
                               RankOneFano f = extremalExample(o.d, q);
                               return {{"alpha", io::toJson(alphaAndCartier(f).alpha)},
                                       {"mld", io::toJson(mldScan(f))},
                                       {"volumeQScaled", io::toJson(scaledVolume(f, q))}};
                           }};

    h["fano-census"] = {"toric Fano pairs with mld >= epsilon (--d, --epsilon)", [](const Options& o) -> json {
                            FanoCensus c = fanoFinitenessCensus(o.d, o.epsilon.empty() ? Rational(1) : epsilonOf(o));
                            json members = json::array();
                            for (const auto& m : c.members)
                                members.push_back({{"rays", io::toJson(m.rays)}, {"a", io::toJson(m.a)}});
                            return {{"d", c.d},
                                    {"epsilon", io::toJson(c.epsilon)},
                                    {"volumeBound", io::toJson(c.volumeBound)},
                                    {"radius", c.radius},
                                    {"candidates", c.candidates},
                                    {"count", c.members.size()},
                                    {"members", members}};
                        }};
    return h;
}

json domainErrorJson(const DomainError& e) {
    json data = json::object();
    for (const auto& [k, v] : e.data()) data[k] = v;
    return {{"code", e.code()}, {"message", e.what()}, {"data", data}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toric alpha-invariant toolkit"};
    app.require_subcommand(1, 1);
    Options o;
    auto table = handlers();
    std::map<CLI::App*, Handler> bySub;
    for (auto& [name, entry] : table) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->add_option("--file", o.file, "input JSON file");
        sub->add_option("--json", o.inlineJson, "inline input JSON");
        sub->add_option("--q", o.q, "index q")->check(CLI::PositiveNumber);
        sub->add_option("--d", o.d, "dimension")->check(CLI::PositiveNumber);
        sub->add_option("--p", o.p, "sequence index")->check(CLI::PositiveNumber);
        sub->add_option("--epsilon", o.epsilon, "mld threshold, exact rational");
        sub->add_option("--radius", o.radius, "census box radius");
        sub->add_option("--seed", o.seed, "seed for sampled checks");
        sub->add_flag("--approx", o.approx, "add decimal renderings beside exact values");
        sub->add_flag("--interior", o.interior, "interior lattice points only");
        bySub[sub] = entry.second;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    Handler handler;
    for (auto* sub : app.get_subcommands()) handler = bySub.at(sub);
    try {
        json out = handler(o);
        if (o.approx) io::addApprox(out);
        std::cout << out.dump() << '\n';
        return 0;
    } catch (const DomainError& e) {
        std::cout << domainErrorJson(e).dump() << '\n';
        return 2;
    } catch (const io::MalformedInput& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
