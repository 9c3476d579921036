#pragma once

// Simultaneous approximation with a common denominator:
//     find z in N^d \ 0 with  c_j z_j / (1 + sum_i c_i z_i) < x_j  for all j.
//
// The solver reduces to a Minkowski body search. With A_jk = c_k - [j = k]/x_j
// the body U = {z : |Az|_inf < 1} is centrally symmetric of volume 2^d/|det A|,
// and det A = (-1)^d (1 - sum c x) / prod x, so U holds a nonzero lattice point
// as soon as 1 - prod x < sum c x < 1.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <optional>
#include <vector>

#include "toric_alpha/errors.hpp"
#include "toric_alpha/exact.hpp"
#include "toric_alpha/sylvester.hpp"

namespace toric_alpha {

struct LHNInstance {
    unsigned long q = 1;
    QVector c;
    QVector x;
};

struct Solution {
    LatticeVector z;
    QVector lhs;  // c_j z_j / (1 + sum c z), compared against x_j
    QVector x;
    std::optional<std::size_t> reductionIndex;
    QVector reducedX;      // x after the shrinking step
    Integer searchBound;   // largest coordinate bound of the search box used
    bool heuristic = false;
};

inline bool isDescending(const QVector& x) {
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] > x[i - 1]) return false;
    return true;
}

inline QVector lhsValues(const QVector& c, const LatticeVector& z) {
    Rational denom(1);
    for (std::size_t i = 0; i < z.size(); ++i) denom += c[i] * Rational(z[i]);
    QVector out(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) out[j] = c[j] * Rational(z[j]) / denom;
    return out;
}

inline bool verifySolution(const QVector& x, const QVector& c, const LatticeVector& z) {
    if (z.size() != x.size() || c.size() != x.size() || z.empty()) return false;
    bool nonzero = false;
    for (const auto& zi : z) {
        if (zi < 0) return false;
        if (zi != 0) nonzero = true;
    }
    if (!nonzero) return false;
    auto lhs = lhsValues(c, z);
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!(lhs[j] < x[j])) return false;
    return true;
}

/// Smallest l with prod_{i<=l} x_i > q^l (1 - sum_{i<=l} x_i).
inline std::optional<std::size_t> slViolationIndex(const QVector& x, unsigned long q) {
    if (!isDescending(x)) throw std::invalid_argument("x must be sorted in descending order");
    Rational prod(1), sum(0), ql(1);
    for (std::size_t l = 0; l < x.size(); ++l) {
        if (x[l] <= 0) throw std::invalid_argument("x must be positive");
        prod *= x[l];
        sum += x[l];
        ql *= q;
        if (prod > ql * (1 - sum)) return l + 1;
    }
    return std::nullopt;
}

inline QMatrix unitBodyMatrix(const QVector& x, const QVector& c) {
    const std::size_t d = x.size();
    QMatrix a(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) a(j, k) = c[k] - (j == k ? Rational(1) / x[j] : Rational(0));
    return a;
}

namespace detail {

// Nonzero lattice points of the open parallelepiped {z : |Az|_inf < 1}.
//
// Slicing coordinate by coordinate. With B = A^-1 the body is {Bw : w in (-1,1)^d};
// once z_0..z_{k-1} are fixed, the extreme values of z_k over the closed slice
// are attained at basic solutions of a box LP in w: k free coordinates S solve
// B[0..k, S] w_S = prefix - B[0..k, T] sigma, the rest sit at sigma = +-1.
// The k x k inverses are precomputed per level, so every slice costs a few
// small matrix-vector products.
class ParallelepipedEnumerator {
public:
    explicit ParallelepipedEnumerator(const QMatrix& a) : a_(a), b_(inverse(a)), d_(a.rows()) {
        levels_.resize(d_);
        for (std::size_t k = 0; k < d_; ++k) {
            std::vector<std::size_t> all(d_);
            std::iota(all.begin(), all.end(), 0);
            forEachSubsetOf(k, [&](const std::vector<std::size_t>& free) {
                std::vector<std::size_t> fixed;
                for (std::size_t j = 0; j < d_; ++j)
                    if (std::find(free.begin(), free.end(), j) == free.end()) fixed.push_back(j);
                QMatrix m(k, k);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t cc = 0; cc < k; ++cc) m(r, cc) = b_(r, free[cc]);
                if (k > 0 && determinant(m) == 0) return;
                QMatrix inv = k > 0 ? inverse(m) : QMatrix(0, 0);
                for (unsigned long mask = 0; mask < (1ul << fixed.size()); ++mask) {
                    Basis basis;
                    basis.free = free;
                    basis.inv = inv;
                    basis.sigma.assign(d_, Rational(0));
                    for (std::size_t t = 0; t < fixed.size(); ++t)
                        basis.sigma[fixed[t]] = (mask >> t) & 1 ? Rational(1) : Rational(-1);
                    basis.offset.assign(k, Rational(0));
                    for (std::size_t r = 0; r < k; ++r)
                        for (std::size_t j : fixed) basis.offset[r] += b_(r, j) * basis.sigma[j];
                    levels_[k].push_back(std::move(basis));
                }
            });
        }
    }

    std::vector<LatticeVector> points() const {
        std::vector<LatticeVector> out;
        LatticeVector prefix;
        recurse(prefix, out);
        return out;
    }

private:
    struct Basis {
        std::vector<std::size_t> free;
        QMatrix inv;
        QVector sigma;   // +-1 on fixed coordinates
        QVector offset;  // B[0..k, T] sigma
    };

    void forEachSubsetOf(std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) const {
        std::vector<std::size_t> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (cur.size() == k) {
                f(cur);
                return;
            }
            for (std::size_t j = start; j < d_; ++j) {
                cur.push_back(j);
                rec(j + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }

    std::optional<std::pair<Rational, Rational>> range(const LatticeVector& prefix) const {
        const std::size_t k = prefix.size();
        std::optional<std::pair<Rational, Rational>> out;
        QVector rhs(k), w(d_);
        for (const auto& basis : levels_[k]) {
            for (std::size_t r = 0; r < k; ++r) rhs[r] = Rational(prefix[r]) - basis.offset[r];
            w = basis.sigma;
            bool feasible = true;
            for (std::size_t r = 0; r < k && feasible; ++r) {
                Rational v(0);
                for (std::size_t cc = 0; cc < k; ++cc) v += basis.inv(r, cc) * rhs[cc];
                if (v > 1 || v < -1) feasible = false;
                w[basis.free[r]] = v;
            }
            if (!feasible) continue;
            Rational value(0);
            for (std::size_t j = 0; j < d_; ++j) value += b_(k, j) * w[j];
            if (!out) {
                out = std::make_pair(value, value);
            } else {
                out->first = std::min(out->first, value);
                out->second = std::max(out->second, value);
            }
        }
        return out;
    }

    bool inside(const LatticeVector& z) const {
        for (std::size_t j = 0; j < d_; ++j) {
            Rational r(0);
            for (std::size_t k = 0; k < d_; ++k) r += a_(j, k) * Rational(z[k]);
            if (!(abs(r) < 1)) return false;
        }
        return true;
    }

    void recurse(LatticeVector& prefix, std::vector<LatticeVector>& out) const {
        if (prefix.size() == d_) {
            if (!isZero(prefix) && inside(prefix)) out.push_back(prefix);
            return;
        }
        auto r = range(prefix);
        if (!r) return;
        for (Integer v = ceilOf(r->first); v <= floorOf(r->second); ++v) {
            prefix.push_back(v);
            recurse(prefix, out);
            prefix.pop_back();
        }
    }

    QMatrix a_, b_;
    std::size_t d_;
    std::vector<std::vector<Basis>> levels_;
};

// |z_k| <= sum_j |(A^-1)_kj| on U, since z = A^-1 (Az) and |Az|_inf < 1.
inline LatticeVector unitBodyCaps(const QVector& x, const QVector& c) {
    QMatrix inv = inverse(unitBodyMatrix(x, c));
    LatticeVector caps(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        Rational s(0);
        for (std::size_t j = 0; j < x.size(); ++j) s += abs(inv(k, j));
        caps[k] = floorOf(s);
    }
    return caps;
}

inline Integer boxCost(const LatticeVector& caps) {
    Integer cost(1);
    for (const auto& b : caps) cost *= b + 1;
    return cost;
}

// (t x_i / c_i)_{i < len}
inline QVector prefixScaled(const QVector& x, const QVector& c, std::size_t len, const Rational& t) {
    QVector out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = t * x[i] / c[i];
    return out;
}

inline constexpr long kShrinkGrid = 16;
inline constexpr int kBisectionSteps = 40;

}  // namespace detail

inline Solution solveUnitBody(const QVector& x, const QVector& c) {
    const std::size_t d = x.size();
    if (d == 0 || c.size() != d) throw std::invalid_argument("x and c must be nonempty and of equal length");
    Rational prod(1), sum(0);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i] <= 0) throw std::invalid_argument("x must be positive");
        if (c[i] < 1) throw std::invalid_argument("c must be at least 1");
        prod *= x[i];
        sum += c[i] * x[i];
    }
    if (!(1 - prod < sum && sum < 1))
        throw DomainError("hypothesis-violated", "need 1 - prod x < sum c x < 1",
                          {{"sumCx", toString(sum)}, {"oneMinusProd", toString(Rational(1 - prod))}});

    QMatrix a = unitBodyMatrix(x, c);
    LatticeVector caps = detail::unitBodyCaps(x, c);
    Integer widest = *std::max_element(caps.begin(), caps.end());

    // Each lattice point of U, flipped so that sum c z >= 0, is nonnegative.
    // Among those, the smallest sum and then the lexicographically first wins.
    std::optional<LatticeVector> best;
    Integer bestSum(0);
    for (auto z : detail::ParallelepipedEnumerator(a).points()) {
        Rational cz(0);
        for (std::size_t i = 0; i < d; ++i) cz += c[i] * Rational(z[i]);
        if (cz < 0)
            for (auto& v : z) v = -v;
        Integer zs(0);
        for (const auto& v : z) zs += v;
        if (!best || zs < bestSum || (zs == bestSum && z < *best)) {
            best = z;
            bestSum = zs;
        }
    }
    if (!best) throw std::logic_error("Minkowski search region exhausted");
    const LatticeVector& z = *best;
    Solution s;
    s.z = z;
    s.lhs.resize(d);
    Rational denom(1);
    for (std::size_t i = 0; i < d; ++i) denom += c[i] * Rational(z[i]);
    for (std::size_t j = 0; j < d; ++j) {
        s.lhs[j] = Rational(z[j]) / denom;
        if (!(s.lhs[j] < x[j])) throw std::logic_error("lattice point of U failed the target inequality");
    }
    s.x = x;
    s.reducedX = x;
    s.searchBound = widest;
    return s;
}

/// Brute force over sum z <= maxTotal; used when no solution is guaranteed.
inline std::optional<LatticeVector> searchLHN(const QVector& x, const QVector& c, long maxTotal) {
    LatticeVector z;
    auto ok = [&](const LatticeVector& cand) { return verifySolution(x, c, cand); };
    const std::size_t d = x.size();
    LatticeVector cur(d, 0);
    std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) -> bool {
        if (i + 1 == d) {
            cur[i] = left;
            if (ok(cur)) {
                z = cur;
                return true;
            }
            return false;
        }
        for (long v = 0; v <= left; ++v) {
            cur[i] = v;
            if (rec(i + 1, left - v)) return true;
        }
        return false;
    };
    for (long total = 1; total <= maxTotal; ++total)
        if (rec(0, total)) return z;
    return std::nullopt;
}

inline constexpr long kHeuristicSearchTotal = 30;

inline Solution solveLHN(const LHNInstance& inst) {
    const std::size_t d = inst.x.size();
    if (d == 0 || inst.c.size() != d) throw std::invalid_argument("x and c must be nonempty and of equal length");
    if (inst.q == 0) throw std::invalid_argument("q must be positive");
    for (std::size_t i = 0; i < d; ++i) {
        if (inst.x[i] <= 0) throw std::invalid_argument("x must be positive");
        if (inst.c[i] < 1 || inst.c[i] > Rational(inst.q)) throw std::invalid_argument("c must lie in [1, q]");
    }

    // Sort descending, carrying c along; undone at the end.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inst.x[a] > inst.x[b]; });
    QVector x(d), c(d);
    for (std::size_t i = 0; i < d; ++i) {
        x[i] = inst.x[order[i]];
        c[i] = inst.c[order[i]];
    }
    auto unpermute = [&](const LatticeVector& sorted) {
        LatticeVector out(d);
        for (std::size_t i = 0; i < d; ++i) out[order[i]] = sorted[i];
        return out;
    };
    auto heuristic = [&](const std::string& code, const std::string& message) {
        auto z = searchLHN(x, c, kHeuristicSearchTotal);
        if (!z) throw DomainError(code, message, {{"searchedTotal", std::to_string(kHeuristicSearchTotal)}});
        Solution s;
        s.z = unpermute(*z);
        s.lhs = lhsValues(inst.c, s.z);
        s.x = inst.x;
        s.reducedX = inst.x;
        s.searchBound = kHeuristicSearchTotal;
        s.heuristic = true;
        return s;
    };

    QVector ext = extremalVector(d, inst.q);
    Rational extSum(0), sum(0);
    for (std::size_t i = 0; i < d; ++i) {
        extSum += ext[i];
        sum += x[i];
    }
    if (x == ext) {
        bool allQ = std::all_of(c.begin(), c.end(), [&](const Rational& ci) { return ci == Rational(inst.q); });
        if (allQ) throw DomainError("extremal", "no solution exists for the extremal vector");
        return heuristic("extremal", "extremal vector with c below q; bounded search found nothing");
    }
    if (sum < extSum) return heuristic("hypothesis-unmet", "sum x below the sharp threshold; bounded search found nothing");

    // Any prefix l and factor t <= 1 meeting the solver hypothesis for
    // (t x_i / c_i)_{i<=l} yields a solution. The proportional shrink to the
    // midpoint of (threshold, 1) always qualifies, but when the threshold is
    // close to 1 its search box is huge, so a small grid of (l, t) is scored
    // by box size first.
    QVector xr = x;
    if (sum >= 1) xr = scale(((extSum + 1) / 2) / sum, x);
    auto l = slViolationIndex(xr, inst.q);
    if (!l) throw std::logic_error("no reduction index for a non-extremal instance above the threshold");
    std::size_t bestL = *l;
    Rational bestT = sum >= 1 ? Rational(((extSum + 1) / 2) / sum) : Rational(1);
    Integer bestCost = detail::boxCost(detail::unitBodyCaps(detail::prefixScaled(x, c, bestL, bestT), c));
    Rational prefixSum(0), prefixProd(1);
    for (std::size_t len = 1; len <= d; ++len) {
        prefixSum += x[len - 1];
        prefixProd *= x[len - 1] / c[len - 1];
        // f(t) = t^len prod - (1 - t sum) is increasing; feasible t lie in (t0, tMax).
        auto f = [&](const Rational& t) -> Rational { return power(t, len) * prefixProd - (1 - t * prefixSum); };
        const bool closed = prefixSum < 1;
        const Rational tMax = closed ? Rational(1) : Rational(1 / prefixSum);
        if (closed && f(tMax) <= 0) continue;
        Rational lo(0), hi = tMax;
        for (int it = 0; it < detail::kBisectionSteps; ++it) {
            Rational mid = (lo + hi) / 2;
            (f(mid) > 0 ? hi : lo) = mid;
        }
        for (long k = 0; k <= detail::kShrinkGrid; ++k) {
            if (k == detail::kShrinkGrid && !closed) break;
            Rational t = hi + (tMax - hi) * Rational(k, detail::kShrinkGrid);
            if (!(f(t) > 0) || !(t * prefixSum < 1)) continue;
            Integer cost = detail::boxCost(detail::unitBodyCaps(detail::prefixScaled(x, c, len, t), c));
            if (cost < bestCost) {
                bestCost = cost;
                bestL = len;
                bestT = t;
            }
        }
    }
    l = bestL;
    xr = scale(bestT, x);

    QVector xs(*l), cs(*l);
    for (std::size_t i = 0; i < *l; ++i) {
        xs[i] = xr[i] / c[i];
        cs[i] = c[i];
    }
    Solution inner = solveUnitBody(xs, cs);
    LatticeVector zSorted(d, 0);
    for (std::size_t i = 0; i < *l; ++i) zSorted[i] = inner.z[i];

    Solution s;
    s.z = unpermute(zSorted);
    if (!verifySolution(inst.x, inst.c, s.z)) throw std::logic_error("solution failed verification");
    s.lhs = lhsValues(inst.c, s.z);
    s.x = inst.x;
    s.reductionIndex = l;
    s.reducedX.resize(d);
    for (std::size_t i = 0; i < d; ++i) s.reducedX[order[i]] = xr[i];
    s.searchBound = inner.searchBound;
    return s;
}

}  // namespace toric_alpha
