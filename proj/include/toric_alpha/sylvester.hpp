#pragma once

// The two-parameter Sylvester-type sequence u(1, q) = q,
// u(p + 1, q) = u(p, q) (1 + u(p, q)), and the sharp constants built on it.
// Values grow doubly exponentially; everything is arbitrary precision.

#include <mutex>
#include <stdexcept>
#include <vector>

#include "toric_alpha/exact.hpp"

namespace toric_alpha {

/// Memoized values u(1, q), u(2, q), ... for one q. Safe to share between
/// threads.
class SylvesterTable {
public:
    explicit SylvesterTable(unsigned long q) : q_(q) {
        if (q < 1) throw std::invalid_argument("q must be positive");
        values_.push_back(Integer(q));
    }

    unsigned long q() const noexcept { return q_; }

    Integer u(unsigned long p) const {
        if (p < 1) throw std::invalid_argument("p must be positive");
        std::lock_guard lock(mutex_);
        while (values_.size() < p) {
            const Integer& last = values_.back();
            values_.push_back(last * (last + 1));
        }
        return values_[p - 1];
    }

private:
    unsigned long q_;
    mutable std::mutex mutex_;
    mutable std::vector<Integer> values_;
};

inline Integer sylvesterU(unsigned long p, unsigned long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    Integer u(q);
    for (unsigned long i = 1; i < p; ++i) u = u * (u + 1);
    return u;
}

/// q / u(d + 1, q): the sharp lower bound for gamma(0 in S).
inline Rational gammaBound(unsigned long d, unsigned long q) {
    return makeRational(Integer(q), sylvesterU(d + 1, q));
}

/// d! * u(d, q)^(d - 1) * q.
inline Integer errataBound(unsigned long d, unsigned long q) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    Integer u = sylvesterU(d, q);
    Integer out = factorial(d) * Integer(q);
    for (unsigned long i = 1; i < d; ++i) out *= u;
    return out;
}

/// The extremal vector (q / (1 + u(i, q)))_{i = 1..d}.
inline QVector extremalVector(unsigned long d, unsigned long q) {
    QVector x;
    for (unsigned long i = 1; i <= d; ++i) x.push_back(makeRational(Integer(q), sylvesterU(i, q) + 1));
    return x;
}

struct SylvesterIdentityReport {
    bool divisibility = false;     // q | u(i, q) for i <= p + 1
    bool coprimality = false;      // gcd(1 + u(i, q), 1 + u(j, q)) = 1 for i != j <= p
    bool partialSum = false;       // sum 1/(1+u_i) = 1/q - 1/u_{p+1}
    bool product = false;          // prod (1+u_i) = u_{p+1} / q
    bool reciprocalProduct = false;// prod 1/(1+u_i) = 1 - q sum 1/(1+u_i)

    bool allPass() const { return divisibility && coprimality && partialSum && product && reciprocalProduct; }
};

inline SylvesterIdentityReport identityChecks(unsigned long p, unsigned long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    SylvesterTable table(q);
    SylvesterIdentityReport report;

    report.divisibility = true;
    for (unsigned long i = 1; i <= p + 1; ++i)
        if (table.u(i) % Integer(q) != 0) report.divisibility = false;

    report.coprimality = true;
    for (unsigned long i = 1; i <= p; ++i)
        for (unsigned long j = i + 1; j <= p; ++j)
            if (gcdOf(table.u(i) + 1, table.u(j) + 1) != 1) report.coprimality = false;

    Rational sum(0), reciprocalProduct(1);
    Integer product(1);
    for (unsigned long i = 1; i <= p; ++i) {
        sum += makeRational(Integer(1), table.u(i) + 1);
        reciprocalProduct *= makeRational(Integer(1), table.u(i) + 1);
        product *= table.u(i) + 1;
    }
    const Integer next = table.u(p + 1);
    report.partialSum = sum == makeRational(Integer(1), Integer(q)) - makeRational(Integer(1), next);
    report.product = Rational(product) == makeRational(next, Integer(q));
    report.reciprocalProduct = reciprocalProduct == Rational(1) - Rational(q) * sum;
    return report;
}

}  // namespace toric_alpha
