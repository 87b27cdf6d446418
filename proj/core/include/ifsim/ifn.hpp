#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "ifsim/errors.hpp"

namespace ifsim {

/// Construction tolerance: mu+nu may overshoot 1 by at most this much
/// (decimal round-trip slack); the overshoot is clamped away, anything
/// larger is rejected.
inline constexpr double kValidationEps = 1e-9;

/// Tie band for score/accuracy comparisons. The comparison rule is exact
/// equality on paper; this band keeps the relation total under floating
/// arithmetic.
inline constexpr double kCompareEps = 1e-12;

/// Three-way outcome of the score/accuracy comparison rule.
enum class Ordering3 { Less, Equal, Greater };

/// An intuitionistic fuzzy number: a (membership, non-membership) pair
/// with mu, nu in [0,1] and mu + nu <= 1. Hesitancy pi = 1 - mu - nu is
/// derived, never stored, so mu + nu + pi = 1 cannot drift.
///
/// Immutable after construction; every operation on Ifn is a pure function.
class Ifn {
public:
    Ifn(double mu, double nu) : mu_(checked(mu, "mu")), nu_(checked(nu, "nu")) {
        const double sum = mu_ + nu_;
        if (sum > 1.0 + kValidationEps) {
            throw DomainError("mu+nu = " + std::to_string(sum) + " exceeds 1 (mu=" +
                              std::to_string(mu_) + ", nu=" + std::to_string(nu_) + ")");
        }
        if (sum > 1.0) nu_ = 1.0 - mu_;  // clamp the sub-eps overshoot
    }

    double mu() const noexcept { return mu_; }
    double nu() const noexcept { return nu_; }

    friend bool operator==(const Ifn& a, const Ifn& b) noexcept = default;

private:
    static double checked(double v, const char* name) {
        if (!(v >= -kValidationEps && v <= 1.0 + kValidationEps)) {
            throw DomainError(std::string(name) + " = " + std::to_string(v) +
                              " outside [0,1]");
        }
        return std::clamp(v, 0.0, 1.0);
    }

    double mu_;
    double nu_;
};

/// Hesitancy degree pi = 1 - mu - nu, clamped into [0,1].
inline double hesitancy(const Ifn& a) noexcept {
    return std::clamp(1.0 - a.mu() - a.nu(), 0.0, 1.0);
}

/// Score function s(a) = mu - nu; the primary comparison key.
inline double score(const Ifn& a) noexcept { return a.mu() - a.nu(); }

/// Accuracy function h(a) = mu + nu; the tie-breaker for equal scores.
inline double accuracy(const Ifn& a) noexcept { return a.mu() + a.nu(); }

/// Score/accuracy comparison: a > b iff s(a) > s(b), or the scores tie
/// (within kCompareEps) and h(a) > h(b). Total and antisymmetric.
inline Ordering3 compare(const Ifn& a, const Ifn& b) noexcept {
    const double ds = score(a) - score(b);
    if (std::abs(ds) > kCompareEps) {
        return ds > 0.0 ? Ordering3::Greater : Ordering3::Less;
    }
    const double dh = accuracy(a) - accuracy(b);
    if (std::abs(dh) > kCompareEps) {
        return dh > 0.0 ? Ordering3::Greater : Ordering3::Less;
    }
    return Ordering3::Equal;
}

// The six IFN operators. Each returns a valid Ifn; validity is re-checked
// by the constructor, which also absorbs sub-eps rounding overshoot.

/// Intersection: (min(mu_a, mu_b), max(nu_a, nu_b)).
inline Ifn meet(const Ifn& a, const Ifn& b) {
    return {std::min(a.mu(), b.mu()), std::max(a.nu(), b.nu())};
}

/// Union: (max(mu_a, mu_b), min(nu_a, nu_b)).
inline Ifn join(const Ifn& a, const Ifn& b) {
    return {std::max(a.mu(), b.mu()), std::min(a.nu(), b.nu())};
}

/// Algebraic sum: (mu_a + mu_b - mu_a*mu_b, nu_a*nu_b).
inline Ifn sum(const Ifn& a, const Ifn& b) {
    return {a.mu() + b.mu() - a.mu() * b.mu(), a.nu() * b.nu()};
}

/// Algebraic product: (mu_a*mu_b, nu_a + nu_b - nu_a*nu_b).
inline Ifn product(const Ifn& a, const Ifn& b) {
    return {a.mu() * b.mu(), a.nu() + b.nu() - a.nu() * b.nu()};
}

/// Scalar multiple: (1 - (1-mu)^lambda, nu^lambda), lambda > 0.
inline Ifn scale(double lambda, const Ifn& a) {
    if (!(lambda > 0.0)) {
        throw DomainError("lambda = " + std::to_string(lambda) + " must be positive");
    }
    return {1.0 - std::pow(1.0 - a.mu(), lambda), std::pow(a.nu(), lambda)};
}

/// Power: (mu^lambda, 1 - (1-nu)^lambda), lambda > 0.
inline Ifn power(const Ifn& a, double lambda) {
    if (!(lambda > 0.0)) {
        throw DomainError("lambda = " + std::to_string(lambda) + " must be positive");
    }
    return {std::pow(a.mu(), lambda), 1.0 - std::pow(1.0 - a.nu(), lambda)};
}

/// Euclidean length of the (mu, nu, pi) vector. Always in [1/sqrt(3), 1]
/// because the components are nonnegative and sum to 1.
inline double norm3(const Ifn& a) noexcept {
    const double m = a.mu();
    const double n = a.nu();
    const double p = hesitancy(a);
    return std::sqrt(m * m + n * n + p * p);
}

}  // namespace ifsim
