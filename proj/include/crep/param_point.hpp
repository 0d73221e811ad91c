#pragma once

/**
 * @file param_point.hpp
 * @brief A parameter point (n, p, mu[, c1]) with exact coordinates.
 *
 * n is a positive integer; p and mu (and the optional c1) live in
 * Q(sqrt(17)) so that the special rows p = n1, n2 are exactly testable.
 * p = 1 is excluded throughout.
 */

#include <crep/qfield.hpp>

#include <array>
#include <optional>
#include <stdexcept>

namespace crep {

struct ParamPoint {
    long n = 1;
    QField p;
    QField mu;
    std::optional<QField> c1;

    ParamPoint() = default;
    ParamPoint(long n_, QField p_, QField mu_,
               std::optional<QField> c1_ = std::nullopt)
        : n(n_), p(std::move(p_)), mu(std::move(mu_)), c1(std::move(c1_)) {
        validate();
    }

    void validate() const {
        if (n < 1) throw std::domain_error("ParamPoint: n must be >= 1");
        if (p == QField(1)) throw std::domain_error("p=1 excluded");
    }

    ParamPoint with_c1(const QField& c) const {
        ParamPoint q = *this;
        q.c1 = c;
        return q;
    }

    /// Coordinates in the (n, p, mu, c1) evaluation order; c1 defaults to 0.
    std::array<QField, 4> coords() const {
        return {QField(Rat(n)), p, mu, c1 ? *c1 : QField(0)};
    }
};

}  // namespace crep
