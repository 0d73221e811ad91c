#pragma once

/**
 * @file ratfunc.hpp
 * @brief Reduced rational functions over the parameter polynomial ring.
 *
 * Invariants: gcd(num, den) = 1, den not identically zero, and den is
 * monic in its lex leading coefficient. Construction always reduces, so
 * equality is componentwise.
 */

#include <crep/poly.hpp>

namespace crep {

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const ParamPoly& num) : num_(num), den_(1) {}
    RatFunc(const QField& c) : num_(c), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const ParamPoly& num, const ParamPoly& den) { assign(num, den); }

    static RatFunc variable(Var v) { return RatFunc(ParamPoly::variable(v)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == ParamPoly(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    QField constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    RatFunc pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e)); }
    RatFunc inv() const { return RatFunc(den_, num_); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Exact evaluation; throws a pole error naming the vanishing denominator.
    QField eval(const std::array<QField, 4>& x) const;

    /// Substitutes val for v (exactly); the other variables stay symbolic.
    RatFunc substitute(Var v, const RatFunc& val) const;

    std::string str() const;
    std::string latex() const;

private:
    void assign(const ParamPoly& num, const ParamPoly& den);
    ParamPoly num_, den_;
};

/// Horner substitution of val for v in a polynomial.
RatFunc poly_substitute(const ParamPoly& f, Var v, const RatFunc& val);

}  // namespace crep
