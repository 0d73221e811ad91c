#pragma once

/**
 * @file qfield.hpp
 * @brief Exact arithmetic in the real quadratic field Q(sqrt(17)).
 *
 * A value is a + b*sqrt(17) with a, b rational; the pair (a, b) is the
 * unique representation since sqrt(17) is irrational. Sign determination
 * is exact (integer comparisons only, never floating point).
 *
 * Serialized as "a/b+c/d*sqrt(17)" with zero parts omitted.
 */

#include <crep/rat.hpp>

#include <optional>
#include <string>

namespace crep {

class QField {
public:
    QField() = default;
    QField(const Rat& a) : a_(a) {}
    QField(int a) : a_(a) {}
    QField(long long a) : a_(a) {}
    QField(const Rat& a, const Rat& b) : a_(a), b_(b) {}

    static QField sqrt17() { return QField(Rat(0), Rat(1)); }

    /// Parses "a/b", "c/d*sqrt(17)", or "a/b+c/d*sqrt(17)" (also with '-').
    static QField parse(const std::string& s);

    const Rat& rational_part() const { return a_; }
    const Rat& surd_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Exact rational value; throws if the sqrt(17) part is nonzero.
    const Rat& to_rat() const {
        if (!b_.is_zero()) throw std::domain_error("QField: value is irrational");
        return a_;
    }

    QField operator-() const { return QField(-a_, -b_); }
    QField operator+(const QField& o) const { return QField(a_ + o.a_, b_ + o.b_); }
    QField operator-(const QField& o) const { return QField(a_ - o.a_, b_ - o.b_); }
    QField operator*(const QField& o) const {
        return QField(a_ * o.a_ + Rat(17) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    QField inv() const;
    QField operator/(const QField& o) const { return *this * o.inv(); }

    QField& operator+=(const QField& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QField& operator-=(const QField& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QField& operator*=(const QField& o) { *this = *this * o; return *this; }
    QField& operator/=(const QField& o) { *this = *this / o; return *this; }

    /// Exact sign: -1, 0, or +1.
    int sign() const;

    bool operator==(const QField& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QField& o) const { return !(*this == o); }
    bool operator<(const QField& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QField& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QField& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QField& o) const { return (*this - o).sign() >= 0; }

    QField pow(unsigned e) const;

    /// Largest integer <= *this (exact).
    mpz_class floor() const;

    std::string str() const;

private:
    Rat a_;  // rational part
    Rat b_;  // coefficient of sqrt(17)
};

inline QField abs(const QField& x) { return x.sign() < 0 ? -x : x; }

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
/// Returns nothing when the interval contains no rational (lo == hi irrational).
std::optional<Rat> simplest_rational_in(const QField& lo, const QField& hi);

}  // namespace crep
