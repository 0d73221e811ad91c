#pragma once

/**
 * @file rat.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Thin value wrapper over GMP's mpq_class. Always canonical:
 * gcd(|num|, den) = 1 and den > 0. Serializes as "a/b" ("/b" omitted
 * when b = 1).
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crep {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long long n) : v_(static_cast<long>(n)) {}
    Rat(long long num, long long den)
        : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}
    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }

    /// Parses "a", "-a", or "a/b". Throws on malformed input.
    static Rat parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), tag{}); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_), tag{}); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_), tag{}); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_), tag{}); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_), tag{});
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat pow(unsigned e) const;
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_), tag{});
    }

    /// Largest integer <= *this.
    mpz_class floor() const;

    std::string str() const;

private:
    struct tag {};
    Rat(mpq_class q, tag) : v_(std::move(q)) {}  // already canonical
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

}  // namespace crep
