#pragma once

/**
 * @file poly.hpp
 * @brief Exact multivariate polynomials in the parameters {n, p, mu, c1}.
 *
 * Coefficients live in Q(sqrt(17)) so every constant of the parameter
 * tables is expressible symbolically; plain rational polynomials are the
 * special case with zero surd parts. Terms are kept in a sorted map under
 * lex order (n > p > mu > c1) with no zero coefficients stored.
 */

#include <crep/qfield.hpp>

#include <array>
#include <map>
#include <string>

namespace crep {

enum class Var : int { n = 0, p = 1, mu = 2, c1 = 3 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::n: return "n";
        case Var::p: return "p";
        case Var::mu: return "mu";
        case Var::c1: return "c1";
    }
    return "?";
}

using Exp = std::array<int, 4>;

struct ExpLexLess {
    bool operator()(const Exp& a, const Exp& b) const { return a < b; }
};

class ParamPoly {
public:
    using TermMap = std::map<Exp, QField, ExpLexLess>;

    ParamPoly() = default;
    ParamPoly(const QField& c) { add_term(Exp{0, 0, 0, 0}, c); }
    ParamPoly(int c) : ParamPoly(QField(c)) {}
    static ParamPoly variable(Var v) {
        ParamPoly r;
        Exp e{0, 0, 0, 0};
        e[static_cast<int>(v)] = 1;
        r.add_term(e, QField(1));
        return r;
    }
    static ParamPoly monomial(const Exp& e, const QField& c) {
        ParamPoly r;
        r.add_term(e, c);
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0, 0, 0});
    }
    QField constant_value() const {
        if (terms_.empty()) return QField(0);
        return terms_.begin()->second;
    }

    int degree(Var v) const;
    bool depends_on(Var v) const { return degree(v) > 0; }

    /// Leading term under the global lex order (largest exponent tuple).
    std::pair<Exp, QField> leading() const;

    void add_term(const Exp& e, const QField& c);

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { *this = *this + o; return *this; }
    ParamPoly& operator-=(const ParamPoly& o) { *this = *this - o; return *this; }
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    ParamPoly operator*(const QField& c) const;
    ParamPoly pow(unsigned e) const;

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    /// Coefficients of powers of v, as polynomials in the other variables.
    std::map<int, ParamPoly> collect(Var v) const;
    static ParamPoly assemble(Var v, const std::map<int, ParamPoly>& coeffs);

    QField eval(const std::array<QField, 4>& x) const;

    std::string str() const;
    std::string latex() const;

private:
    TermMap terms_;
};

inline ParamPoly operator*(const QField& c, const ParamPoly& f) { return f * c; }

/// Exact division; throws std::domain_error when g does not divide f.
ParamPoly exact_div(const ParamPoly& f, const ParamPoly& g);

/// GCD via fraction-free subresultant remainder sequences, recursing over
/// the fixed variable order c1, mu, p, n. Result is normalized monic in its
/// global lex leading coefficient.
ParamPoly poly_gcd(const ParamPoly& f, const ParamPoly& g);

}  // namespace crep
