#pragma once

/**
 * @file diffform.hpp
 * @brief Differential forms over two symbolic axes a, b.
 *
 * A monomial is a power of u times a product of mixed partials
 * u[i,j] = d^{i+j} u / d^i x_a d^j x_b, with the u-exponent affine in p
 * (e.g. u^(3p-6)). A form is a linear combination with rational-function
 * coefficients in the parameters. "Degree" counts factors including the
 * u-power, "total order" weights each factor by its derivative order; the
 * pipeline lives in the degree-4 / total-order-4 slice.
 */

#include <crep/ratfunc.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crep {

enum class Axis { a, b };

/// One derivative symbol u[i,j]; (0,0) denotes u itself and never appears
/// in a monomial's derivative map. Orders are capped at i+j <= 4.
struct DerivSymbol {
    int da = 0;
    int db = 0;

    DerivSymbol() = default;
    DerivSymbol(int i, int j);

    int order() const { return da + db; }
    DerivSymbol raised(Axis ax) const {
        return ax == Axis::a ? DerivSymbol(da + 1, db) : DerivSymbol(da, db + 1);
    }
    DerivSymbol transposed() const { return DerivSymbol(db, da); }

    auto operator<=>(const DerivSymbol&) const = default;

    std::string str() const;    // "u[1,0]"
    std::string latex() const;  // "u_{1,0}"
};

/// Exponent of the u factor: coeff_p * p + constant.
struct UPower {
    int coeff_p = 0;
    Rat constant;

    UPower() = default;
    UPower(int cp, Rat c) : coeff_p(cp), constant(std::move(c)) {}
    static UPower integer(long k) { return UPower(0, Rat(k)); }

    bool is_zero() const { return coeff_p == 0 && constant.is_zero(); }
    bool is_integer() const { return coeff_p == 0 && constant.is_integer(); }
    UPower operator+(const UPower& o) const {
        return UPower(coeff_p + o.coeff_p, constant + o.constant);
    }
    UPower operator-(const UPower& o) const {
        return UPower(coeff_p - o.coeff_p, constant - o.constant);
    }
    /// The exponent as a polynomial in p (used by the power rule).
    ParamPoly as_poly() const;

    bool operator==(const UPower& o) const {
        return coeff_p == o.coeff_p && constant == o.constant;
    }
    bool operator<(const UPower& o) const {
        if (coeff_p != o.coeff_p) return coeff_p < o.coeff_p;
        return constant < o.constant;
    }

    std::string str() const;    // "3p-6"
    std::string latex() const;  // "3p-6"
};

struct DiffMonomial {
    UPower upower;
    std::map<DerivSymbol, int> derivs;  // symbol -> positive exponent

    bool operator==(const DiffMonomial& o) const {
        return upower == o.upower && derivs == o.derivs;
    }
    bool operator<(const DiffMonomial& o) const {
        if (!(upower == o.upower)) return upower < o.upower;
        return derivs < o.derivs;
    }

    DiffMonomial operator*(const DiffMonomial& o) const;
    DiffMonomial transposed() const;
    int max_order() const;

    std::string str() const;
    std::string latex() const;
};

/// Builds u^k * prod u[i,j]^e from an explicit list.
DiffMonomial make_monomial(UPower up,
                           std::initializer_list<std::pair<DerivSymbol, int>> factors);
DiffMonomial make_monomial(long uexp,
                           std::initializer_list<std::pair<DerivSymbol, int>> factors);

/// (degree, total order): degree counts u-factors too, so the u-exponent
/// must be a nonnegative integer here.
std::pair<long, long> degree_total_order(const DiffMonomial& m);

/// The six quadratic monomials m1..m6 (degree 2, total order 2).
enum class QuadMono : int { m1 = 1, m2, m3, m4, m5, m6 };
DiffMonomial quad_mono(QuadMono q);
const char* quad_mono_name(QuadMono q);

/// Unique factorization into a product of two of m1..m6 when one exists
/// (pairs are scanned in index order, so u01^2 u10^2 resolves to m4*m6).
std::optional<std::pair<QuadMono, QuadMono>> to_quadratic(const DiffMonomial& m);

/// Total order for elimination: every non-quadratic monomial is strictly
/// greater than every quadratic one; ties break by graded lex over the
/// derivative exponent vector with u[i,j] ranked by (i+j, then i).
struct OrderKey {
    int nonquad = 0;
    int grade = 0;
    std::vector<int> exps;  // highest-ranked symbol first
    auto operator<=>(const OrderKey&) const = default;
};
OrderKey monomial_key(const DiffMonomial& m);

class DiffForm {
public:
    using TermMap = std::map<DiffMonomial, RatFunc>;

    DiffForm() = default;
    static DiffForm monomial(const DiffMonomial& m, const RatFunc& c = RatFunc(1));
    /// The bare power u^alpha.
    static DiffForm upow(const UPower& alpha);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    RatFunc coeff(const DiffMonomial& m) const;
    void add_term(const DiffMonomial& m, const RatFunc& c);

    DiffForm operator-() const;
    DiffForm operator+(const DiffForm& o) const;
    DiffForm operator-(const DiffForm& o) const;
    DiffForm operator*(const DiffForm& o) const;
    DiffForm operator*(const RatFunc& c) const;
    DiffForm& operator+=(const DiffForm& o) { *this = *this + o; return *this; }
    DiffForm& operator-=(const DiffForm& o) { *this = *this - o; return *this; }
    DiffForm& operator*=(const DiffForm& o) { *this = *this * o; return *this; }

    bool operator==(const DiffForm& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffForm& o) const { return !(*this == o); }

    /// Multiplies every monomial's u-exponent shift: form * u^alpha.
    DiffForm shifted(const UPower& alpha) const;
    /// Swaps the two axes (u[i,j] -> u[j,i]).
    DiffForm transposed() const;
    /// Identifies the axes (u[i,j] -> u[i+j,0]); the diagonal a = b case.
    DiffForm diagonal() const;
    /// Applies fn to every coefficient, dropping zeros.
    DiffForm map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const;

    /// Leading (greatest) monomial under monomial_key.
    const DiffMonomial& leading_monomial() const;

    std::string str() const;
    std::string latex() const;

private:
    TermMap terms_;
};

inline DiffForm operator*(const RatFunc& c, const DiffForm& f) { return f * c; }

/// d/dx_axis with the Leibniz and power rules; derivative orders above 4
/// throw "derivative order cap exceeded".
DiffForm differentiate(const DiffForm& f, Axis axis);

/// All degree-4 / total-order-4 monomials over the two axes (33 of them,
/// derivative order up to 4, u-exponent a plain integer).
std::vector<DiffMonomial> enumerate_deg4_monomials();

}  // namespace crep
