#include <crep/ratfunc.hpp>

#include <stdexcept>

namespace crep {

void RatFunc::assign(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) {
        num_ = ParamPoly();
        den_ = ParamPoly(1);
        return;
    }
    ParamPoly g = poly_gcd(num, den);
    ParamPoly n = exact_div(num, g);
    ParamPoly d = exact_div(den, g);
    QField lead = d.leading().second;
    num_ = n * lead.inv();
    den_ = d * lead.inv();
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

QField RatFunc::eval(const std::array<QField, 4>& x) const {
    QField d = den_.eval(x);
    if (d.is_zero())
        throw std::domain_error("pole: denominator " + den_.str() + " vanishes");
    return num_.eval(x) / d;
}

RatFunc poly_substitute(const ParamPoly& f, Var v, const RatFunc& val) {
    auto coeffs = f.collect(v);
    RatFunc acc;
    int prev = -1;
    // Horner from the highest power down.
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (prev >= 0)
            acc = acc * val.pow(static_cast<unsigned>(prev - it->first));
        acc += RatFunc(it->second);
        prev = it->first;
    }
    if (prev > 0) acc = acc * val.pow(static_cast<unsigned>(prev));
    return acc;
}

RatFunc RatFunc::substitute(Var v, const RatFunc& val) const {
    RatFunc n = poly_substitute(num_, v, val);
    RatFunc d = poly_substitute(den_, v, val);
    if (d.is_zero())
        throw std::domain_error("pole: denominator " + den_.str() +
                                " vanishes under substitution");
    return n / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string RatFunc::latex() const {
    if (is_polynomial()) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

}  // namespace crep
