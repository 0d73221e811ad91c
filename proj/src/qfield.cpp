#include <crep/qfield.hpp>

namespace crep {

QField QField::inv() const {
    // 1/(a + b*s) = (a - b*s)/(a^2 - 17 b^2); the norm vanishes only at 0
    // because sqrt(17) is irrational.
    if (is_zero()) throw std::domain_error("QField: inverse of zero");
    Rat norm = a_ * a_ - Rat(17) * b_ * b_;
    return QField(a_ / norm, -b_ / norm);
}

int QField::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against 17 b^2.
    Rat lhs = a_ * a_, rhs = Rat(17) * b_ * b_;
    if (lhs == rhs) return 0;  // unreachable: would make sqrt(17) rational
    bool rational_dominates = lhs > rhs;
    return rational_dominates ? sa : sb;
}

QField QField::pow(unsigned e) const {
    QField r(1);
    QField base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

mpz_class QField::floor() const {
    if (b_.is_zero()) return a_.floor();
    // Start from a certified rational bracket of sqrt(17) (continued-fraction
    // convergents 17684/4289 < sqrt(17) < 143649/34840), then fix up with
    // exact sign tests.
    static const Rat lo_s17(17684, 4289), hi_s17(143649, 34840);
    Rat approx = a_ + b_ * (b_.sign() > 0 ? lo_s17 : hi_s17);
    mpz_class k = approx.floor();
    while ((*this - QField(Rat(mpz_class(k + 1)))).sign() >= 0) k += 1;
    while ((*this - QField(Rat(k))).sign() < 0) k -= 1;
    return k;
}

std::string QField::str() const {
    if (b_.is_zero()) return a_.str();
    std::string surd = b_.abs().is_one() ? std::string("sqrt(17)")
                                         : b_.abs().str() + "*sqrt(17)";
    std::string sgn = b_.sign() < 0 ? "-" : "";
    if (a_.is_zero()) return sgn + surd;
    return a_.str() + (b_.sign() < 0 ? "-" : "+") + surd;
}

QField QField::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("QField: empty string");
    auto star = s.find("sqrt(17)");
    if (star == std::string::npos) return QField(Rat::parse(s));

    // Split "<rat><sign><coef>*sqrt(17)"; the sign separator is the last
    // '+'/'-' before the surd that is not the leading sign of the string.
    std::string head = s.substr(0, star);
    if (!head.empty() && head.back() == '*') head.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if (head[i] == '+' || head[i] == '-') { split = i; break; }
    }
    std::string a_str, b_str;
    if (split == std::string::npos) {
        a_str = "0";
        b_str = head;
    } else {
        a_str = head.substr(0, split);
        b_str = head.substr(split);  // keeps the sign
        if (b_str == "+" || b_str == "-") b_str += "1";
    }
    if (b_str.empty() || b_str == "+") b_str = "1";
    if (b_str == "-") b_str = "-1";
    if (!b_str.empty() && b_str.front() == '+') b_str.erase(0, 1);
    return QField(Rat::parse(a_str), Rat::parse(b_str));
}

std::optional<Rat> simplest_rational_in(const QField& lo, const QField& hi) {
    if ((hi - lo).sign() < 0) return std::nullopt;
    if (lo == hi) {
        if (lo.is_rational()) return lo.rational_part();
        return std::nullopt;
    }
    // Integer in range? Pick the one nearest zero.
    mpz_class ceil_lo = lo.floor();
    if ((lo - QField(Rat(ceil_lo))).sign() != 0) ceil_lo += 1;
    if ((hi - QField(Rat(ceil_lo))).sign() >= 0) {
        mpz_class pick = ceil_lo;
        if (ceil_lo < 0) {
            mpz_class floor_hi = hi.floor();
            pick = floor_hi < 0 ? floor_hi : mpz_class(0);
        }
        return Rat(pick);
    }
    // Both endpoints lie strictly between k and k+1: recurse on reciprocals
    // (Stern-Brocot descent).
    mpz_class k = lo.floor();
    QField flo = lo - QField(Rat(k)), fhi = hi - QField(Rat(k));
    auto inner = simplest_rational_in(fhi.inv(), flo.inv());
    if (!inner) return std::nullopt;
    return Rat(k) + inner->inv();
}

}  // namespace crep
