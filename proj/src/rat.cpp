#include <crep/rat.hpp>

namespace crep {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) {
            mpz_class n(s);
            return Rat(n);
        }
        mpz_class n(s.substr(0, pos));
        mpz_class d(s.substr(pos + 1));
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: malformed rational '" + s + "'");
    }
}

Rat Rat::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    Rat r;
    r.v_ = mpq_class(n, d);  // powers of a canonical fraction stay canonical
    return r;
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace crep
