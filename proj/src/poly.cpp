#include <crep/poly.hpp>

#include <sstream>
#include <stdexcept>

namespace crep {

void ParamPoly::add_term(const Exp& e, const QField& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int ParamPoly::degree(Var v) const {
    int i = static_cast<int>(v), d = 0;
    for (const auto& [e, c] : terms_)
        if (e[i] > d) d = e[i];
    return d;
}

std::pair<Exp, QField> ParamPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("ParamPoly: leading term of zero");
    return *terms_.rbegin();
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
            r.add_term(e, c1 * c2);
        }
    return r;
}

ParamPoly ParamPoly::operator*(const QField& c) const {
    ParamPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly r(1);
    ParamPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::map<int, ParamPoly> ParamPoly::collect(Var v) const {
    int i = static_cast<int>(v);
    std::map<int, ParamPoly> out;
    for (const auto& [e, c] : terms_) {
        Exp rest = e;
        int k = rest[i];
        rest[i] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

ParamPoly ParamPoly::assemble(Var v, const std::map<int, ParamPoly>& coeffs) {
    int i = static_cast<int>(v);
    ParamPoly r;
    for (const auto& [k, poly] : coeffs)
        for (const auto& [e, c] : poly.terms()) {
            Exp full = e;
            full[i] += k;
            r.add_term(full, c);
        }
    return r;
}

QField ParamPoly::eval(const std::array<QField, 4>& x) const {
    QField acc(0);
    for (const auto& [e, c] : terms_) {
        QField t = c;
        for (int i = 0; i < 4; ++i)
            if (e[i] > 0) t *= x[i].pow(static_cast<unsigned>(e[i]));
        acc += t;
    }
    return acc;
}

namespace {

std::string format_terms(const ParamPoly& f, bool latex) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print in descending lex order so the n/p-heavy head comes first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            if (neg) { os << (latex ? "-" : " - "); cs = cs.substr(1); }
            else os << (latex ? "+" : " + ");
        }
        first = false;
        bool has_vars = e != Exp{0, 0, 0, 0};
        bool unit = (cs == "1");
        // Only surd-bearing coefficients carry an inner sign and need parens.
        std::string coef = c.is_rational() ? cs : "(" + cs + ")";
        if (!unit || !has_vars) os << coef;
        bool printed = !unit || !has_vars;
        static const char* names[4] = {"n", "p", "mu", "c1"};
        static const char* lnames[4] = {"n", "p", "\\mu", "c_1"};
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (printed && !latex) os << "*";
            os << (latex ? lnames[i] : names[i]);
            if (e[i] > 1) os << "^" << (latex ? "{" : "") << e[i] << (latex ? "}" : "");
            printed = true;
        }
    }
    return os.str();
}

}  // namespace

std::string ParamPoly::str() const { return format_terms(*this, false); }
std::string ParamPoly::latex() const { return format_terms(*this, true); }

ParamPoly exact_div(const ParamPoly& f, const ParamPoly& g) {
    if (g.is_zero()) throw std::domain_error("ParamPoly: division by zero");
    ParamPoly rem = f, quot;
    if (rem.is_zero()) return quot;
    auto [ge, gc] = g.leading();
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading();
        Exp qe;
        for (int i = 0; i < 4; ++i) {
            qe[i] = re[i] - ge[i];
            if (qe[i] < 0) throw std::domain_error("ParamPoly: inexact division");
        }
        ParamPoly t = ParamPoly::monomial(qe, rc / gc);
        quot += t;
        rem -= t * g;
    }
    return quot;
}

namespace {

// Pseudo-remainder of a by b with respect to v: lc(b)^(da-db+1) * a mod b.
ParamPoly prem(const ParamPoly& a, const ParamPoly& b, Var v) {
    auto bc = b.collect(v);
    int db = bc.rbegin()->first;
    const ParamPoly& lcb = bc.rbegin()->second;

    auto rc = a.collect(v);
    int e = (rc.empty() ? 0 : rc.rbegin()->first) - db + 1;
    ParamPoly r = a;
    while (!r.is_zero()) {
        auto rcoll = r.collect(v);
        int dr = rcoll.rbegin()->first;
        if (dr < db) break;
        const ParamPoly& lcr = rcoll.rbegin()->second;
        ParamPoly shift = ParamPoly::variable(v).pow(static_cast<unsigned>(dr - db));
        r = r * lcb - b * (lcr * shift);
        --e;
    }
    if (e > 0) r = r * lcb.pow(static_cast<unsigned>(e));
    return r;
}

ParamPoly gcd_impl(ParamPoly f, ParamPoly g, int level);

// Content of f seen as a polynomial in v: gcd of its v-coefficients.
ParamPoly content_wrt(const ParamPoly& f, Var v, int level) {
    ParamPoly c;
    for (const auto& [k, coef] : f.collect(v)) {
        c = c.is_zero() ? coef : gcd_impl(c, coef, level + 1);
        if (c.is_constant() && !c.is_zero()) return ParamPoly(1);
    }
    return c;
}

// Recursion levels follow the elimination order c1, mu, p, n.
const Var kElimOrder[4] = {Var::c1, Var::mu, Var::p, Var::n};

ParamPoly normalize_monic(const ParamPoly& f) {
    if (f.is_zero()) return f;
    return f * f.leading().second.inv();
}

ParamPoly gcd_impl(ParamPoly f, ParamPoly g, int level) {
    if (f.is_zero()) return normalize_monic(g);
    if (g.is_zero()) return normalize_monic(f);
    if (f.is_constant() || g.is_constant()) return ParamPoly(1);

    // Pick the first variable in the elimination order either side uses.
    Var v = Var::n;
    bool found = false;
    for (int i = level; i < 4 && !found; ++i) {
        if (f.depends_on(kElimOrder[i]) || g.depends_on(kElimOrder[i])) {
            v = kElimOrder[i];
            level = i;
            found = true;
        }
    }
    if (!found) return ParamPoly(1);
    if (!f.depends_on(v) || !g.depends_on(v)) {
        // v occurs on one side only: gcd divides that side's v-content.
        ParamPoly cf = f.depends_on(v) ? content_wrt(f, v, level) : f;
        ParamPoly cg = g.depends_on(v) ? content_wrt(g, v, level) : g;
        return gcd_impl(cf, cg, level + 1);
    }

    ParamPoly cont_f = content_wrt(f, v, level);
    ParamPoly cont_g = content_wrt(g, v, level);
    ParamPoly a = exact_div(f, cont_f);
    ParamPoly b = exact_div(g, cont_g);
    ParamPoly cont = gcd_impl(cont_f, cont_g, level + 1);

    if (a.degree(v) < b.degree(v)) std::swap(a, b);

    // Subresultant PRS (Brown-Traub beta factors keep divisions exact).
    ParamPoly h(1), lc(1);
    while (true) {
        int da = a.degree(v), db = b.degree(v);
        int delta = da - db;
        ParamPoly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            b = ParamPoly(1);
            break;
        }
        ParamPoly divisor = lc * h.pow(static_cast<unsigned>(delta));
        a = b;
        b = exact_div(r, divisor);
        lc = a.collect(v).rbegin()->second;
        if (delta > 0)
            h = delta == 1 ? lc
                           : exact_div(lc.pow(static_cast<unsigned>(delta)),
                                       h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.degree(v) == 0) return normalize_monic(cont);
    ParamPoly pp_b = exact_div(b, content_wrt(b, v, level));
    return normalize_monic(cont * pp_b);
}

}  // namespace

ParamPoly poly_gcd(const ParamPoly& f, const ParamPoly& g) {
    return gcd_impl(f, g, 0);
}

}  // namespace crep
