#include <crep/diffform.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crep {

DerivSymbol::DerivSymbol(int i, int j) : da(i), db(j) {
    if (i < 0 || j < 0) throw std::domain_error("DerivSymbol: negative order");
    if (i + j > 4) throw std::domain_error("derivative order cap exceeded");
}

std::string DerivSymbol::str() const {
    return "u[" + std::to_string(da) + "," + std::to_string(db) + "]";
}

std::string DerivSymbol::latex() const {
    return "u_{" + std::to_string(da) + "," + std::to_string(db) + "}";
}

ParamPoly UPower::as_poly() const {
    return ParamPoly(QField(constant)) +
           ParamPoly(coeff_p) * ParamPoly::variable(Var::p);
}

std::string UPower::str() const {
    if (coeff_p == 0) return constant.str();
    std::string s;
    if (coeff_p == -1) s = "-p";
    else if (coeff_p == 1) s = "p";
    else s = std::to_string(coeff_p) + "p";
    if (!constant.is_zero())
        s += (constant.sign() > 0 ? "+" : "-") + constant.abs().str();
    return s;
}

std::string UPower::latex() const { return str(); }

DiffMonomial DiffMonomial::operator*(const DiffMonomial& o) const {
    DiffMonomial r;
    r.upower = upower + o.upower;
    r.derivs = derivs;
    for (const auto& [v, e] : o.derivs) r.derivs[v] += e;
    return r;
}

DiffMonomial DiffMonomial::transposed() const {
    DiffMonomial r;
    r.upower = upower;
    for (const auto& [v, e] : derivs) r.derivs[v.transposed()] += e;
    return r;
}

int DiffMonomial::max_order() const {
    int m = 0;
    for (const auto& [v, e] : derivs) m = std::max(m, v.order());
    return m;
}

std::string DiffMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    if (!upower.is_zero()) {
        os << "u";
        if (!(upower == UPower::integer(1))) os << "^(" << upower.str() << ")";
        first = false;
    }
    for (const auto& [v, e] : derivs) {
        if (!first) os << " * ";
        os << v.str();
        if (e > 1) os << "^" << e;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string DiffMonomial::latex() const {
    std::ostringstream os;
    if (!upower.is_zero()) {
        os << "u";
        if (!(upower == UPower::integer(1))) os << "^{" << upower.latex() << "}";
    }
    for (const auto& [v, e] : derivs) {
        os << v.latex();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

DiffMonomial make_monomial(UPower up,
                           std::initializer_list<std::pair<DerivSymbol, int>> factors) {
    DiffMonomial m;
    m.upower = up;
    for (const auto& [v, e] : factors)
        if (e != 0) m.derivs[v] += e;
    return m;
}

DiffMonomial make_monomial(long uexp,
                           std::initializer_list<std::pair<DerivSymbol, int>> factors) {
    return make_monomial(UPower::integer(uexp), factors);
}

std::pair<long, long> degree_total_order(const DiffMonomial& m) {
    if (!m.upower.is_integer() || m.upower.constant.sign() < 0)
        throw std::domain_error("degree_total_order: u-exponent not a nonnegative integer");
    long deg = static_cast<long>(m.upower.constant.num().get_si());
    long tot = 0;
    for (const auto& [v, e] : m.derivs) {
        deg += e;
        tot += static_cast<long>(e) * v.order();
    }
    return {deg, tot};
}

DiffMonomial quad_mono(QuadMono q) {
    switch (q) {
        case QuadMono::m1: return make_monomial(1, {{DerivSymbol(0, 2), 1}});
        case QuadMono::m2: return make_monomial(1, {{DerivSymbol(1, 1), 1}});
        case QuadMono::m3: return make_monomial(1, {{DerivSymbol(2, 0), 1}});
        case QuadMono::m4: return make_monomial(0, {{DerivSymbol(0, 1), 2}});
        case QuadMono::m5:
            return make_monomial(0, {{DerivSymbol(1, 0), 1}, {DerivSymbol(0, 1), 1}});
        case QuadMono::m6: return make_monomial(0, {{DerivSymbol(1, 0), 2}});
    }
    throw std::logic_error("quad_mono: bad index");
}

const char* quad_mono_name(QuadMono q) {
    static const char* names[] = {"m1", "m2", "m3", "m4", "m5", "m6"};
    return names[static_cast<int>(q) - 1];
}

std::optional<std::pair<QuadMono, QuadMono>> to_quadratic(const DiffMonomial& m) {
    if (m.max_order() >= 3) return std::nullopt;
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j) {
            QuadMono qi = static_cast<QuadMono>(i), qj = static_cast<QuadMono>(j);
            if (quad_mono(qi) * quad_mono(qj) == m) return std::make_pair(qi, qj);
        }
    return std::nullopt;
}

namespace {

// u[i,j] with 1 <= i+j <= 4 ranked by (i+j, then i); 14 symbols.
const std::vector<DerivSymbol>& ranked_symbols() {
    static const std::vector<DerivSymbol> syms = [] {
        std::vector<DerivSymbol> v;
        for (int h = 1; h <= 4; ++h)
            for (int i = 0; i <= h; ++i) v.push_back(DerivSymbol(i, h - i));
        return v;
    }();
    return syms;
}

}  // namespace

OrderKey monomial_key(const DiffMonomial& m) {
    OrderKey k;
    k.nonquad = to_quadratic(m) ? 0 : 1;
    const auto& syms = ranked_symbols();
    k.exps.assign(syms.size(), 0);
    for (const auto& [v, e] : m.derivs) {
        auto it = std::find(syms.begin(), syms.end(), v);
        k.exps[syms.size() - 1 - static_cast<std::size_t>(it - syms.begin())] = e;
        k.grade += e;
    }
    return k;
}

DiffForm DiffForm::monomial(const DiffMonomial& m, const RatFunc& c) {
    DiffForm f;
    f.add_term(m, c);
    return f;
}

DiffForm DiffForm::upow(const UPower& alpha) {
    DiffMonomial m;
    m.upower = alpha;
    return monomial(m);
}

RatFunc DiffForm::coeff(const DiffMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc() : it->second;
}

void DiffForm::add_term(const DiffMonomial& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffForm DiffForm::operator-() const {
    DiffForm r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
    DiffForm r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const {
    DiffForm r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

DiffForm DiffForm::operator*(const DiffForm& o) const {
    DiffForm r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

DiffForm DiffForm::operator*(const RatFunc& c) const {
    DiffForm r;
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.add_term(m, coef * c);
    return r;
}

DiffForm DiffForm::shifted(const UPower& alpha) const {
    DiffForm r;
    for (const auto& [m, c] : terms_) {
        DiffMonomial shifted = m;
        shifted.upower = m.upower + alpha;
        r.add_term(shifted, c);
    }
    return r;
}

DiffForm DiffForm::transposed() const {
    DiffForm r;
    for (const auto& [m, c] : terms_) r.add_term(m.transposed(), c);
    return r;
}

DiffForm DiffForm::diagonal() const {
    DiffForm r;
    for (const auto& [m, c] : terms_) {
        DiffMonomial d;
        d.upower = m.upower;
        for (const auto& [v, e] : m.derivs) d.derivs[DerivSymbol(v.order(), 0)] += e;
        r.add_term(d, c);
    }
    return r;
}

DiffForm DiffForm::map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const {
    DiffForm r;
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
}

const DiffMonomial& DiffForm::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("DiffForm: leading monomial of zero");
    const DiffMonomial* best = nullptr;
    OrderKey best_key;
    for (const auto& [m, c] : terms_) {
        OrderKey k = monomial_key(m);
        if (!best || best_key < k) {
            best = &m;
            best_key = k;
        }
    }
    return *best;
}

namespace {

std::string render(const DiffForm& f, bool latex) {
    if (f.is_zero()) return "0";
    // Heads first: sort descending by monomial key.
    std::vector<const std::pair<const DiffMonomial, RatFunc>*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [](auto* x, auto* y) {
        return monomial_key(y->first) < monomial_key(x->first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : terms) {
        const RatFunc& c = t->second;
        if (latex) {
            // Expand polynomial coefficients term by term, appendix style.
            if (c.is_polynomial()) {
                ParamPoly poly = c.num();
                std::string body = t->first.latex();
                std::string rendered = poly.latex();
                bool composite = poly.terms().size() > 1;
                if (!first) os << (rendered[0] == '-' && !composite ? "" : "+");
                if (composite) {
                    os << (first ? "" : "") << "\\left(" << rendered << "\\right)" << body;
                } else if (rendered == "1") {
                    os << body;
                } else if (rendered == "-1") {
                    os << "-" << body;
                } else {
                    os << rendered << body;
                }
            } else {
                if (!first) os << "+";
                os << c.latex() << t->first.latex();
            }
            first = false;
        } else {
            std::string cs = c.str();
            bool composite = cs.find(' ') != std::string::npos ||
                             (!c.is_constant() || !c.constant_value().is_rational());
            if (!first) os << " + ";
            if (cs == "1") {
                os << t->first.str();
            } else if (composite) {
                os << "(" << cs << ") * " << t->first.str();
            } else {
                os << cs << " * " << t->first.str();
            }
            first = false;
        }
    }
    return os.str();
}

}  // namespace

std::string DiffForm::str() const { return render(*this, false); }
std::string DiffForm::latex() const { return render(*this, true); }

DiffForm differentiate(const DiffForm& f, Axis axis) {
    DiffForm out;
    const RatFunc p = RatFunc::variable(Var::p);
    for (const auto& [m, c] : f.terms()) {
        // Power rule on u^alpha.
        if (!m.upower.is_zero()) {
            DiffMonomial t = m;
            t.upower = m.upower - UPower::integer(1);
            t.derivs[DerivSymbol().raised(axis)] += 1;
            out.add_term(t, c * RatFunc(m.upower.as_poly()));
        }
        // Leibniz over the derivative factors.
        for (const auto& [v, e] : m.derivs) {
            DiffMonomial t = m;
            if (--t.derivs[v] == 0) t.derivs.erase(v);
            t.derivs[v.raised(axis)] += 1;
            out.add_term(t, c * RatFunc(e));
        }
    }
    return out;
}

std::vector<DiffMonomial> enumerate_deg4_monomials() {
    // All multisets of derivative symbols (order >= 1) with total order 4 and
    // at most 4 factors; u-exponent fills degree up to 4.
    std::vector<DerivSymbol> syms;
    for (int h = 1; h <= 4; ++h)
        for (int i = 0; i <= h; ++i) syms.push_back(DerivSymbol(i, h - i));

    std::vector<DiffMonomial> out;
    std::map<DerivSymbol, int> current;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int deg,
                                                         int tot) {
        if (tot == 4) {
            if (deg <= 4) {
                DiffMonomial m;
                m.upower = UPower::integer(4 - deg);
                m.derivs = current;
                out.push_back(m);
            }
            return;
        }
        if (idx == syms.size() || deg == 4) return;
        rec(idx + 1, deg, tot);
        DerivSymbol v = syms[idx];
        int added = 0;
        while (tot + (added + 1) * v.order() <= 4 && deg + added + 1 <= 4) {
            ++added;
            ++current[v];
            rec(idx + 1, deg + added, tot + added * v.order());
        }
        if (added) {
            current[v] -= added;
            if (current[v] == 0) current.erase(v);
        }
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end(),
              [](const DiffMonomial& x, const DiffMonomial& y) {
                  return monomial_key(x) < monomial_key(y);
              });
    return out;
}

}  // namespace crep
