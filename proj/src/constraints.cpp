#include <crep/constraints.hpp>

#include <algorithm>
#include <stdexcept>

namespace crep {

namespace {

const DerivSymbol u10(1, 0), u01(0, 1);
const DerivSymbol u20(2, 0), u11(1, 1), u02(0, 2);
const DerivSymbol u30(3, 0), u21(2, 1), u12(1, 2), u03(0, 3);
const DerivSymbol u40(4, 0), u31(3, 1), u22(2, 2), u13(1, 3), u04(0, 4);

RatFunc p_lin(int a, int b) {  // a*p + b
    return RatFunc(ParamPoly(a) * ParamPoly::variable(Var::p) + ParamPoly(b));
}

ParamPoly ppoly(std::initializer_list<std::pair<int, int>> terms) {
    // sum of c * p^k given as {k, c}
    ParamPoly f;
    for (auto [k, c] : terms) {
        Exp e{0, 0, 0, 0};
        e[static_cast<int>(Var::p)] = k;
        f.add_term(e, QField(c));
    }
    return f;
}

}  // namespace

DiffForm generate_ibp(const DiffMonomial& seed, const DerivSymbol& peel, Axis axis) {
    auto [deg, tot] = degree_total_order(seed);
    if (deg != 4 || tot != 4)
        throw std::domain_error("generate_ibp: seed must have degree 4, total order 4");
    auto it = seed.derivs.find(peel);
    if (it == seed.derivs.end())
        throw std::domain_error("generate_ibp: peel not a factor of seed");
    int along = axis == Axis::a ? peel.da : peel.db;
    if (along < 1)
        throw std::domain_error("generate_ibp: peeled factor has order 0 along axis");

    // Antiderivative of the peeled factor along the axis.
    DerivSymbol w = axis == Axis::a ? DerivSymbol(peel.da - 1, peel.db)
                                    : DerivSymbol(peel.da, peel.db - 1);

    // G = u^(3p-6) * seed / peel.
    DiffMonomial g = seed;
    if (--g.derivs[peel] == 0) g.derivs.erase(peel);
    g.upower = g.upower + UPower(3, Rat(-6));

    DiffForm dG = differentiate(DiffForm::monomial(g), axis);

    DiffMonomial w_mono;
    if (w.order() == 0) w_mono.upower = UPower::integer(1);
    else w_mono.derivs[w] = 1;

    DiffForm tail = (dG * DiffForm::monomial(w_mono)).shifted(UPower(-3, Rat(6)));
    return DiffForm::monomial(seed) + tail;
}

Constraint trace_constraint() {
    // I1_{a,b} = u^(6-2p) [ (d_a d_b u^(p-1))^2 - (1/n) (d_a^2 u^(p-1)) (d_b^2 u^(p-1)) ]
    DiffForm up = DiffForm::upow(UPower(1, Rat(-1)));
    DiffForm dab = differentiate(differentiate(up, Axis::a), Axis::b);
    DiffForm daa = differentiate(differentiate(up, Axis::a), Axis::a);
    DiffForm dbb = differentiate(differentiate(up, Axis::b), Axis::b);
    RatFunc inv_n = RatFunc(1) / RatFunc::variable(Var::n);
    DiffForm form = (dab * dab - inv_n * (daa * dbb)).shifted(UPower(-2, Rat(6)));
    return Constraint{form, Constraint::Kind::inequality, "I1"};
}

const std::vector<Constraint>& appendix_constraints() {
    static const std::vector<Constraint> list = [] {
        struct Term {
            int pc, cc;  // coefficient pc*p + cc
            DiffMonomial m;
        };
        auto M = [](long u, std::initializer_list<std::pair<DerivSymbol, int>> f) {
            return make_monomial(u, f);
        };
        std::vector<std::vector<Term>> data = {
            /* R1 */ {{3, -5, M(0, {{u10, 4}})}, {0, 3, M(1, {{u20, 1}, {u10, 2}})}},
            /* R2 */ {{3, -5, M(0, {{u01, 4}})}, {0, 3, M(1, {{u02, 1}, {u01, 2}})}},
            /* R3 */ {{3, -3, M(2, {{u10, 1}, {u30, 1}})}, {0, 1, M(3, {{u40, 1}})}},
            /* R4 */ {{3, -3, M(2, {{u01, 1}, {u30, 1}})}, {0, 1, M(3, {{u31, 1}})}},
            /* R5 */ {{3, -3, M(2, {{u10, 1}, {u21, 1}})}, {0, 1, M(3, {{u31, 1}})}},
            /* R6 */ {{3, -3, M(2, {{u01, 1}, {u21, 1}})}, {0, 1, M(3, {{u22, 1}})}},
            /* R7 */ {{3, -3, M(2, {{u10, 1}, {u12, 1}})}, {0, 1, M(3, {{u22, 1}})}},
            /* R8 */ {{3, -3, M(2, {{u01, 1}, {u12, 1}})}, {0, 1, M(3, {{u13, 1}})}},
            /* R9 */ {{3, -3, M(2, {{u10, 1}, {u03, 1}})}, {0, 1, M(3, {{u13, 1}})}},
            /* R10 */ {{3, -3, M(2, {{u01, 1}, {u03, 1}})}, {0, 1, M(3, {{u04, 1}})}},
            /* R11 */ {{3, -5, M(0, {{u01, 1}, {u10, 3}})}, {0, 3, M(1, {{u11, 1}, {u10, 2}})}},
            /* R12 */ {{3, -5, M(0, {{u01, 3}, {u10, 1}})}, {0, 3, M(1, {{u11, 1}, {u01, 2}})}},
            /* R13 */
            {{3, -5, M(0, {{u01, 2}, {u10, 2}})},
             {0, 2, M(1, {{u01, 1}, {u10, 1}, {u11, 1}})},
             {0, 1, M(1, {{u10, 2}, {u02, 1}})}},
            /* R14 */
            {{3, -4, M(1, {{u10, 2}, {u20, 1}})},
             {0, 1, M(2, {{u10, 1}, {u30, 1}})},
             {0, 1, M(2, {{u20, 2}})}},
            /* R15 */
            {{3, -4, M(1, {{u01, 1}, {u10, 1}, {u20, 1}})},
             {0, 1, M(2, {{u01, 1}, {u30, 1}})},
             {0, 1, M(2, {{u11, 1}, {u20, 1}})}},
            /* R16 */
            {{3, -4, M(1, {{u10, 2}, {u11, 1}})},
             {0, 1, M(2, {{u10, 1}, {u21, 1}})},
             {0, 1, M(2, {{u11, 1}, {u20, 1}})}},
            /* R17 */
            {{3, -4, M(1, {{u01, 1}, {u10, 1}, {u20, 1}})},
             {0, 1, M(2, {{u10, 1}, {u21, 1}})},
             {0, 1, M(2, {{u11, 1}, {u20, 1}})}},
            /* R18 */
            {{3, -4, M(1, {{u01, 2}, {u20, 1}})},
             {0, 1, M(2, {{u01, 1}, {u21, 1}})},
             {0, 1, M(2, {{u02, 1}, {u20, 1}})}},
            /* R19 */
            {{3, -4, M(1, {{u01, 1}, {u10, 1}, {u11, 1}})},
             {0, 1, M(2, {{u01, 1}, {u21, 1}})},
             {0, 1, M(2, {{u11, 2}})}},
            /* R20 */
            {{3, -4, M(1, {{u10, 2}, {u02, 1}})},
             {0, 1, M(2, {{u10, 1}, {u12, 1}})},
             {0, 1, M(2, {{u02, 1}, {u20, 1}})}},
            /* R21 */
            {{3, -4, M(1, {{u01, 1}, {u10, 1}, {u11, 1}})},
             {0, 1, M(2, {{u10, 1}, {u12, 1}})},
             {0, 1, M(2, {{u11, 2}})}},
            /* R22 */
            {{3, -4, M(1, {{u01, 2}, {u11, 1}})},
             {0, 1, M(2, {{u01, 1}, {u12, 1}})},
             {0, 1, M(2, {{u02, 1}, {u11, 1}})}},
            /* R23 */
            {{3, -4, M(1, {{u01, 1}, {u10, 1}, {u02, 1}})},
             {0, 1, M(2, {{u01, 1}, {u12, 1}})},
             {0, 1, M(2, {{u02, 1}, {u11, 1}})}},
            /* R24 */
            {{3, -4, M(1, {{u01, 1}, {u10, 1}, {u02, 1}})},
             {0, 1, M(2, {{u10, 1}, {u03, 1}})},
             {0, 1, M(2, {{u02, 1}, {u11, 1}})}},
            /* R25 */
            {{3, -4, M(1, {{u01, 2}, {u02, 1}})},
             {0, 1, M(2, {{u01, 1}, {u03, 1}})},
             {0, 1, M(2, {{u02, 2}})}},
            /* R26 */
            {{3, -5, M(0, {{u01, 1}, {u10, 3}})},
             {0, 2, M(1, {{u20, 1}, {u10, 1}, {u01, 1}})},
             {0, 1, M(1, {{u11, 1}, {u10, 2}})}},
            /* R27 */
            {{3, -5, M(0, {{u01, 2}, {u10, 2}})},
             {0, 1, M(1, {{u01, 2}, {u20, 1}})},
             {0, 2, M(1, {{u01, 1}, {u10, 1}, {u11, 1}})}},
            /* R28 */
            {{3, -5, M(0, {{u01, 3}, {u10, 1}})},
             {0, 1, M(1, {{u11, 1}, {u01, 2}})},
             {0, 2, M(1, {{u02, 1}, {u10, 1}, {u01, 1}})}},
        };
        std::vector<Constraint> out;
        for (std::size_t i = 0; i < data.size(); ++i) {
            DiffForm f;
            for (const auto& t : data[i]) f.add_term(t.m, p_lin(t.pc, t.cc));
            out.push_back({f, Constraint::Kind::equational,
                           "R" + std::to_string(i + 1)});
        }
        return out;
    }();
    return list;
}

namespace {

DiffForm quad_expr(std::initializer_list<std::tuple<RatFunc, QuadMono, QuadMono>> ts) {
    DiffForm f;
    for (const auto& [c, qi, qj] : ts) f.add_term(quad_mono(qi) * quad_mono(qj), c);
    return f;
}

}  // namespace

const std::vector<Constraint>& paper_quadratic_rows() {
    using Q = QuadMono;
    static const std::vector<Constraint> rows = [] {
        RatFunc three(3), two(2);
        RatFunc t35 = p_lin(3, -5);
        std::vector<DiffForm> fs = {
            // Rhat1 = 2 m1 m5 + (2(3p-5)/3) m4 m5
            quad_expr({{two, Q::m1, Q::m5},
                       {t35 * RatFunc(QField(Rat(2, 3))), Q::m4, Q::m5}}),
            // Rhat2 = m2 m6 + ((3p-5)/3) m5 m6
            quad_expr({{RatFunc(1), Q::m2, Q::m6},
                       {t35 * RatFunc(QField(Rat(1, 3))), Q::m5, Q::m6}}),
            // Rhat3 = -6 m3 m5 + 2(5-3p) m5 m6
            quad_expr({{RatFunc(-6), Q::m3, Q::m5}, {p_lin(-6, 10), Q::m5, Q::m6}}),
            // Rhat4 = (3p-5) m4^2 + 3 m1 m4
            quad_expr({{t35, Q::m4, Q::m4}, {three, Q::m1, Q::m4}}),
            // Rhat5 = (3p-5) m6^2 + 3 m3 m6
            quad_expr({{t35, Q::m6, Q::m6}, {three, Q::m3, Q::m6}}),
            // Rhat6 = (3p-5) m4 m5 + 3 m2 m4
            quad_expr({{t35, Q::m4, Q::m5}, {three, Q::m2, Q::m4}}),
            // Rhat7 = (3p-5) m5^2 + 2 m2 m5 + m3 m4
            quad_expr({{t35, Q::m5, Q::m5}, {two, Q::m2, Q::m5}, {RatFunc(1), Q::m3, Q::m4}}),
            // Rhat8 = m1 m3 - m2^2 + ((9p-12)/2) m3 m4 + ((9p^2-27p+20)/2) m5^2
            quad_expr({{RatFunc(1), Q::m1, Q::m3},
                       {RatFunc(-1), Q::m2, Q::m2},
                       {p_lin(9, -12) * RatFunc(QField(Rat(1, 2))), Q::m3, Q::m4},
                       {RatFunc(ppoly({{2, 9}, {1, -27}, {0, 20}})) *
                            RatFunc(QField(Rat(1, 2))),
                        Q::m5, Q::m5}}),
            // Rhat9 = m1 m6 - m3 m4
            quad_expr({{RatFunc(1), Q::m1, Q::m6}, {RatFunc(-1), Q::m3, Q::m4}}),
        };
        std::vector<Constraint> out;
        for (std::size_t i = 0; i < fs.size(); ++i)
            out.push_back({fs[i], Constraint::Kind::equational,
                           "Rhat" + std::to_string(i + 1)});
        return out;
    }();
    return rows;
}

const std::vector<Constraint>& paper_nonquadratic_rows() {
    using Q = QuadMono;
    static const std::vector<Constraint> rows = [] {
        auto M = [](long u, std::initializer_list<std::pair<DerivSymbol, int>> f) {
            return make_monomial(u, f);
        };
        RatFunc third(QField(Rat(1, 3))), half(QField(Rat(1, 2)));
        RatFunc t33 = p_lin(-3, 3);                                 // 3 - 3p
        RatFunc big = RatFunc(ppoly({{3, 9}, {2, -36}, {1, 47}, {0, -20}}));
        RatFunc small = RatFunc(ppoly({{2, -9}, {1, 27}, {0, -20}}));  // -9p^2+27p-20
        std::vector<std::pair<DiffMonomial, DiffForm>> data = {
            {M(3, {{u04, 1}}),
             quad_expr({{t33, Q::m1, Q::m1}, {big, Q::m4, Q::m4}})},
            {M(3, {{u13, 1}}),
             quad_expr({{t33, Q::m1, Q::m2}, {big, Q::m4, Q::m5}})},
            {M(3, {{u31, 1}}),
             quad_expr({{t33, Q::m2, Q::m3},
                        {RatFunc(ppoly({{2, -9}, {1, 21}, {0, -12}})), Q::m3, Q::m5}})},
            {M(3, {{u40, 1}}),
             quad_expr({{t33, Q::m3, Q::m3}, {big, Q::m6, Q::m6}})},
            {M(2, {{u01, 1}, {u03, 1}}),
             quad_expr({{RatFunc(1), Q::m1, Q::m1}, {small * third, Q::m4, Q::m4}})},
            {M(2, {{u01, 1}, {u12, 1}}),
             quad_expr({{RatFunc(1), Q::m1, Q::m2}, {small * third, Q::m4, Q::m5}})},
            {M(2, {{u01, 1}, {u30, 1}}),
             quad_expr({{RatFunc(1), Q::m2, Q::m3}, {small * third, Q::m5, Q::m6}})},
            {M(2, {{u10, 1}, {u03, 1}}),
             quad_expr({{RatFunc(1), Q::m1, Q::m2}, {small * third, Q::m4, Q::m5}})},
            {M(2, {{u10, 1}, {u21, 1}}),
             quad_expr({{RatFunc(1), Q::m2, Q::m3}, {small * third, Q::m5, Q::m6}})},
            {M(2, {{u10, 1}, {u30, 1}}),
             quad_expr({{RatFunc(1), Q::m3, Q::m3}, {small * third, Q::m6, Q::m6}})},
            {M(3, {{u22, 1}}),
             quad_expr({{t33, Q::m2, Q::m2},
                        {RatFunc(ppoly({{2, 9}, {1, -21}, {0, 12}})) * half, Q::m3, Q::m4},
                        {RatFunc(ppoly({{3, 27}, {2, -108}, {1, 141}, {0, -60}})) * half,
                         Q::m5, Q::m5}})},
            {M(2, {{u01, 1}, {u21, 1}}),
             quad_expr({{RatFunc(1), Q::m2, Q::m2},
                        {p_lin(-3, 4) * half, Q::m3, Q::m4},
                        {small * half, Q::m5, Q::m5}})},
            {M(2, {{u10, 1}, {u12, 1}}),
             quad_expr({{RatFunc(1), Q::m2, Q::m2},
                        {p_lin(-3, 4) * half, Q::m3, Q::m4},
                        {small * half, Q::m5, Q::m5}})},
        };
        std::vector<Constraint> out;
        for (std::size_t i = 0; i < data.size(); ++i) {
            DiffForm f = data[i].second;
            f.add_term(data[i].first, RatFunc(1));
            out.push_back({f, Constraint::Kind::equational,
                           "Rtilde" + std::to_string(i + 1)});
        }
        return out;
    }();
    return rows;
}

ConstraintSet generate_all_constraints() {
    std::vector<DiffForm> generated;
    for (const auto& seed : enumerate_deg4_monomials()) {
        if (seed.max_order() > 3) continue;  // seeds live in the order-3 jet space
        for (const auto& [w, e] : seed.derivs) {
            for (Axis ax : {Axis::a, Axis::b}) {
                int along = ax == Axis::a ? w.da : w.db;
                if (along < 1) continue;
                DiffForm r = generate_ibp(seed, w, ax);
                bool seen = false;
                for (const auto& g : generated)
                    if (g == r) { seen = true; break; }
                if (!seen) generated.push_back(r);
            }
        }
    }

    // Label generated forms against the published list where they coincide.
    ConstraintSet out;
    std::vector<bool> used(generated.size(), false);
    for (const auto& ref : appendix_constraints()) {
        for (std::size_t i = 0; i < generated.size(); ++i) {
            if (!used[i] && generated[i] == ref.form) {
                out.equational.push_back({generated[i], Constraint::Kind::equational,
                                          ref.label});
                used[i] = true;
                break;
            }
        }
    }
    int extra = 0;
    for (std::size_t i = 0; i < generated.size(); ++i)
        if (!used[i])
            out.equational.push_back({generated[i], Constraint::Kind::equational,
                                      "G" + std::to_string(++extra)});
    out.inequality.push_back(trace_constraint());
    return out;
}

std::vector<DiffForm> echelonize(const std::vector<DiffForm>& rows) {
    std::vector<DiffForm> work;
    for (const auto& r : rows)
        if (!r.is_zero()) work.push_back(r);
    std::vector<DiffForm> done;

    while (!work.empty()) {
        std::size_t best = 0;
        OrderKey best_key = monomial_key(work[0].leading_monomial());
        for (std::size_t i = 1; i < work.size(); ++i) {
            OrderKey k = monomial_key(work[i].leading_monomial());
            if (best_key < k) { best = i; best_key = k; }
        }
        DiffMonomial head = work[best].leading_monomial();
        DiffForm pivot = work[best] * work[best].coeff(head).inv();
        work.erase(work.begin() + static_cast<long>(best));

        auto eliminate = [&](std::vector<DiffForm>& rs) {
            for (auto& r : rs) {
                RatFunc c = r.coeff(head);
                if (!c.is_zero()) r -= c * pivot;
            }
            rs.erase(std::remove_if(rs.begin(), rs.end(),
                                    [](const DiffForm& f) { return f.is_zero(); }),
                     rs.end());
        };
        eliminate(work);
        eliminate(done);
        done.push_back(pivot);
    }
    std::sort(done.begin(), done.end(), [](const DiffForm& x, const DiffForm& y) {
        return monomial_key(y.leading_monomial()) < monomial_key(x.leading_monomial());
    });
    return done;
}

SplitSet gaussian_split(const ConstraintSet& cs) {
    std::vector<DiffForm> rows;
    for (const auto& c : cs.equational) rows.push_back(c.form);
    std::vector<DiffForm> echelon = echelonize(rows);

    SplitSet out;
    int nq = 0, q = 0;
    for (const auto& r : echelon) {
        bool has_nonquad = false;
        for (const auto& [m, c] : r.terms())
            if (!to_quadratic(m)) { has_nonquad = true; break; }
        if (has_nonquad)
            out.nonquadratic.push_back({r, Constraint::Kind::equational,
                                        "N" + std::to_string(++nq)});
        else
            out.quadratic.push_back({r, Constraint::Kind::equational,
                                     "Q" + std::to_string(++q)});
    }
    return out;
}

bool in_span(const DiffForm& f, const std::vector<DiffForm>& echelon) {
    DiffForm rem = f;
    for (const auto& row : echelon) {
        if (rem.is_zero()) return true;
        RatFunc c = rem.coeff(row.leading_monomial());
        if (!c.is_zero()) rem -= c * row;
    }
    return rem.is_zero();
}

ReduceResult span_reduce(const DiffForm& f, const SplitSet& basis) {
    ReduceResult out;
    out.normal_form = f;
    auto pass = [&](const std::vector<Constraint>& rows) {
        for (const auto& row : rows) {
            RatFunc c = out.normal_form.coeff(row.form.leading_monomial());
            if (!c.is_zero()) {
                out.normal_form -= c * row.form;
                out.multipliers.emplace_back(row.label, c);
            }
        }
    };
    pass(basis.nonquadratic);
    pass(basis.quadratic);
    return out;
}

std::optional<std::vector<RatFunc>> decompose_over(const DiffForm& f,
                                                   const std::vector<DiffForm>& basis) {
    // Index the monomials appearing anywhere.
    std::vector<DiffMonomial> monos;
    auto index_of = [&](const DiffMonomial& m) -> std::size_t {
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (monos[i] == m) return i;
        monos.push_back(m);
        return monos.size() - 1;
    };
    for (const auto& b : basis)
        for (const auto& [m, c] : b.terms()) index_of(m);
    for (const auto& [m, c] : f.terms()) index_of(m);

    std::size_t rows = monos.size(), cols = basis.size();
    std::vector<std::vector<RatFunc>> A(rows, std::vector<RatFunc>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [m, c] : basis[j].terms()) A[index_of(m)][j] = c;
    for (const auto& [m, c] : f.terms()) A[index_of(m)][cols] = c;

    // Gaussian elimination with first-nonzero pivoting.
    std::vector<std::size_t> pivot_row(cols, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t i = r; i < rows; ++i)
            if (!A[i][c].is_zero()) { sel = i; break; }
        if (sel == SIZE_MAX) continue;
        std::swap(A[r], A[sel]);
        RatFunc inv = A[r][c].inv();
        for (std::size_t k = c; k <= cols; ++k) A[r][k] = A[r][k] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            RatFunc factor = A[i][c];
            for (std::size_t k = c; k <= cols; ++k) A[i][k] -= factor * A[r][k];
        }
        pivot_row[c] = r;
        ++r;
    }
    // Consistency: zero rows must have zero rhs.
    for (std::size_t i = r; i < rows; ++i)
        if (!A[i][cols].is_zero()) return std::nullopt;

    std::vector<RatFunc> x(cols);
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row[c] != SIZE_MAX) x[c] = A[pivot_row[c]][cols];
    return x;
}

}  // namespace crep
