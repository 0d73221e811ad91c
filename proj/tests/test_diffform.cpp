#include <doctest.h>

#include <crep/diffform.hpp>

#include <set>

using namespace crep;

namespace {

const DerivSymbol u10(1, 0), u01(0, 1), u20(2, 0), u11(1, 1), u02(0, 2);

struct XorShift {
    uint64_t s;
    explicit XorShift(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

// Random form over order <= 2 symbols (so two differentiations stay in cap).
DiffForm random_form(XorShift& rng) {
    std::vector<DerivSymbol> pool{u10, u01, u20, u11, u02};
    DiffForm f;
    int nterms = static_cast<int>(rng.small(1, 4));
    for (int t = 0; t < nterms; ++t) {
        DiffMonomial m;
        m.upower = UPower(static_cast<int>(rng.small(0, 3)), Rat(rng.small(-6, 6)));
        int nfac = static_cast<int>(rng.small(0, 2));
        for (int k = 0; k < nfac; ++k)
            m.derivs[pool[static_cast<std::size_t>(rng.small(0, 4))]] += 1;
        f.add_term(m, RatFunc(QField(Rat(rng.small(-5, 5), rng.small(1, 4)))));
    }
    return f;
}

}  // namespace

TEST_CASE("power and product rules") {
    // d/dx_a u = u10
    CHECK(differentiate(DiffForm::upow(UPower::integer(1)), Axis::a) ==
          DiffForm::monomial(make_monomial(0, {{u10, 1}})));

    // d/dx_b (u10*u01) = u11*u01 + u10*u02
    DiffForm f = DiffForm::monomial(make_monomial(0, {{u10, 1}, {u01, 1}}));
    DiffForm expect = DiffForm::monomial(make_monomial(0, {{u11, 1}, {u01, 1}})) +
                      DiffForm::monomial(make_monomial(0, {{u10, 1}, {u02, 1}}));
    CHECK(differentiate(f, Axis::b) == expect);

    // d/dx_a (u^(3p-5) u10^2) = (3p-5) u^(3p-6) u10^3 + 2 u^(3p-5) u10 u20
    DiffForm g = DiffForm::monomial(make_monomial(UPower(3, Rat(-5)), {{u10, 2}}));
    DiffForm dg = differentiate(g, Axis::a);
    ParamPoly p = ParamPoly::variable(Var::p);
    DiffForm expect2 =
        DiffForm::monomial(make_monomial(UPower(3, Rat(-6)), {{u10, 3}}),
                           RatFunc(ParamPoly(3) * p - ParamPoly(5))) +
        DiffForm::monomial(make_monomial(UPower(3, Rat(-5)), {{u10, 1}, {u20, 1}}),
                           RatFunc(2));
    CHECK(dg == expect2);
}

TEST_CASE("derivative order cap") {
    DiffForm f = DiffForm::monomial(make_monomial(0, {{DerivSymbol(4, 0), 1}}));
    CHECK_THROWS_WITH_AS(differentiate(f, Axis::a), "derivative order cap exceeded",
                         std::domain_error);
}

TEST_CASE("degree and total order") {
    CHECK(degree_total_order(make_monomial(1, {{u20, 1}, {u10, 2}})) ==
          std::pair<long, long>(4, 4));
    CHECK(degree_total_order(make_monomial(4, {})) == std::pair<long, long>(4, 0));
    CHECK(degree_total_order(make_monomial(0, {{u01, 4}})) ==
          std::pair<long, long>(4, 4));
}

TEST_CASE("to_quadratic examples") {
    auto r1 = to_quadratic(make_monomial(2, {{u11, 2}}));
    REQUIRE(r1.has_value());
    CHECK(r1->first == QuadMono::m2);
    CHECK(r1->second == QuadMono::m2);

    CHECK(!to_quadratic(make_monomial(3, {{DerivSymbol(4, 0), 1}})).has_value());

    auto r3 = to_quadratic(make_monomial(0, {{u10, 2}, {u01, 2}}));
    REQUIRE(r3.has_value());
    CHECK(r3->first == QuadMono::m4);
    CHECK(r3->second == QuadMono::m6);

    // Round trip: factors multiply back to the monomial.
    for (const auto& m : enumerate_deg4_monomials()) {
        auto q = to_quadratic(m);
        if (q) CHECK(quad_mono(q->first) * quad_mono(q->second) == m);
        else CHECK(m.max_order() >= 3);
    }
}

TEST_CASE("monomial order") {
    DiffMonomial nq = make_monomial(3, {{DerivSymbol(4, 0), 1}});
    DiffMonomial m3m6 = quad_mono(QuadMono::m3) * quad_mono(QuadMono::m6);
    CHECK(monomial_key(m3m6) < monomial_key(nq));
    CHECK(monomial_key(nq) == monomial_key(nq));

    // The degree-4 universe: 33 monomials, strictly ordered, no duplicates.
    auto all = enumerate_deg4_monomials();
    CHECK(all.size() == 33);
    std::set<OrderKey> keys;
    for (const auto& m : all) {
        auto [deg, tot] = degree_total_order(m);
        CHECK(deg == 4);
        CHECK(tot == 4);
        keys.insert(monomial_key(m));
    }
    CHECK(keys.size() == 33);
    int nonquad = 0;
    for (const auto& m : all)
        if (!to_quadratic(m)) ++nonquad;
    CHECK(nonquad == 13);
}

TEST_CASE("differentiation is linear and raises total order by one") {
    XorShift rng(0xabcdef12345ull);
    for (int i = 0; i < 50; ++i) {
        DiffForm f = random_form(rng), g = random_form(rng);
        CHECK(differentiate(f + g, Axis::a) ==
              differentiate(f, Axis::a) + differentiate(g, Axis::a));
        CHECK(differentiate(f + g, Axis::b) ==
              differentiate(f, Axis::b) + differentiate(g, Axis::b));
    }

    // On integer-u-power monomials, d raises total order by 1, keeps degree.
    for (const auto& m : enumerate_deg4_monomials()) {
        if (m.max_order() >= 4) continue;
        auto [deg, tot] = degree_total_order(m);
        DiffForm d = differentiate(DiffForm::monomial(m), Axis::a);
        for (const auto& [dm, c] : d.terms()) {
            if (dm.upower.is_integer() && dm.upower.constant.sign() >= 0) {
                auto [ddeg, dtot] = degree_total_order(dm);
                CHECK(ddeg == deg);
                CHECK(dtot == tot + 1);
            }
        }
    }
}

TEST_CASE("mixed partials commute") {
    XorShift rng(0x5eed5eed5eedull);
    for (int i = 0; i < 50; ++i) {
        DiffForm f = random_form(rng);
        CHECK(differentiate(differentiate(f, Axis::a), Axis::b) ==
              differentiate(differentiate(f, Axis::b), Axis::a));
    }
}

TEST_CASE("transpose and diagonal") {
    DiffMonomial m = make_monomial(1, {{DerivSymbol(2, 1), 1}, {u10, 1}});
    DiffMonomial mt = make_monomial(1, {{DerivSymbol(1, 2), 1}, {u01, 1}});
    CHECK(DiffForm::monomial(m).transposed() == DiffForm::monomial(mt));
    // Transpose is an involution on random forms.
    XorShift rng(314159);
    for (int i = 0; i < 30; ++i) {
        DiffForm f = random_form(rng);
        CHECK(f.transposed().transposed() == f);
    }
    // Diagonal identifies axes: u11 -> u20, u02 -> u20.
    DiffForm d = DiffForm::monomial(make_monomial(2, {{u11, 1}, {u02, 1}}));
    CHECK(d.diagonal() == DiffForm::monomial(make_monomial(2, {{u20, 2}})));
}

TEST_CASE("serialization") {
    ParamPoly p = ParamPoly::variable(Var::p);
    DiffForm f =
        DiffForm::monomial(make_monomial(UPower(3, Rat(-6)), {{u10, 2}, {u20, 1}}),
                           RatFunc(ParamPoly(3) * p));
    CHECK(f.str() == "(3*p) * u^(3p-6) * u[1,0]^2 * u[2,0]");
    DiffForm r1 =
        DiffForm::monomial(make_monomial(0, {{u10, 4}}),
                           RatFunc(ParamPoly(3) * p - ParamPoly(5))) +
        DiffForm::monomial(make_monomial(1, {{u20, 1}, {u10, 2}}), RatFunc(3));
    CHECK(r1.latex() == "\\left(3p-5\\right)u_{1,0}^4+3uu_{1,0}^2u_{2,0}");
}
