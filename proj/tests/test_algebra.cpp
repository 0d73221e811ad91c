#include <doctest.h>

#include <crep/param_point.hpp>
#include <crep/ratfunc.hpp>

#include <gmpxx.h>

using namespace crep;

namespace {

// Deterministic generator for property checks.
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
    Rat rat() {
        long num = small(-20, 20);
        long den = small(1, 12);
        return Rat(num, den);
    }
    QField qf() { return QField(rat(), rat()); }
};

ParamPoly P(Var v) { return ParamPoly::variable(v); }

}  // namespace

TEST_CASE("Rat basics and serialization") {
    CHECK(Rat(2, 6) == Rat(1, 3));
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(7).str() == "7");
    CHECK(Rat::parse("-5/9") == Rat(-5, 9));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK(Rat(22, 7).floor() == 3);
    CHECK(Rat(-22, 7).floor() == -4);
    CHECK(Rat(-3, 4).pow(3) == Rat(-27, 64));
}

TEST_CASE("QField sign is exact") {
    CHECK(QField(0).sign() == 0);                       // 0 + 0*sqrt(17)
    CHECK(QField(Rat(-9), Rat(1)).sign() == -1);        // 17 < 81
    // n2 - 13/9 = ((9 + sqrt17)/8) - 13/9 > 0 since 81*17 = 1377 > 23^2 = 529
    QField n2(Rat(9, 8), Rat(1, 8));
    CHECK((n2 - QField(Rat(13, 9))).sign() == 1);
    CHECK(QField(Rat(9), Rat(-2)).sign() == 1);   // 81 > 68
    CHECK(QField(Rat(8), Rat(-2)).sign() == -1);  // 64 < 68
    CHECK(QField(Rat(0), Rat(-3)).sign() == -1);
}

TEST_CASE("QField arithmetic field axioms on random triples") {
    XorShift rng(0x9e3779b97f4a7c15ull);
    for (int i = 0; i < 300; ++i) {
        QField x = rng.qf(), y = rng.qf(), z = rng.qf();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inv() == QField(1));
    }
}

TEST_CASE("QField sign agrees with interval bounds on sqrt(17)") {
    // sqrt(17) lies in (4.1231, 4.1232); when interval arithmetic decides the
    // sign, the exact sign must agree.
    const Rat lo(41231, 10000), hi(41232, 10000);
    XorShift rng(0xdeadbeefcafef00dull);
    int decided = 0;
    for (int i = 0; i < 10000; ++i) {
        QField x = rng.qf();
        const Rat& a = x.rational_part();
        const Rat& b = x.surd_part();
        Rat bound1 = a + b * lo, bound2 = a + b * hi;
        Rat vlo = bound1 < bound2 ? bound1 : bound2;
        Rat vhi = bound1 < bound2 ? bound2 : bound1;
        if (vlo.sign() > 0 || vhi.sign() < 0) {
            ++decided;
            CHECK(x.sign() == vlo.sign());
        }
    }
    CHECK(decided > 9000);  // the bracket is tight enough to decide nearly all
}

TEST_CASE("QField serialization round trip") {
    QField n1(Rat(9, 8), Rat(-1, 8));
    CHECK(n1.str() == "9/8-1/8*sqrt(17)");
    CHECK(QField::parse(n1.str()) == n1);
    CHECK(QField::parse("sqrt(17)") == QField::sqrt17());
    CHECK(QField::parse("-sqrt(17)") == -QField::sqrt17());
    CHECK(QField::parse("-5/9") == QField(Rat(-5, 9)));
    CHECK(QField::parse("2+3*sqrt(17)") == QField(Rat(2), Rat(3)));
    CHECK(QField(Rat(0), Rat(2, 3)).str() == "2/3*sqrt(17)");
    XorShift rng(12345);
    for (int i = 0; i < 200; ++i) {
        QField x = rng.qf();
        CHECK(QField::parse(x.str()) == x);
    }
}

TEST_CASE("QField floor and simplest rational") {
    CHECK(QField::sqrt17().floor() == 4);
    CHECK((-QField::sqrt17()).floor() == -5);
    CHECK(QField(Rat(9, 8), Rat(1, 8)).floor() == 1);  // n2 ~ 1.64
    auto r = simplest_rational_in(QField(Rat(1, 3)), QField(Rat(1, 2)));
    REQUIRE(r.has_value());
    CHECK(*r == Rat(1, 2));
    // Simplest rational just above sqrt(17): between sqrt17 and 5 is 5.
    auto s = simplest_rational_in(QField::sqrt17(), QField(5));
    REQUIRE(s.has_value());
    CHECK(*s == Rat(5));
    // Interval straddling zero picks zero.
    auto z = simplest_rational_in(QField(Rat(-3, 7)), QField(Rat(1, 9)));
    REQUIRE(z.has_value());
    CHECK(z->is_zero());
    // Tight irrational interval around sqrt(17) still finds a rational inside.
    QField eps(Rat(1, 100000));
    auto t = simplest_rational_in(QField::sqrt17() - eps, QField::sqrt17() + eps);
    REQUIRE(t.has_value());
    QField tv(*t);
    CHECK((tv - (QField::sqrt17() - eps)).sign() >= 0);
    CHECK(((QField::sqrt17() + eps) - tv).sign() >= 0);
    // Degenerate irrational interval has no rational point.
    CHECK(!simplest_rational_in(QField::sqrt17(), QField::sqrt17()).has_value());
}

TEST_CASE("poly arithmetic examples") {
    ParamPoly p = P(Var::p), n = P(Var::n), mu = P(Var::mu), c1 = P(Var::c1);
    ParamPoly pm1 = p - ParamPoly(1);

    CHECK(pm1 * pm1 == p.pow(2) - ParamPoly(2) * p + ParamPoly(1));
    CHECK((ParamPoly(9) * p - ParamPoly(4)) * ParamPoly() == ParamPoly());

    // (p-1)^2 (n(p-2)^2 - 4p^2 + 9p - 4) is the c1 coefficient of s2.
    ParamPoly lhs = pm1.pow(2) * (n * (p - ParamPoly(2)).pow(2) -
                                  ParamPoly(4) * p.pow(2) + ParamPoly(9) * p -
                                  ParamPoly(4));
    ParamPoly s2 = lhs * c1 +
                   n.pow(2) * (ParamPoly(4) * p.pow(3) - ParamPoly(11) * p.pow(2) +
                               ParamPoly(5) * p + ParamPoly(4)) -
                   (ParamPoly(4) * p.pow(2) - ParamPoly(9) * p + ParamPoly(4)) * n * mu;
    auto coeffs = s2.collect(Var::c1);
    REQUIRE(coeffs.count(1) == 1);
    CHECK(coeffs.at(1) == lhs);
}

TEST_CASE("poly string output") {
    ParamPoly p = P(Var::p);
    ParamPoly f = ParamPoly(3) * p - ParamPoly(5);
    CHECK(f.str() == "3*p - 5");
    ParamPoly g = P(Var::n).pow(2) * p - ParamPoly(Rat(1, 2));
    CHECK(g.str() == "n^2*p - 1/2");
}

TEST_CASE("poly gcd and exact division") {
    ParamPoly p = P(Var::p), n = P(Var::n);
    ParamPoly pm1 = p - ParamPoly(1);
    ParamPoly f = pm1.pow(3) * n.pow(2) * ParamPoly(6);
    ParamPoly g = pm1.pow(2) * n * ParamPoly(4);
    ParamPoly d = poly_gcd(f, g);
    // Normalized monic: gcd is (p-1)^2 * n up to the unit choice.
    CHECK(exact_div(f, d) * d == f);
    CHECK(exact_div(g, d) * d == g);
    CHECK(d.degree(Var::p) == 2);
    CHECK(d.degree(Var::n) == 1);

    ParamPoly c1 = P(Var::c1), mu = P(Var::mu);
    ParamPoly h1 = (c1 * mu + pm1) * (n * p + ParamPoly(3));
    ParamPoly h2 = (c1 * mu + pm1) * (mu - p);
    ParamPoly gg = poly_gcd(h1, h2);
    CHECK(exact_div(h1, gg) * gg == h1);
    CHECK(gg.degree(Var::c1) == 1);
    CHECK_THROWS(exact_div(p, pm1));
}

TEST_CASE("ratfunc reduction examples") {
    ParamPoly p = P(Var::p), n = P(Var::n);
    ParamPoly pm1 = p - ParamPoly(1);

    RatFunc a(ParamPoly(2) * n.pow(2) * p - ParamPoly(2) * n.pow(2), pm1);
    CHECK(a.is_polynomial());
    CHECK(a.num() == ParamPoly(2) * n.pow(2));

    RatFunc eta1(ParamPoly(2) * n.pow(2), pm1);
    CHECK(!eta1.is_polynomial());
    CHECK(eta1.num() == ParamPoly(2) * n.pow(2));
    CHECK(eta1.den() == pm1);

    RatFunc b(pm1 * pm1, pm1);
    CHECK(b.is_polynomial());
    CHECK(b.num() == pm1);

    CHECK_THROWS_WITH_AS(RatFunc(p, ParamPoly()), "division by zero polynomial",
                         std::domain_error);
}

TEST_CASE("ratfunc reduction is idempotent and canonical") {
    XorShift rng(777);
    for (int i = 0; i < 60; ++i) {
        ParamPoly f, g;
        for (int t = 0; t < 3; ++t) {
            Exp e{int(rng.small(0, 2)), int(rng.small(0, 2)), int(rng.small(0, 1)),
                  int(rng.small(0, 1))};
            f.add_term(e, rng.qf());
            Exp e2{int(rng.small(0, 2)), int(rng.small(0, 2)), int(rng.small(0, 1)),
                   int(rng.small(0, 1))};
            g.add_term(e2, rng.qf());
        }
        if (g.is_zero()) continue;
        RatFunc r(f, g);
        RatFunc again(r.num(), r.den());
        CHECK(again == r);
        // Scaling numerator and denominator together changes nothing.
        ParamPoly scale = P(Var::p) + ParamPoly(2);
        CHECK(RatFunc(f * scale, g * scale) == r);
    }
}

TEST_CASE("eval_param matches independent rational arithmetic") {
    // theta1 = -2n/(p-1)^2 at (n=2, p=11/5): oracle via direct mpq math.
    mpq_class p_val(11, 5), n_val(2);
    mpq_class theta1_expect = mpq_class(-2) * n_val / ((p_val - 1) * (p_val - 1));
    CHECK(theta1_expect == mpq_class(-25, 9));

    ParamPoly p = P(Var::p), n = P(Var::n), mu = P(Var::mu);
    RatFunc theta1(ParamPoly(-2) * n, (p - ParamPoly(1)).pow(2));
    ParamPoint pt(2, QField(Rat(11, 5)), QField(Rat(2)));
    CHECK(theta1.eval(pt.coords()) == QField(Rat(-25, 9)));

    // theta4 = (n^2 p - n^2 - n mu)/(p-1)^2 at (2, 11/5, 2): brute force gives 5/9.
    mpq_class mu_val(2);
    mpq_class theta4_expect =
        (n_val * n_val * p_val - n_val * n_val - n_val * mu_val) /
        ((p_val - 1) * (p_val - 1));
    CHECK(theta4_expect == mpq_class(5, 9));
    RatFunc theta4(n.pow(2) * p - n.pow(2) - n * mu, (p - ParamPoly(1)).pow(2));
    CHECK(theta4.eval(pt.coords()) == QField(Rat(5, 9)));

    // Evaluation at a pole reports the vanishing denominator.
    ParamPoint bad(2, QField(Rat(3)), QField(Rat(0)));
    RatFunc pole(n, p - ParamPoly(3));
    CHECK_THROWS_AS(pole.eval(bad.coords()), std::domain_error);
}

TEST_CASE("eval is multiplicative where defined") {
    XorShift rng(4242);
    for (int i = 0; i < 40; ++i) {
        ParamPoly f, g, h;
        for (int t = 0; t < 3; ++t) {
            f.add_term(Exp{int(rng.small(0, 2)), int(rng.small(0, 2)), 0,
                           int(rng.small(0, 1))},
                       rng.qf());
            g.add_term(Exp{int(rng.small(0, 1)), int(rng.small(0, 2)),
                           int(rng.small(0, 1)), 0},
                       rng.qf());
            h.add_term(Exp{0, int(rng.small(0, 1)), 0, 0}, rng.qf());
        }
        if (h.is_zero()) h = ParamPoly(1);
        RatFunc a(f, h), b(g, ParamPoly(1));
        std::array<QField, 4> x{rng.qf(), rng.qf(), rng.qf(), rng.qf()};
        if (h.eval(x).is_zero()) continue;
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("ratfunc substitution") {
    ParamPoly p = P(Var::p), n = P(Var::n), mu = P(Var::mu), c1 = P(Var::c1);
    // Substitute mu := 2 + n(p-1) into mu - 2 - n(p-1): identically zero.
    RatFunc savare(ParamPoly(2) + n * (p - ParamPoly(1)));
    RatFunc f(mu - ParamPoly(2) - n * (p - ParamPoly(1)));
    CHECK(f.substitute(Var::mu, savare).is_zero());
    // Substitute c1 := -2n/(p-1)^2 into (p-1)^2 c1 + 2n: zero.
    RatFunc theta1(ParamPoly(-2) * n, (p - ParamPoly(1)).pow(2));
    RatFunc g((p - ParamPoly(1)).pow(2) * c1 + ParamPoly(2) * n);
    CHECK(g.substitute(Var::c1, theta1).is_zero());
}

TEST_CASE("ParamPoint validation") {
    CHECK_THROWS_WITH_AS(ParamPoint(2, QField(1), QField(0)), "p=1 excluded",
                         std::domain_error);
    CHECK_THROWS_AS(ParamPoint(0, QField(2), QField(0)), std::domain_error);
    ParamPoint ok(3, QField(Rat(9, 8), Rat(1, 8)), QField(Rat(-7, 4)));
    CHECK(ok.coords()[0] == QField(3));
}
