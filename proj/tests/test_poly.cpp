#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bidyn/gcd.hpp"
#include "bidyn/parse.hpp"
#include "bidyn/upoly.hpp"

using namespace bidyn;

static VarList XYZ = make_vars({"x", "y", "z"});

static PolyQ P(const std::string& s) { return parse_poly(s, XYZ); }

TEST_CASE("arithmetic basics") {
    CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
    CHECK(P("(x+y)^3") == P("x^3+3*x^2*y+3*x*y^2+y^3"));
    CHECK(P("0").is_zero());
    CHECK(P("x^2+1").degree() == 2);
    CHECK(P("x*y*z").is_homogeneous());
    CHECK(!P("x^2+y").is_homogeneous());
}

TEST_CASE("evaluation: point of the cubic") {
    PolyQ t = P("y^2*z-x^3-5*x^2*z-4*x*z^2");
    CHECK(t.eval({Rat(2), Rat(6), Rat(1)}) == Rat(0));
    CHECK(t.eval({Rat(1), Rat(1), Rat(1)}) != Rat(0));
}

TEST_CASE("substitution composes") {
    PolyQ f = P("x^2+y*z");
    std::vector<PolyQ> imgs = {P("x+y"), P("y"), P("z^2")};
    PolyQ g = f.substitute(imgs);
    CHECK(g == P("(x+y)^2+y*z^2"));
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_poly("x^2 + ", XYZ), ParseError);
    CHECK_THROWS_AS(parse_poly("x + q", XYZ), ParseError);
    CHECK_THROWS_AS(parse_poly("2.5*x", XYZ), ParseError);
    try {
        parse_poly("x^2 + ", XYZ);
    } catch (const ParseError& e) {
        CHECK(e.column == 7);
    }
}

TEST_CASE("render round-trips fixture polynomials") {
    for (const char* s : {"5*x^3 - x*y^2 + 8*x^2*z", "y^2*z - x^3 - 5*x^2*z - 4*x*z^2",
                          "9*x^5 - 10*x^3*y^2 + x*y^4 + 10*x^3*y*z - 2*x*y^3*z", "0", "42"}) {
        PolyQ f = P(s);
        CHECK(parse_poly(render_poly(f), XYZ) == f);
    }
}

TEST_CASE("gcd basics") {
    CHECK(gcd_poly(P("x^2-y^2"), P("x-y")) == P("x-y"));
    CHECK(gcd_poly(P("x^2-y^2"), P("1")) == P("1"));
    CHECK(gcd_poly(P("0"), P("2*x-2*y")) == P("x-y"));
    CHECK(gcd_poly(P("6*x^2*y"), P("4*x*y^2")) == P("x*y"));
}

TEST_CASE("gcd multiplicativity on random samples") {
    Rng rng(12345);
    auto rand_poly = [&](int deg, int nterms) {
        PolyQ f(XYZ);
        for (int i = 0; i < nterms; ++i) {
            Exps e(3);
            int left = deg;
            for (int j = 0; j < 3; ++j) {
                e[j] = static_cast<int>(rng.below(left + 1));
                left -= e[j];
            }
            f.add_term(e, Rat(rng.nonzero(9)));
        }
        return f;
    };
    for (int trial = 0; trial < 8; ++trial) {
        PolyQ a = rand_poly(3, 4), b = rand_poly(3, 4), g = rand_poly(2, 3);
        if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
        PolyQ lhs = gcd_poly(a * g, b * g);
        PolyQ expect = gcd_poly(a, b) * g;
        int_normalize(expect);
        CHECK(divides(g, lhs));
        CHECK(lhs == expect);
    }
}

TEST_CASE("mod-p mirror of gcd at good primes") {
    Rng rng(777);
    std::uint64_t p = random_prime31(rng);
    GF gf(p);
    PolyQ a = P("(x+2*y)*(x^2-y*z)"), b = P("(x+2*y)*(x-z)");
    PolyQ g = gcd_poly(a, b);
    PolyP gp = gcd_poly(reduce_mod(a, gf), reduce_mod(b, gf));
    PolyP expect = reduce_mod(g, gf);
    monic_normalize(expect);
    CHECK(gp == expect);
}

TEST_CASE("exact division") {
    PolyQ q = exact_div(P("x^3-y^3"), P("x-y"));
    CHECK(q == P("x^2+x*y+y^2"));
    CHECK_THROWS(exact_div(P("x^2+1"), P("x-y")));
}

TEST_CASE("binary form gcd") {
    // a = s^2 t (s - t) -> s^3 t - s^2 t^2:  coeff of s^3 t is at i=3
    BinForm<Rat> a(4, {Rat(0), Rat(0), Rat(-1), Rat(1), Rat(0)});
    // b = s t^2 (s - t) -> s^2 t^2 - s t^3
    BinForm<Rat> b(4, {Rat(0), Rat(-1), Rat(1), Rat(0), Rat(0)});
    BinForm<Rat> g = bingcd(a, b);
    CHECK(g.deg == 3);  // shared factor s t (s - t)
    BinForm<Rat> qa = binform_exact_div(a, g);
    CHECK(qa.deg == 1);
}
