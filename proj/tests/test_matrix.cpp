#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bidyn/chart.hpp"
#include "bidyn/matrix.hpp"
#include "bidyn/parse.hpp"
#include "bidyn/roots.hpp"
#include "bidyn/series.hpp"

using namespace bidyn;

static VarList XYZ = make_vars({"x", "y", "z"});
static PolyQ P(const std::string& s) { return parse_poly(s, XYZ); }

TEST_CASE("charpoly basics") {
    IntMat m = IntMat::identity(2);
    auto cp = charpoly(m);  // (x-1)^2 = x^2 - 2x + 1
    CHECK(cp == std::vector<Int>{Int(1), Int(-2), Int(1)});

    IntMat t(2, 2);
    t.at(0, 0) = 2; t.at(0, 1) = 1; t.at(1, 1) = 3;
    auto cp2 = charpoly(t);  // x^2 - 5x + 6
    CHECK(cp2 == std::vector<Int>{Int(6), Int(-5), Int(1)});
}

TEST_CASE("Cayley-Hamilton on random integer matrices") {
    Rng rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 3 + static_cast<int>(rng.below(3));
        IntMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Int(rng.nonzero(5));
        auto cp = charpoly(m);
        IntMat z = eval_poly_matrix(cp, m);
        bool all_zero = true;
        for (auto& v : z.a) all_zero &= (sgn(v) == 0);
        CHECK(all_zero);
    }
}

TEST_CASE("jordan profile") {
    IntMat j(3, 3);
    j.at(0, 0) = 1; j.at(0, 1) = 1;
    j.at(1, 1) = 1; j.at(1, 2) = 1;
    j.at(2, 2) = 1;
    auto prof = jordan_profile(j, Rat(1));
    CHECK(prof.largest_block == 3);

    auto prof_id = jordan_profile(IntMat::identity(4), Rat(1));
    CHECK(prof_id.largest_block == 1);

    auto prof_no = jordan_profile(IntMat::identity(4), Rat(2));
    CHECK(prof_no.largest_block == 0);
    CHECK(prof_no.ranks.front() == 4);

    for (std::size_t i = 1; i < prof.ranks.size(); ++i) CHECK(prof.ranks[i] <= prof.ranks[i - 1]);
}

TEST_CASE("largest real root") {
    auto r = largest_real_root({Int(-16), Int(1)}, Rat(1, 1000000));
    REQUIRE(r.has_value());
    CHECK(r->exact);
    CHECK(r->value == Rat(16));

    auto r2 = largest_real_root({Int(1), Int(-34), Int(1)}, Rat(1, 100000000));
    REQUIRE(r2.has_value());
    CHECK(!r2->exact);
    Rat mid = (r2->lo + r2->hi) / 2;
    CHECK(mid > Rat(339705, 10000));
    CHECK(mid < Rat(339706, 10000));

    auto r3 = largest_real_root({Int(-2), Int(0), Int(1)}, Rat(1, 10000000));
    REQUIRE(r3.has_value());
    CHECK(!r3->exact);
    CHECK(r3->lo > Rat(14142, 10000));
    CHECK(r3->hi < Rat(14143, 10000));

    auto r4 = largest_real_root({Int(1), Int(0), Int(1)}, Rat(1, 100));
    CHECK(!r4.has_value());
}

TEST_CASE("multiplicity at points") {
    PolyQ conic = P("y^2-5*x^2-8*x*z");
    auto ch = default_chart<Rat>({Rat(0), Rat(0), Rat(1)});
    CHECK(mult_at(conic, ch) == 1);

    PolyQ node = P("x^2+y^2");
    CHECK(mult_at(node, ch) == 2);
    PolyQ cone = tangent_cone(node, ch);
    CHECK(proportional(cone, P("x^2+y^2")));

    auto ch2 = default_chart<Rat>({Rat(1), Rat(1), Rat(1)});
    CHECK(mult_at(conic, ch2) == 0);
}

TEST_CASE("multiplicity along a chart chain") {
    // cuspidal cubic y^2 z = x^3 at [0,0,1]
    PolyQ cusp = P("y^2*z-x^3");
    auto ch = default_chart<Rat>({Rat(0), Rat(0), Rat(1)});
    CHECK(mult_at(cusp, ch) == 2);
    // chart forms: L1 = x, L2 = y; the cusp line y=0 is the direction [0:1]
    ChartStep<Rat> toward_cusp{{Rat(0), Rat(1)}};
    CHECK(mult_at(cusp, ch, {toward_cusp}) == 1);
    ChartStep<Rat> generic{{Rat(3), Rat(1)}};
    CHECK(mult_at(cusp, ch, {generic}) == 0);
}

TEST_CASE("multiplicity is additive on products") {
    Rng rng(99);
    auto ch = default_chart<Rat>({Rat(0), Rat(1), Rat(1)});
    PolyQ f = P("x^2-(y-z)*z");   // passes through [0,1,1]
    PolyQ h = P("x");             // line through [0,1,1]
    for (int k = 1; k <= 3; ++k) {
        PolyQ prod = f;
        for (int i = 0; i < k; ++i) prod *= h;
        CHECK(mult_at(prod, ch) == mult_at(f, ch) + k * mult_at(h, ch));
    }
}

TEST_CASE("series branch of the affine cubic") {
    VarList AB = make_vars({"a", "b"});
    PolyQ curve = parse_poly("b^2 - a^3 - 5*a^2 - 4*a", AB);
    auto s = series_branch(curve, 0, 5);
    CHECK(s.c[0] == Rat(0));
    CHECK(s.c[1] == Rat(0));
    CHECK(s.c[2] == Rat(1, 4));
    CHECK(s.c[3] == Rat(0));
    CHECK(s.c[4] == Rat(-5, 64));

    PolyQ simple = parse_poly("b^2 - a", AB);
    auto s2 = series_branch(simple, 0, 6);
    CHECK(s2.c[2] == Rat(1));
    CHECK(s2.c[4] == Rat(0));

    auto s3 = series_branch(curve, 0, 9);
    auto id = [](const Rat& r) { return r; };
    Series<Rat> t = Series<Rat>::var(9, Rat(1));
    auto res = eval_poly_series(curve, std::vector<Series<Rat>>{s3, t}, 9, id);
    CHECK(res.is_zero());

    // wrong local parameter: singular branch is rejected
    CHECK_THROWS(series_branch(curve, 1, 5));
}
