#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bidyn/family.hpp"
#include "bidyn/parse.hpp"

using namespace bidyn;

TEST_CASE("curve point basics") {
    CurvePointQ p{false, Rat(2), Rat(6)};
    CHECK(on_curve(p));                       // 36 = 8 + 20 + 8
    CHECK(negate(p).b == Rat(-6));
    CHECK(negate(negate(p)) == p);
    CHECK(is_two_torsion(CurvePointQ{false, Rat(0), Rat(0)}));
    CHECK(!is_two_torsion(p));
    CHECK(is_two_torsion(CurvePointQ::infinity()));
    CHECK(!on_curve(CurvePointQ{false, Rat(1), Rat(1)}));
    // negate fixes exactly the 2-torsion
    for (Rat a : {Rat(0), Rat(-1), Rat(-4)}) {
        CurvePointQ tt{false, a, Rat(0)};
        CHECK(on_curve(tt));
        CHECK(negate(tt) == tt);
    }
}

TEST_CASE("tangent points of the marked point") {
    auto data = tangent_points(CurvePointQ{});
    REQUIRE(data.solved);
    REQUIRE(data.points.size() == 4);
    std::vector<std::vector<Rat>> expect = {
        {Rat(-2), Rat(-2), Rat(1)}, {Rat(-2), Rat(2), Rat(1)},
        {Rat(2), Rat(6), Rat(1)},   {Rat(2), Rat(-6), Rat(1)}};
    for (auto& e : expect) {
        bool found = false;
        for (auto& p : data.points) found |= same_point(p, canonical_point(e));
        CHECK(found);
    }
    // each tangent line passes through q and touches the cubic doubly
    VarList xyz = vars_xyz();
    PolyQ T = cubic_T_xyz();
    std::vector<Rat> q{Rat(0), Rat(0), Rat(1)};
    for (std::size_t i = 0; i < 4; ++i) {
        auto& line = data.lines[i];
        Rat at_q = line[0] * q[0] + line[1] * q[1] + line[2] * q[2];
        CHECK(at_q == Rat(0));
        CHECK(line_contact_order(T, data.points[i], q, data.points[i]) == 2);
    }
    // degenerate 2-torsion other than q is rejected
    CHECK_THROWS(tangent_points(CurvePointQ{false, Rat(-1), Rat(0)}));
}

TEST_CASE("build_iota reproduces the printed involution at q") {
    QQ dom;
    auto iq = build_iota(CurvePointQ{}, dom);
    auto printed = iota_q();
    REQUIRE(iq.co.size() == 3);
    CHECK(iq.deg == 3);
    for (int i = 0; i < 3; ++i) CHECK(iq.co[i] == printed.co[i]);
}

TEST_CASE("iota_q is an involution and fixes the cubic pointwise") {
    auto iq = iota_q();
    auto sq = compose(iq, iq);
    CHECK(is_identity(sq));
    // fixes (2,6) and (-1,0) on T
    auto img = evaluate(iq, canonical_point(std::vector<Rat>{Rat(2), Rat(6), Rat(1)}));
    REQUIRE(img.has_value());
    CHECK(same_point(*img, {Rat(2), Rat(6), Rat(1)}));
    auto img2 = evaluate(iq, canonical_point(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}));
    REQUIRE(img2.has_value());
    CHECK(same_point(*img2, {Rat(-1), Rat(0), Rat(1)}));
    // contracts the conic to q: sample over the parametrization
    Rng rng(5);
    auto res = contraction_analysis(iq, conic_param(), 8, rng, Rat(1));
    CHECK(res.contracted);
    CHECK(same_point(res.image, {Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("build_iota at a rational point is an involution") {
    QQ dom;
    CurvePointQ t{false, Rat(2), Rat(6)};
    auto it = build_iota(t, dom);
    CHECK(it.deg == 3);
    CHECK(is_identity(compose(it, it)));
    // fixes a sampled point of T: [-1, 0, 1]
    auto img = evaluate(it, canonical_point(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}));
    REQUIRE(img.has_value());
    CHECK(same_point(*img, {Rat(-1), Rat(0), Rat(1)}));
    CHECK_THROWS(build_iota(CurvePointQ{false, Rat(1), Rat(1)}, dom));
}

TEST_CASE("mod-p family: involutions, degrees, disjointness") {
    Rng rng(20240801);
    std::uint64_t p = random_prime31(rng);
    GF gf(p);
    auto t = random_good_point(gf, rng);
    REQUIRE(t.has_value());
    auto fam = build_family(*t, gf);
    CHECK(is_identity(compose(fam.psi, fam.psi)));
    CHECK(is_identity(compose(fam.chi, fam.chi)));
    CHECK(is_identity(compose(fam.phi, fam.phi)));
    CHECK(fam.G.deg == 9);
    // F at t = q degenerates to the identity
    CurvePointP q;
    q.a = gf.zero();
    q.b = gf.zero();
    auto famq = build_family(q, gf);
    CHECK(is_identity(famq.G));
    auto F = compose(famq.G, famq.G);
    CHECK(is_identity(F));
}

TEST_CASE("mod-p degree sequence of the identity") {
    QQ dom;
    auto iq = iota_q();
    auto idmap = compose(iq, iq);
    Rng rng(7);
    auto seq = degree_sequence_modp({idmap}, 4, rng);
    CHECK(seq.values == std::vector<long>{1, 1, 1, 1});
}
