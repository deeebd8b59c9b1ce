#include "bidyn/family.hpp"

#include "bidyn/parse.hpp"

namespace bidyn {

VarList vars_xyzabc() {
    static VarList v = make_vars({"x", "y", "z", "a", "b", "c"});
    return v;
}

VarList vars_xyz() {
    static VarList v = make_vars({"x", "y", "z"});
    return v;
}

RatMap<Rat> iota_q() {
    VarList xyz = vars_xyz();
    std::vector<PolyQ> co{
        parse_poly("5*x^3 - x*y^2 + 8*x^2*z", xyz),
        parse_poly("5*x^2*y - y^3 + 8*x*y*z", xyz),
        parse_poly("(0-2)*x^3 - 5*x^2*z + y^2*z", xyz),
    };
    return normalize_map(std::move(co));
}

std::array<PolyQ, 3> psi_coords6() {
    VarList v = vars_xyzabc();
    return {
        parse_poly("(x^3 + 2*y^2*z - 4*x*z^2)*a + (0 - 2*x*y*z)*b + (5*x^3 - x*y^2 + 8*x^2*z)*c",
                   v),
        parse_poly("(3*x^2*y + 10*x*y*z + 4*y*z^2)*a + (0 - 2*x^3 - 10*x^2*z - 8*x*z^2)*b + "
                   "(5*x^2*y - y^3 + 8*x*y*z)*c",
                   v),
        parse_poly("(3*x^2*z + 10*x*z^2 + 4*z^3)*a + (0 - 2*y*z^2)*b + "
                   "(0 - 2*x^3 - 5*x^2*z + y^2*z)*c",
                   v),
    };
}

std::array<PolyQ, 3> chi_coords6() {
    // P_i(x, y, z; a, -b, c)
    auto ps = psi_coords6();
    VarList v = vars_xyzabc();
    std::vector<PolyQ> imgs;
    for (int i = 0; i < 6; ++i) imgs.push_back(PolyQ::variable(v, i, Rat(1)));
    imgs[4] = -imgs[4];
    std::array<PolyQ, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = ps[i].substitute<PolyQ>(imgs);
    return out;
}

std::array<PolyQ, 3> phi_coords6() {
    VarList v = vars_xyzabc();
    auto iq = iota_q();
    std::array<PolyQ, 3> out;
    for (int i = 0; i < 3; ++i) {
        PolyQ lift(v);
        for (auto& [e, c] : iq.co[i].terms)
            lift.terms.emplace(Exps{e[0], e[1], e[2], 0, 0, 0}, c);
        out[i] = lift;
    }
    return out;
}

PolyQ cubic_T_xyz() { return parse_poly("y^2*z - x^3 - 5*x^2*z - 4*x*z^2", vars_xyz()); }

PolyQ conic_Q_xyz() { return parse_poly("y^2 - 5*x^2 - 8*x*z", vars_xyz()); }

std::vector<PolyQ> conic_param() {
    VarList st = make_vars({"s", "t"});
    return {parse_poly("8*s^2", st), parse_poly("8*s*t", st), parse_poly("t^2 - 5*s^2", st)};
}

std::optional<CurvePointP> random_good_point(const GF& gf, Rng& rng) {
    std::uint64_t p = gf.p;
    // tangent data of q mod p for the disjointness requirement
    CurvePointP q;
    q.a = gf.zero();
    q.b = gf.zero();
    std::vector<std::vector<Fp>> qtp;
    {
        auto data = tangent_points(CurvePointQ{});
        for (auto& pt : data.points) {
            std::vector<Fp> v;
            for (auto& c : pt) v.push_back(gf.from_int(numerator(c)));
            qtp.push_back(canonical_point(v));
        }
        qtp.push_back(std::vector<Fp>{gf.zero(), gf.zero(), gf.one()});
    }
    for (int attempt = 0; attempt < 400; ++attempt) {
        Fp a(rng.below(p), p);
        Fp rhs = curve_rhs(a);
        Fp b;
        if (!sqrt_mod(rhs, b)) continue;
        if (b.is_zero()) continue;
        CurvePointP t{false, a, b};
        auto tp = tangent_points_modp(t, gf);
        if (tp.size() != 4) continue;
        auto tm = tangent_points_modp(negate(t), gf);
        if (tm.size() != 4) continue;
        // indeterminacy sets of iota_t, iota_{-t}, iota_q must be disjoint
        auto as_pt = [&](const CurvePointP& c) {
            return canonical_point(std::vector<Fp>{c.a, c.b, gf.one()});
        };
        std::vector<std::vector<Fp>> it{as_pt(t)};
        for (auto& x : tp) it.push_back(x);
        std::vector<std::vector<Fp>> imt{as_pt(negate(t))};
        for (auto& x : tm) imt.push_back(x);
        bool clash = false;
        auto meets = [&](const std::vector<std::vector<Fp>>& A,
                         const std::vector<std::vector<Fp>>& B) {
            for (auto& x : A)
                for (auto& y : B)
                    if (same_point(x, y)) return true;
            return false;
        };
        clash |= meets(it, qtp);
        clash |= meets(imt, qtp);
        clash |= meets(it, imt);
        if (clash) continue;
        return t;
    }
    return std::nullopt;
}

} // namespace bidyn
