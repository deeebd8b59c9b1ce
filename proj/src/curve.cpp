#include "bidyn/curve.hpp"

#include "bidyn/parse.hpp"

namespace bidyn {

namespace {

VarList XYZ() {
    static VarList v = make_vars({"x", "y", "z"});
    return v;
}

PolyQ cubic_T() {
    static PolyQ t = parse_poly("y^2*z - x^3 - 5*x^2*z - 4*x*z^2", XYZ());
    return t;
}

template <class K>
K unit_like(const K& sample);
template <>
Rat unit_like<Rat>(const Rat&) { return Rat(1); }
template <>
Fp unit_like<Fp>(const Fp& s) { return Fp(1, s.p); }

}  // namespace

template <class K>
int line_contact_order(const Poly<K>& curve, const std::vector<K>& base,
                       const std::vector<K>& other, const std::vector<K>& at) {
    std::vector<BinForm<K>> args;
    for (std::size_t i = 0; i < base.size(); ++i)
        args.push_back(BinForm<K>(1, {base[i], other[i]}));  // point = s*base + t*other
    BinForm<K> r = eval_poly_binforms(curve, args, 1);
    // parameter [s0:t0] with at ~ s0*base + t0*other
    K s0{}, t0{};
    bool found = false;
    for (std::size_t i = 0; i < base.size() && !found; ++i)
        for (std::size_t j = i + 1; j < base.size() && !found; ++j) {
            K det = base[i] * other[j] - base[j] * other[i];
            if (det == K{}) continue;
            s0 = (at[i] * other[j] - at[j] * other[i]) / det;
            t0 = (base[i] * at[j] - base[j] * at[i]) / det;
            found = true;
        }
    if (!found) throw std::invalid_argument("line_contact_order: degenerate line");
    if (!(t0 == K{})) {
        UPoly<K> u;
        u.c = r.c;
        u.trim();
        K root = s0 / t0;
        K one = unit_like(t0);
        int ord = 0;
        while (!u.is_zero() && u.eval(root) == K{}) {
            UPoly<K> div;
            div.c = {-root, one};
            UPoly<K> q, rem;
            udivmod(u, div, q, rem);
            u = q;
            ++ord;
        }
        return ord;
    }
    // parameter [1:0]: count vanishing top s-coefficients
    int ord = 0;
    for (int i = r.deg; i >= 0; --i) {
        if (r.c[i] == K{}) ++ord;
        else break;
    }
    return ord;
}

TangentPointData tangent_points(const CurvePointQ& t) {
    if (!on_curve(t)) throw std::invalid_argument("tangent_points: point not on the curve");
    TangentPointData out;
    VarList XA = make_vars({"x", "a"});
    out.quartic_in_x = parse_poly("x^4 - 4*a*x^3 - 20*a*x^2 - 8*x^2 - 16*a*x + 16", XA);
    out.curve_in_xy = cubic_T();

    if (t.at_infinity || (t.b == Rat(0) && t.a != Rat(0)))
        throw std::domain_error("tangent_points: tangent data degenerates at 2-torsion");

    if (t.a == Rat(0) && t.b == Rat(0)) {
        // the marked point q: quartic becomes (x^2 - 4)^2
        std::vector<std::pair<Rat, Rat>> affine = {{Rat(-2), Rat(-2)},
                                                   {Rat(-2), Rat(2)},
                                                   {Rat(2), Rat(6)},
                                                   {Rat(2), Rat(-6)}};
        std::vector<Rat> q{Rat(0), Rat(0), Rat(1)};
        for (auto& [x, y] : affine) {
            std::vector<Rat> pt{x, y, Rat(1)};
            if (line_contact_order(cubic_T(), pt, q, pt) < 2)
                throw std::logic_error("tangent_points: fixture tangency failed");
            out.points.push_back(canonical_point(pt));
            out.lines.push_back(canonical_point(line_through(pt, q)));
        }
        out.solved = true;
        return out;
    }
    out.solved = false;
    return out;
}

std::vector<std::vector<Fp>> tangent_points_modp(const CurvePointP& t, const GF& gf) {
    if (!on_curve(t)) throw std::invalid_argument("tangent_points_modp: point not on curve");
    std::uint64_t p = gf.p;
    Fp a = t.a;
    // x^4 - 4a x^3 - (20a + 8) x^2 - 16a x + 16
    UPoly<Fp> q;
    q.c = {gf.from_long(16), -(Fp(16, p) * a), -(Fp(20, p) * a + Fp(8, p)), -(Fp(4, p) * a),
           gf.one()};

    auto mulmod_by = [&](const UPoly<Fp>& m) {
        return [&, m](const UPoly<Fp>& u, const UPoly<Fp>& v) {
            UPoly<Fp> prod = u * v, quo, rem;
            udivmod(prod, m, quo, rem);
            return rem;
        };
    };
    auto powmod = [&](UPoly<Fp> base, std::uint64_t e, const UPoly<Fp>& m) {
        auto mul = mulmod_by(m);
        UPoly<Fp> acc;
        acc.c = {gf.one()};
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    };

    UPoly<Fp> x1;
    x1.c = {gf.zero(), gf.one()};
    UPoly<Fp> xp = powmod(x1, p, q);
    UPoly<Fp> splitting = ugcd(xp - x1, q);
    if (splitting.deg() != 4) return {};  // not split over this prime/point

    std::vector<Fp> roots;
    std::vector<UPoly<Fp>> stack{splitting};
    Rng rng(p ^ 0x5bf03635ULL);
    while (!stack.empty()) {
        UPoly<Fp> f = stack.back();
        stack.pop_back();
        if (f.deg() == 1) {
            roots.push_back(-(f.c[0] / f.c[1]));
            continue;
        }
        for (;;) {
            UPoly<Fp> base;
            base.c = {Fp(rng.below(p), p), gf.one()};
            UPoly<Fp> half = powmod(base, (p - 1) / 2, f);
            UPoly<Fp> one;
            one.c = {gf.one()};
            UPoly<Fp> g = ugcd(half - one, f);
            if (g.deg() > 0 && g.deg() < f.deg()) {
                UPoly<Fp> quo, rem;
                udivmod(f, g, quo, rem);
                stack.push_back(g);
                stack.push_back(quo);
                break;
            }
        }
    }

    std::vector<std::vector<Fp>> pts;
    PolyP cubic = reduce_mod(cubic_T(), gf);
    std::vector<Fp> tp{t.a, t.b, gf.one()};
    for (auto& x : roots) {
        Fp rhs = curve_rhs(x);
        Fp y;
        if (!sqrt_mod(rhs, y)) continue;
        for (Fp cand : {y, -y}) {
            std::vector<Fp> pt{x, cand, gf.one()};
            if (line_contact_order(cubic, pt, tp, pt) >= 2) {
                pts.push_back(canonical_point(pt));
                break;
            }
        }
    }
    if (pts.size() != 4) return {};
    return pts;
}

template int line_contact_order<Rat>(const PolyQ&, const std::vector<Rat>&,
                                     const std::vector<Rat>&, const std::vector<Rat>&);
template int line_contact_order<Fp>(const PolyP&, const std::vector<Fp>&,
                                    const std::vector<Fp>&, const std::vector<Fp>&);

} // namespace bidyn
