#ifndef BIDYN_INDUCED_HPP
#define BIDYN_INDUCED_HPP

#include "bidyn/ratmap.hpp"

namespace bidyn {

/// Action of a plane map on the exceptional line of a point blow-up.
/// Obtained from the exact expansion f(P + e*delta(s,t)) where delta realizes
/// the chart direction [s:t]; the coefficient of e^k is a binary form of
/// degree k, so the expansion is polynomial and exact.
template <class K>
struct InducedPoint {
    enum Kind {
        SelfMap,        // directions at P map to directions at P
        ToExceptional,  // directions map onto the direction line at f(P) != P
        OntoCurve,      // directions sweep out a plane curve (P blown down data)
        Collapsed       // everything lands at one model point
    } kind;

    std::vector<K> target;             // image center (SelfMap: P itself) or plane point
    std::array<Poly<K>, 2> dir_map;    // [s,t] -> [dir_map[0], dir_map[1]] (Self/ToExceptional)
    std::array<K, 2> target_dir;       // Collapsed onto an exceptional point
    std::vector<Poly<K>> curve_param;  // OntoCurve: [s,t] -> plane point on the curve
};

namespace detail {

template <class K>
std::array<Poly<K>, 3> expansion(const RatMap<K>& f, const PointChart<K>& ch) {
    // variables (s, t, e)
    VarList ste = make_vars({"s", "t", "e"});
    auto duals = dual_vectors(ch);
    std::vector<Poly<K>> imgs;
    for (std::size_t i = 0; i < ch.point.size(); ++i) {
        Poly<K> g = Poly<K>::constant(ste, ch.point[i]);
        // + e * (t * u1_i + s * u2_i)
        if (!(duals[0][i] == K{})) g += Poly<K>::monomial(ste, {0, 1, 1}, duals[0][i]);
        if (!(duals[1][i] == K{})) g += Poly<K>::monomial(ste, {1, 0, 1}, duals[1][i]);
        imgs.push_back(g);
    }
    std::array<Poly<K>, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = f.co[i].template substitute<Poly<K>>(imgs);
    return out;
}

template <class K>
int e_valuation(const Poly<K>& f) {
    int v = -1;
    for (auto& [e, c] : f.terms) v = (v < 0) ? e[2] : std::min(v, e[2]);
    return v;
}

/// coefficient of e^k as a polynomial in (s, t)
template <class K>
Poly<K> e_coefficient(const Poly<K>& f, int k) {
    VarList st = make_vars({"s", "t"});
    Poly<K> r(st);
    for (auto& [e, c] : f.terms)
        if (e[2] == k) r.terms.emplace(Exps{e[0], e[1]}, c);
    return r;
}

template <class K>
K leading_of(const Poly<K>& f) {
    if (f.is_zero()) return K{};
    return *f.leading_coeff();
}

/// true when [C0 : C1 : C2] is the same projective point for every direction;
/// the point is then [lead(C0) : lead(C1) : lead(C2)]
template <class K>
bool proportional_to_constant(const std::array<Poly<K>, 3>& C, std::vector<K>& point_out) {
    bool any = false;
    for (int i = 0; i < 3; ++i) any |= !C[i].is_zero();
    if (!any) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(C[i].scaled(leading_of(C[j])) == C[j].scaled(leading_of(C[i])))) return false;
    point_out.clear();
    for (int i = 0; i < 3; ++i) point_out.push_back(leading_of(C[i]));
    return true;
}

}  // namespace detail

/// common gcd reduction of a pair of (s,t)-polynomials
template <class K>
void reduce_pair(std::array<Poly<K>, 2>& pr) {
    if (pr[0].is_zero() && pr[1].is_zero()) return;
    std::vector<Poly<K>> nz;
    for (auto& f : pr)
        if (!f.is_zero()) nz.push_back(f);
    Poly<K> g = map_gcd<K>(nz);
    if (g.degree() > 0)
        for (auto& f : pr)
            if (!f.is_zero()) f = exact_div(f, g);
    // canonical scaling
    std::vector<Poly<K>> v{pr[0], pr[1]};
    tuple_normalize(v);
    pr = {v[0], v[1]};
}

/// Induced map of f on the exceptional line over the chart's center.
/// `target_charts` supplies charts of candidate image centers (for direction
/// coordinates on the target side); the source chart is used when the image
/// center equals the source center.
template <class K>
InducedPoint<K> induced_on_point_blowup(const RatMap<K>& f, const PointChart<K>& ch,
                                        const std::vector<PointChart<K>>& target_charts = {}) {
    auto A = detail::expansion(f, ch);
    int v = -1;
    for (auto& a : A) {
        int va = detail::e_valuation(a);
        if (va >= 0) v = (v < 0) ? va : std::min(v, va);
    }
    if (v < 0) throw std::domain_error("induced map: zero expansion");
    std::array<Poly<K>, 3> C;
    for (int i = 0; i < 3; ++i) C[i] = detail::e_coefficient(A[i], v);

    InducedPoint<K> out;
    std::vector<K> x0;
    bool is_const = detail::proportional_to_constant(C, x0);
    if (!is_const) {
        // directions sweep a plane curve
        out.kind = InducedPoint<K>::OntoCurve;
        std::vector<Poly<K>> param{C[0], C[1], C[2]};
        Poly<K> g = map_gcd<K>(param);
        if (g.degree() > 0)
            for (auto& f2 : param) f2 = exact_div(f2, g);
        tuple_normalize(param);
        out.curve_param = std::move(param);
        return out;
    }
    x0 = canonical_point(std::move(x0));
    out.target = x0;

    // direction data through the chart at the image point
    PointChart<K> tch;
    bool found = false;
    if (same_point(x0, ch.point)) {
        tch = ch;
        found = true;
    } else {
        for (auto& cand : target_charts)
            if (same_point(cand.point, x0)) {
                tch = cand;
                found = true;
                break;
            }
    }
    if (!found) tch = default_chart(x0);

    // forms of the target chart applied to the expansion, lowest joint order
    VarList ste = A[0].vars;
    Poly<K> M1(ste), M2(ste);
    for (int i = 0; i < 3; ++i) {
        if (!(tch.L[0][i] == K{})) M1 += A[i].scaled(tch.L[0][i]);
        if (!(tch.L[1][i] == K{})) M2 += A[i].scaled(tch.L[1][i]);
    }
    int k1 = detail::e_valuation(M1), k2 = detail::e_valuation(M2);
    if (k1 < 0 && k2 < 0) throw std::domain_error("induced map: chart forms vanish identically");
    int k = (k1 < 0) ? k2 : (k2 < 0 ? k1 : std::min(k1, k2));
    std::array<Poly<K>, 2> dir{detail::e_coefficient(M2, k), detail::e_coefficient(M1, k)};
    reduce_pair(dir);

    bool dir_const = dir[0].degree() <= 0 && dir[1].degree() <= 0;
    if (dir_const) {
        out.kind = InducedPoint<K>::Collapsed;
        out.target_dir = {detail::leading_of(dir[0]), detail::leading_of(dir[1])};
        return out;
    }
    out.dir_map = dir;
    out.kind = same_point(x0, ch.point) ? InducedPoint<K>::SelfMap : InducedPoint<K>::ToExceptional;
    return out;
}

/// apply a direction map to a direction point
template <class K>
std::array<K, 2> apply_dir_map(const std::array<Poly<K>, 2>& dm, const std::array<K, 2>& st) {
    std::vector<K> v{st[0], st[1]};
    return {dm[0].eval(v), dm[1].eval(v)};
}

template <class K>
std::array<K, 2> canonical_dir(std::array<K, 2> d) {
    auto v = canonical_point(std::vector<K>{d[0], d[1]});
    return {v[0], v[1]};
}

template <class K>
bool same_dir(const std::array<K, 2>& a, const std::array<K, 2>& b) {
    return same_point(std::vector<K>{a[0], a[1]}, std::vector<K>{b[0], b[1]});
}

// ---------------------------------------------------------------------------
// line blow-ups in 3-space
// ---------------------------------------------------------------------------

/// Induced map on the exceptional surface of the blow-up of P^3 along the
/// coordinate line {x2 = x3 = 0}. Points of the exceptional are written
/// ([u,v],[s,t]): [u,v] the position along the line (first two coordinates),
/// [s,t] the normal direction with x2 = t*e, x3 = s*e.
template <class K>
struct InducedLine {
    std::array<Poly<K>, 2> pos;  // in variables (u, v, s, t)
    std::array<Poly<K>, 2> dir;
    bool contracted = false;     // image does not depend on (u,v,s,t) jointly
};

template <class K>
InducedLine<K> induced_on_line_blowup(const RatMap<K>& f) {
    if (f.co.size() != 4) throw std::invalid_argument("induced_on_line_blowup: need a 3-space map");
    VarList uvste = make_vars({"u", "v", "s", "t", "e"});
    std::vector<Poly<K>> imgs(4, Poly<K>(uvste));
    K one = f.co[0].one_like();
    imgs[0] = Poly<K>::monomial(uvste, {1, 0, 0, 0, 0}, one);
    imgs[1] = Poly<K>::monomial(uvste, {0, 1, 0, 0, 0}, one);
    imgs[2] = Poly<K>::monomial(uvste, {0, 0, 0, 1, 1}, one);  // x2 = t e
    imgs[3] = Poly<K>::monomial(uvste, {0, 0, 1, 0, 1}, one);  // x3 = s e
    std::vector<Poly<K>> A;
    for (auto& c : f.co) A.push_back(c.template substitute<Poly<K>>(imgs));

    auto eval_val = [&](const Poly<K>& g) {
        int v = -1;
        for (auto& [e, c] : g.terms) v = (v < 0) ? e[4] : std::min(v, e[4]);
        return v;
    };
    auto ecoeff = [&](const Poly<K>& g, int k) {
        VarList uvst = make_vars({"u", "v", "s", "t"});
        Poly<K> r(uvst);
        for (auto& [e, c] : g.terms)
            if (e[4] == k) r.terms.emplace(Exps{e[0], e[1], e[2], e[3]}, c);
        return r;
    };

    int v = -1;
    for (auto& a : A) {
        int va = eval_val(a);
        if (va >= 0) v = (v < 0) ? va : std::min(v, va);
    }
    if (v < 0) throw std::domain_error("induced_on_line_blowup: zero expansion");

    InducedLine<K> out;
    out.pos = {ecoeff(A[0], v), ecoeff(A[1], v)};
    if (out.pos[0].is_zero() && out.pos[1].is_zero())
        throw std::domain_error("induced_on_line_blowup: image leaves the line");
    int k2 = eval_val(A[2]), k3 = eval_val(A[3]);
    if ((k2 >= 0 && k2 <= v) || (k3 >= 0 && k3 <= v))
        throw std::domain_error("induced_on_line_blowup: image leaves the line");
    if (k2 < 0 && k3 < 0)
        throw std::domain_error("induced_on_line_blowup: degenerate normal expansion");
    int k = (k2 < 0) ? k3 : (k3 < 0 ? k2 : std::min(k2, k3));
    out.dir = {ecoeff(A[3], k), ecoeff(A[2], k)};

    reduce_pair(out.pos);
    reduce_pair(out.dir);
    return out;
}

/// composition of induced maps on the product of two lines:
/// substitute (u,v,s,t) -> (g.pos, g.dir) into h's formulas
template <class K>
InducedLine<K> compose_induced_line(const InducedLine<K>& h, const InducedLine<K>& g) {
    std::vector<Poly<K>> imgs{g.pos[0], g.pos[1], g.dir[0], g.dir[1]};
    InducedLine<K> out;
    out.pos = {h.pos[0].template substitute<Poly<K>>(imgs),
               h.pos[1].template substitute<Poly<K>>(imgs)};
    out.dir = {h.dir[0].template substitute<Poly<K>>(imgs),
               h.dir[1].template substitute<Poly<K>>(imgs)};
    reduce_pair(out.pos);
    reduce_pair(out.dir);
    return out;
}

template <class K>
bool same_pair(const std::array<Poly<K>, 2>& a, const std::array<Poly<K>, 2>& b) {
    // proportional as a pair: cross-multiplication
    return (a[0] * b[1] == a[1] * b[0]) && !(a[0].is_zero() && a[1].is_zero());
}

} // namespace bidyn

#endif
