#ifndef BIDYN_CHART_HPP
#define BIDYN_CHART_HPP

#include <array>

#include "bidyn/gcd.hpp"

namespace bidyn {

/// Linear chart at a projective point: two independent linear forms L1, L2
/// vanishing at the point. Directions on the exceptional line over the point
/// are written [s : t] with s/t = L2(direction)/L1(direction), matching the
/// blow-up relation L1*s = L2*t.
template <class K>
struct PointChart {
    std::vector<K> point;             // 3 projective coordinates
    std::array<std::vector<K>, 2> L;  // each form as coefficient vectors
};

/// default chart: pivot = first nonvanishing coordinate j; the two forms are
/// P_j*x_i - P_i*x_j for the remaining indices in order
template <class K>
PointChart<K> default_chart(const std::vector<K>& P) {
    PointChart<K> ch;
    ch.point = P;
    std::size_t j = 0;
    while (j < P.size() && P[j] == K{}) ++j;
    if (j == P.size()) throw std::invalid_argument("default_chart: zero point");
    int slot = 0;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (i == j) continue;
        if (slot >= 2) break;
        std::vector<K> form(P.size(), K{});
        form[i] = P[j];
        form[j] = -P[i];
        ch.L[slot++] = std::move(form);
    }
    return ch;
}

template <class K>
K apply_form(const std::vector<K>& form, const std::vector<K>& v) {
    K acc{};
    for (std::size_t i = 0; i < form.size(); ++i) acc += form[i] * v[i];
    return acc;
}

/// direction [s:t] of a tangent vector in the chart
template <class K>
std::array<K, 2> chart_direction(const PointChart<K>& ch, const std::vector<K>& dir) {
    return {apply_form(ch.L[1], dir), apply_form(ch.L[0], dir)};
}

namespace detail {

inline Rat unit_for(const Rat&) { return Rat(1); }
inline Fp unit_for(const Fp& sample) { return Fp(1, sample.p); }

/// solve for basis vectors e1, e2 with Li(ej) = delta_ij; any solution works
/// since everything downstream is taken modulo the center
template <class K>
std::array<std::vector<K>, 2> dual_vectors(const PointChart<K>& ch) {
    std::size_t n = ch.point.size();
    // Gaussian elimination on the 2 x n system [L1; L2] for two right-hand sides
    // try pairs of columns until an invertible 2x2 minor appears
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            K det = ch.L[0][a] * ch.L[1][b] - ch.L[0][b] * ch.L[1][a];
            if (det == K{}) continue;
            // invert [[L0a, L0b], [L1a, L1b]]
            auto make = [&](const K& r0, const K& r1) {
                std::vector<K> v(n, K{});
                // v_a, v_b solving L0(v)=r0, L1(v)=r1
                v[a] = (ch.L[1][b] * r0 - ch.L[0][b] * r1) / det;
                v[b] = (ch.L[0][a] * r1 - ch.L[1][a] * r0) / det;
                return v;
            };
            K one = unit_for(det);
            return {make(one, K{}), make(K{}, one)};
        }
    throw std::invalid_argument("chart forms are dependent");
}

}  // namespace detail

/// a tangent vector realizing chart direction [s:t]
template <class K>
std::vector<K> chart_vector(const PointChart<K>& ch, const std::array<K, 2>& st) {
    auto duals = detail::dual_vectors(ch);
    // direction with L1 = t, L2 = s
    std::vector<K> v(ch.point.size(), K{});
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = duals[0][i] * st[1] + duals[1][i] * st[0];
    return v;
}

/// one infinitely-near step: a direction on the exceptional line of the
/// previous center, in that center's chart
template <class K>
struct ChartStep {
    std::array<K, 2> dir;  // [s, t]
};

/// local expansion of f at the chart's center as a polynomial in (u1, u2),
/// where u1, u2 are the chart coordinates (values of L1, L2)
template <class K>
Poly<K> local_expand(const Poly<K>& f, const PointChart<K>& ch) {
    auto duals = detail::dual_vectors(ch);
    VarList uv = make_vars({"u1", "u2"});
    std::vector<Poly<K>> imgs;
    for (std::size_t i = 0; i < ch.point.size(); ++i) {
        Poly<K> g = Poly<K>::constant(uv, ch.point[i]);
        if (!(duals[0][i] == K{}))
            g += Poly<K>::monomial(uv, {1, 0}, duals[0][i]);
        if (!(duals[1][i] == K{}))
            g += Poly<K>::monomial(uv, {0, 1}, duals[1][i]);
        imgs.push_back(g);
    }
    return f.template substitute<Poly<K>>(imgs);
}

/// order of vanishing at the origin (-1 for the zero polynomial)
template <class K>
int origin_mult(const Poly<K>& g) {
    if (g.is_zero()) return -1;
    int m = g.degree();
    for (auto& [e, c] : g.terms) m = std::min(m, total_degree(e));
    return m;
}

/// lowest homogeneous part at the origin
template <class K>
Poly<K> origin_cone(const Poly<K>& g) {
    Poly<K> r(g.vars);
    int m = origin_mult(g);
    for (auto& [e, c] : g.terms)
        if (total_degree(e) == m) r.terms.emplace(e, c);
    return r;
}

/// strict transform of g under blowing up the origin, in the chart centred at
/// direction [s:t]. Local direction vector is (u1, u2) = (t, s).
template <class K>
Poly<K> blowup_strict(const Poly<K>& g, const std::array<K, 2>& dir) {
    int m = origin_mult(g);
    if (m <= 0) throw std::domain_error("blowup_strict: needs positive multiplicity");
    VarList uv = g.vars;
    K s = dir[0], t = dir[1];
    std::vector<Poly<K>> imgs(2);
    Poly<K> u1 = Poly<K>::variable(uv, 0, detail::unit_for(s == K{} ? t : s));
    Poly<K> u2 = Poly<K>::variable(uv, 1, detail::unit_for(s == K{} ? t : s));
    if (!(t == K{})) {
        // direction has u1-component: chart u2 = u1 * (slope + w)
        K slope = s / t;
        imgs[0] = u1;
        imgs[1] = u1 * (Poly<K>::constant(uv, slope) + u2);
    } else {
        // direction along the u2-axis: chart u1 = u2 * w
        imgs[0] = u2 * u1;
        imgs[1] = u2;
    }
    Poly<K> total = g.template substitute<Poly<K>>(imgs);
    // divide by (chart exceptional)^m
    Poly<K> exc = (t == K{}) ? Poly<K>::variable(uv, 1, detail::unit_for(s))
                             : Poly<K>::variable(uv, 0, detail::unit_for(t));
    for (int i = 0; i < m; ++i) total = exact_div(total, exc);
    return total;
}

/// multiplicity of f at the chart's center, following an optional chain of
/// infinitely-near directions; 0 when the point is not on the zero locus
template <class K>
int mult_at(const Poly<K>& f, const PointChart<K>& ch,
            const std::vector<ChartStep<K>>& chain = {}) {
    Poly<K> g = local_expand(f, ch);
    int m = origin_mult(g);
    for (auto& step : chain) {
        if (m <= 0) return 0;
        g = blowup_strict(g, step.dir);
        m = origin_mult(g);
    }
    return std::max(m, 0);
}

/// lowest-order form of f at the center, pushed back to ambient coordinates
/// through the chart forms (for multiplicity 1: the tangent line)
template <class K>
Poly<K> tangent_cone(const Poly<K>& f, const PointChart<K>& ch) {
    Poly<K> g = local_expand(f, ch);
    if (origin_mult(g) <= 0)
        throw std::domain_error("tangent_cone: point not on the curve");
    Poly<K> cone = origin_cone(g);
    // substitute u1 -> L1(x), u2 -> L2(x)
    VarList amb = f.vars;
    std::vector<Poly<K>> forms(2, Poly<K>(amb));
    for (int k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < ch.L[k].size(); ++i)
            if (!(ch.L[k][i] == K{})) {
                Exps e(amb->size(), 0);
                e[i] = 1;
                forms[k].add_term(e, ch.L[k][i]);
            }
    return cone.template substitute<Poly<K>>(forms);
}

/// proportionality of polynomials (equal up to a nonzero scalar)
template <class K>
bool proportional(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalized_unit(a) == normalized_unit(b);
}

} // namespace bidyn

#endif
