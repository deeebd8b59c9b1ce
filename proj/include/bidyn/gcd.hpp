#ifndef BIDYN_GCD_HPP
#define BIDYN_GCD_HPP

#include "bidyn/poly.hpp"

namespace bidyn {

template <class K>
int degree_in_var(const Poly<K>& f, std::size_t m) {
    int d = -1;
    for (auto& [e, c] : f.terms) d = std::max(d, e[m]);
    return d;
}

/// coefficient of x_m^d, as a polynomial with the m-exponent removed
template <class K>
Poly<K> coeff_in_var(const Poly<K>& f, std::size_t m, int d) {
    Poly<K> r(f.vars);
    for (auto& [e, c] : f.terms)
        if (e[m] == d) {
            Exps e2(e);
            e2[m] = 0;
            r.terms.emplace(std::move(e2), c);
        }
    return r;
}

template <class K>
Poly<K> shift_var(const Poly<K>& f, std::size_t m, int k) {
    Poly<K> r(f.vars);
    for (auto& [e, c] : f.terms) {
        Exps e2(e);
        e2[m] += k;
        r.terms.emplace(std::move(e2), c);
    }
    return r;
}

/// pseudo-remainder of a by b in variable m
template <class K>
Poly<K> prem_var(const Poly<K>& a, const Poly<K>& b, std::size_t m) {
    int db = degree_in_var(b, m);
    Poly<K> lb = coeff_in_var(b, m, db);
    Poly<K> r = a;
    while (!r.is_zero()) {
        int dr = degree_in_var(r, m);
        if (dr < db) break;
        Poly<K> lr = coeff_in_var(r, m, dr);
        r = r * lb - shift_var(lr * b, m, dr - db);
    }
    return r;
}

template <class K>
Poly<K> gcd_field(const Poly<K>& a, const Poly<K>& b);

template <class K>
Poly<K> content_in_var(const Poly<K>& f, std::size_t m) {
    Poly<K> c(f.vars);
    int d = degree_in_var(f, m);
    for (int i = 0; i <= d; ++i) {
        Poly<K> ci = coeff_in_var(f, m, i);
        if (!ci.is_zero()) c = gcd_field(c, ci);
    }
    return c;
}

/// primitive-PRS gcd over a field K; total in both arguments
template <class K>
Poly<K> gcd_field(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero()) return normalized_unit(b);
    if (b.is_zero()) return normalized_unit(a);
    // pick the first variable appearing in either
    std::size_t n = a.nvars();
    std::size_t m = n;
    for (std::size_t i = 0; i < n; ++i)
        if (degree_in_var(a, i) > 0 || degree_in_var(b, i) > 0) { m = i; break; }
    if (m == n) return Poly<K>::constant(a.vars, a.one_like());  // both constants

    if (degree_in_var(a, m) == 0) return gcd_field(content_in_var(b, m), a);
    if (degree_in_var(b, m) == 0) return gcd_field(content_in_var(a, m), b);

    Poly<K> ca = content_in_var(a, m), cb = content_in_var(b, m);
    Poly<K> pa = exact_div(a, ca), pb = exact_div(b, cb);
    Poly<K> cg = gcd_field(ca, cb);

    if (degree_in_var(pa, m) < degree_in_var(pb, m)) std::swap(pa, pb);
    for (;;) {
        Poly<K> r = prem_var(pa, pb, m);
        if (r.is_zero()) break;
        if (degree_in_var(r, m) == 0) {
            pb = Poly<K>::constant(a.vars, a.one_like());
            break;
        }
        r = exact_div(r, content_in_var(r, m));
        pa = std::move(pb);
        pb = std::move(r);
    }
    if (degree_in_var(pb, m) == 0) return normalized_unit(cg);
    pb = exact_div(pb, content_in_var(pb, m));
    return normalized_unit(Poly<K>(cg * pb));
}

/// total gcd with canonical normalization (primitive, positive / monic
/// leading coefficient in grlex order). For rational coefficients a modular
/// image runs first: trivial gcds return immediately, nontrivial ones are
/// lifted by CRT and certified by exact division, falling back to the
/// primitive PRS if lifting stalls.
PolyQ gcd_poly(const PolyQ& a, const PolyQ& b);
PolyP gcd_poly(const PolyP& a, const PolyP& b);

PolyQ gcd_poly(const std::vector<PolyQ>& fs);
PolyP gcd_poly(const std::vector<PolyP>& fs);

} // namespace bidyn

#endif
