#ifndef BIDYN_SERIES_HPP
#define BIDYN_SERIES_HPP

#include <optional>

#include "bidyn/poly.hpp"

namespace bidyn {

/// Truncated power series: coefficients c[0..order] are trusted, nothing
/// beyond order is claimed. K must be a field type.
template <class K>
struct Series {
    int order = 0;
    std::vector<K> c;  // size order+1

    Series() : c(1) {}
    Series(int ord, std::vector<K> coeffs) : order(ord), c(std::move(coeffs)) { c.resize(ord + 1); }

    static Series constant(int ord, K v) {
        Series s(ord, {});
        s.c.assign(ord + 1, K{});
        s.c[0] = std::move(v);
        return s;
    }
    static Series var(int ord, const K& one) {
        Series s(ord, {});
        s.c.assign(ord + 1, K{});
        if (ord >= 1) s.c[1] = one;
        return s;
    }

    bool is_zero() const {
        for (auto& x : c)
            if (!(x == K{})) return false;
        return true;
    }

    /// index of the first nonzero coefficient; order+1 if none
    int valuation() const {
        for (int i = 0; i <= order; ++i)
            if (!(c[i] == K{})) return i;
        return order + 1;
    }

    Series truncated(int ord) const {
        Series r(ord, {});
        r.c.assign(ord + 1, K{});
        for (int i = 0; i <= std::min(ord, order); ++i) r.c[i] = c[i];
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int ord = std::min(a.order, b.order);
        Series r(ord, {});
        r.c.assign(ord + 1, K{});
        for (int i = 0; i <= ord; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int ord = std::min(a.order, b.order);
        Series r(ord, {});
        r.c.assign(ord + 1, K{});
        for (int i = 0; i <= ord; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int ord = std::min(a.order, b.order);
        Series r(ord, {});
        r.c.assign(ord + 1, K{});
        for (int i = 0; i <= ord; ++i) {
            if (a.c[i] == K{}) continue;
            for (int j = 0; i + j <= ord && j <= b.order; ++j) {
                if (b.c[j] == K{}) continue;
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return r;
    }

    Series scaled(const K& s) const {
        Series r = *this;
        for (auto& x : r.c) x *= s;
        return r;
    }

    /// multiply by t^k (k may be negative if valuation allows)
    Series shifted(int k) const {
        Series r(order, {});
        r.c.assign(order + 1, K{});
        for (int i = 0; i <= order; ++i) {
            int j = i + k;
            if (j < 0) {
                if (!(c[i] == K{})) throw std::domain_error("series shift below zero");
                continue;
            }
            if (j <= order) r.c[j] = c[i];
        }
        return r;
    }

    /// inverse of a unit series (c[0] != 0)
    Series inverse() const {
        if (c[0] == K{}) throw std::domain_error("series inverse: not a unit");
        Series r(order, {});
        r.c.assign(order + 1, K{});
        K i0 = unit_inv(c[0]);
        r.c[0] = i0;
        for (int n = 1; n <= order; ++n) {
            K acc{};
            for (int k = 1; k <= n; ++k) acc += c[k] * r.c[n - k];
            r.c[n] = -(acc * i0);
        }
        return r;
    }

    /// quotient a/b where val(a) >= val(b); lowers the trusted order by val(b)
    friend Series divide(const Series& a, const Series& b) {
        int vb = b.valuation();
        if (vb > b.order) throw std::domain_error("series divide: zero divisor");
        int va = a.valuation();
        if (va < vb) throw std::domain_error("series divide: negative valuation");
        int ord = std::min(a.order, b.order) - vb;
        Series an = a.shifted(-vb).truncated(ord);
        Series bn = b.shifted(-vb).truncated(ord);
        return an * bn.inverse();
    }

    static K unit_inv(const K& x);
};

template <>
inline Rat Series<Rat>::unit_inv(const Rat& x) { return Rat(1) / x; }

/// evaluate a polynomial at series arguments, mapping coefficients with conv
template <class K, class KS, class Conv>
Series<KS> eval_poly_series(const Poly<K>& f, const std::vector<Series<KS>>& args, int ord,
                            Conv&& conv) {
    Series<KS> acc = Series<KS>::constant(ord, KS{});
    for (auto& [e, co] : f.terms) {
        Series<KS> t = Series<KS>::constant(ord, conv(co));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t = t * args[i];
        acc = acc + t;
    }
    return acc;
}

/// Newton solve F(a, t) = 0 for a as a series in t, starting from a(0) = a0
/// with dF/da(a0, 0) invertible. F is bivariate: variable 0 is the unknown,
/// variable 1 the series parameter.
template <class KS, class K, class Conv>
Series<KS> newton_series_solve(const Poly<K>& F, const KS& a0, int ord, Conv&& conv) {
    Poly<K> dF = F.derivative(0, F.one_like());
    Series<KS> t = Series<KS>::var(ord, conv(F.one_like()));
    Series<KS> a = Series<KS>::constant(ord, a0);
    // quadratic convergence: precision doubles per step
    for (int prec = 1; ; prec *= 2) {
        std::vector<Series<KS>> args = {a, t};
        Series<KS> val = eval_poly_series(F, args, ord, conv);
        Series<KS> der = eval_poly_series(dF, args, ord, conv);
        if (der.c[0] == KS{}) throw std::domain_error("newton_series_solve: singular branch");
        a = a - val * der.inverse();
        if (prec >= ord) break;
    }
    return a;
}

/// Branch expansion for a plane curve through the origin: solve curve(a,b)=0
/// for variable `solve_for` (0 or 1) as a series in the other variable.
/// The branch must be smooth with the chosen parameter.
Series<Rat> series_branch(const PolyQ& curve, int solve_for, int order);

} // namespace bidyn

#endif
