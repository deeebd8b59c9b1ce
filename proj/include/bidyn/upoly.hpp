#ifndef BIDYN_UPOLY_HPP
#define BIDYN_UPOLY_HPP

#include <vector>

#include "bidyn/numeric.hpp"

namespace bidyn {

/// dense univariate polynomial, c[i] = coefficient of x^i
template <class K>
struct UPoly {
    std::vector<K> c;

    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == K{}) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }

    K coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K{}; }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] += a.c[i];
            if (i < b.c.size()) r.c[i] += b.c[i];
        }
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] += a.c[i];
            if (i < b.c.size()) r.c[i] -= b.c[i];
        }
        r.trim();
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K{});
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == K{}) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    UPoly scaled(const K& s) const {
        UPoly r = *this;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }

    K eval(const K& x) const {
        K acc{};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly derivative(const K& one) const {
        UPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        K k{};
        for (std::size_t i = 1; i < c.size(); ++i) {
            k += one;
            r.c[i - 1] = c[i] * k;
        }
        r.trim();
        return r;
    }
};

/// field division with remainder
template <class K>
void udivmod(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& q, UPoly<K>& r) {
    if (b.is_zero()) throw std::domain_error("udivmod: division by zero");
    q = UPoly<K>();
    r = a;
    int db = b.deg();
    K ilc = b.c.back();
    // field inverse
    q.c.assign(std::max<int>(a.deg() - db + 1, 0), K{});
    while (!r.is_zero() && r.deg() >= db) {
        int d = r.deg() - db;
        K f = r.c.back() / b.c.back();
        q.c[d] += f;
        for (int i = 0; i <= db; ++i) r.c[d + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    (void)ilc;
}

template <class K>
UPoly<K> ugcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> q, r;
        udivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        K ilc = a.c.back();
        for (auto& x : a.c) x = x / ilc;
    }
    return a;
}

/// Binary form of degree deg: coeff(i) multiplies s^i t^(deg-i).
/// The zero form keeps a formal degree for bookkeeping.
template <class K>
struct BinForm {
    int deg = 0;
    std::vector<K> c;  // size deg+1

    BinForm() : deg(0), c(1) {}
    BinForm(int d, std::vector<K> coeffs) : deg(d), c(std::move(coeffs)) {
        if ((int)c.size() != deg + 1) c.resize(deg + 1);
    }
    static BinForm zero(int d) { return BinForm(d, std::vector<K>(d + 1)); }

    bool is_zero() const {
        for (auto& x : c)
            if (!(x == K{})) return false;
        return true;
    }

    friend BinForm operator+(const BinForm& a, const BinForm& b) {
        if (a.deg != b.deg) throw std::invalid_argument("binform: degree mismatch");
        BinForm r = a;
        for (int i = 0; i <= a.deg; ++i) r.c[i] += b.c[i];
        return r;
    }
    friend BinForm operator*(const BinForm& a, const BinForm& b) {
        BinForm r = zero(a.deg + b.deg);
        for (int i = 0; i <= a.deg; ++i) {
            if (a.c[i] == K{}) continue;
            for (int j = 0; j <= b.deg; ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    BinForm scaled(const K& s) const {
        BinForm r = *this;
        for (auto& x : r.c) x *= s;
        return r;
    }

    BinForm pow(unsigned e) const {
        BinForm r(0, {one_hint()});
        BinForm b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    K one_hint() const;
};

template <>
inline Rat BinForm<Rat>::one_hint() const { return Rat(1); }
template <>
inline Fp BinForm<Fp>::one_hint() const {
    for (auto& x : c)
        if (x.p) return Fp(1, x.p);
    return Fp();
}

/// gcd of binary forms: strip shared s- and t-powers, then a univariate gcd
template <class K>
BinForm<K> bingcd(const BinForm<K>& a, const BinForm<K>& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("bingcd: zero form");
    auto low = [](const BinForm<K>& f) {
        int i = 0;
        while (f.c[i] == K{}) ++i;
        return i;
    };
    auto high = [](const BinForm<K>& f) {
        int i = f.deg;
        while (f.c[i] == K{}) --i;
        return i;
    };
    int s_pow = std::min(low(a), low(b));
    int t_pow = std::min(a.deg - high(a), b.deg - high(b));
    auto dehom = [&](const BinForm<K>& f) {
        UPoly<K> u;
        u.c.assign(f.c.begin() + low(f), f.c.begin() + high(f) + 1);
        u.trim();
        return u;
    };
    UPoly<K> g = ugcd(dehom(a), dehom(b));
    BinForm<K> r(s_pow + t_pow + g.deg(), {});
    r.c.assign(r.deg + 1, K{});
    for (int i = 0; i <= g.deg(); ++i) r.c[s_pow + i] = g.coeff(i);
    return r;
}

/// exact division of binary forms (a = q*b); throws if not divisible
template <class K>
BinForm<K> binform_exact_div(const BinForm<K>& a, const BinForm<K>& b) {
    auto low = [](const BinForm<K>& f) {
        int i = 0;
        while (i <= f.deg && f.c[i] == K{}) ++i;
        return i;
    };
    int la = low(a), lb = low(b);
    if (la > a.deg) return BinForm<K>::zero(a.deg - b.deg);
    if (la < lb) throw std::domain_error("binform division: s-power");
    UPoly<K> ua, ub;
    ua.c.assign(a.c.begin() + la, a.c.end());
    ua.trim();
    ub.c.assign(b.c.begin() + lb, b.c.end());
    ub.trim();
    UPoly<K> q, r;
    udivmod(ua, ub, q, r);
    if (!r.is_zero()) throw std::domain_error("binform division: remainder");
    int dq = a.deg - b.deg;
    BinForm<K> out = BinForm<K>::zero(dq);
    int shift = la - lb;
    for (int i = 0; i <= q.deg(); ++i) out.c[shift + i] = q.coeff(i);
    return out;
}

} // namespace bidyn

#endif
