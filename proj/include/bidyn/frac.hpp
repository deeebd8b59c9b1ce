#ifndef BIDYN_FRAC_HPP
#define BIDYN_FRAC_HPP

#include "bidyn/gcd.hpp"
#include "bidyn/series.hpp"

namespace bidyn {

/// Rational function over Q in a fixed variable list. Canonical form: the
/// numerator/denominator pair is coprime, the denominator integer-primitive
/// with positive leading coefficient. A default-constructed value is zero.
struct RatFunc {
    PolyQ num;
    PolyQ den;  // zero polynomial stands for 1 on a default object

    RatFunc() = default;
    RatFunc(PolyQ n, PolyQ d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    explicit RatFunc(PolyQ n) : num(std::move(n)) {
        den = PolyQ::constant(num.vars, Rat(1));
        normalize();
    }
    static RatFunc constant(VarList vars, const Rat& c) {
        return RatFunc(PolyQ::constant(vars, c));
    }

    bool is_zero() const { return num.is_zero(); }

    VarList vars() const { return num.vars ? num.vars : den.vars; }

    PolyQ den_or_one() const {
        if (!den.is_zero()) return den;
        return PolyQ::constant(vars(), Rat(1));
    }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num.is_zero()) {
            den = PolyQ::constant(den.vars, Rat(1));
            return;
        }
        PolyQ g = gcd_poly(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        PolyQ d = den;
        Rat scale = int_normalize(d);
        den = d;
        num = num.scaled(scale);
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return RatFunc(a.num * b.den_or_one() + b.num * a.den_or_one(),
                       a.den_or_one() * b.den_or_one());
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        return RatFunc(a.num * b.num, a.den_or_one() * b.den_or_one());
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num * b.den_or_one(), a.den_or_one() * b.num);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b.is_zero();
        if (b.is_zero()) return false;
        return (a.num * b.den_or_one()) == (b.num * a.den_or_one());
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(unsigned e) const {
        RatFunc r = constant(vars(), Rat(1));
        RatFunc b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    std::optional<Rat> eval(const std::vector<Rat>& pt) const {
        if (is_zero()) return Rat(0);
        Rat d = den_or_one().eval(pt);
        if (d == Rat(0)) return std::nullopt;
        return num.eval(pt) / d;
    }
};

template <>
inline RatFunc Series<RatFunc>::unit_inv(const RatFunc& x) {
    return RatFunc::constant(x.vars(), Rat(1)) / x;
}

/// evaluate a polynomial at rational-function arguments
inline RatFunc eval_poly_ratfunc(const PolyQ& f, const std::vector<RatFunc>& args) {
    if (f.nvars() != args.size()) throw std::invalid_argument("eval_poly_ratfunc: arity");
    RatFunc acc;
    for (auto& [e, c] : f.terms) {
        RatFunc t = RatFunc::constant(args.empty() ? f.vars : args[0].vars(), c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= args[i].pow(static_cast<unsigned>(e[i]));
        acc += t;
    }
    return acc;
}

} // namespace bidyn

#endif
