#ifndef BIDYN_RATFUNC_POLY_HPP
#define BIDYN_RATFUNC_POLY_HPP

// Polynomials with rational-function coefficients: used for maps that carry
// free parameters. Instantiates the Poly/RatMap machinery over RatFunc.

#include "bidyn/frac.hpp"
#include "bidyn/ratmap.hpp"

namespace bidyn {

template <>
inline RatFunc Poly<RatFunc>::unit_of(const RatFunc& sample) {
    return RatFunc::constant(sample.vars(), Rat(1));
}
template <>
template <>
inline RatFunc Poly<RatFunc>::convert_coeff<RatFunc>(const RatFunc& c) { return c; }
template <>
inline std::string Poly<RatFunc>::coeff_str(const RatFunc& c) {
    if (c.is_zero()) return "0";
    std::string n = c.num.str();
    if (c.den_or_one().degree() <= 0 && c.den_or_one().terms.size() == 1 &&
        *c.den_or_one().leading_coeff() == Rat(1))
        return "(" + n + ")";
    return "(" + n + ")/(" + c.den_or_one().str() + ")";
}

using PolyF = Poly<RatFunc>;

template <>
inline PolyF normalized_unit<RatFunc>(const PolyF& f) {
    if (f.is_zero()) return f;
    PolyF g = f;
    RatFunc ilc = RatFunc::constant(f.leading_coeff()->vars(), Rat(1)) / *f.leading_coeff();
    for (auto& [e, c] : g.terms) const_cast<RatFunc&>(c) *= ilc;
    return g;
}

template <>
inline PolyF map_gcd<RatFunc>(const std::vector<PolyF>& co) {
    PolyF g;
    bool first = true;
    for (auto& f : co) {
        if (f.is_zero()) continue;
        g = first ? normalized_unit<RatFunc>(f) : gcd_field(g, f);
        first = false;
        if (g.degree() == 0) break;
    }
    return g;
}

inline void tuple_normalize(std::vector<PolyF>& co) {
    for (auto& f : co)
        if (!f.is_zero()) {
            RatFunc ilc = RatFunc::constant(f.leading_coeff()->vars(), Rat(1)) / *f.leading_coeff();
            for (auto& g : co)
                for (auto& [e, c] : g.terms) const_cast<RatFunc&>(c) *= ilc;
            return;
        }
}

} // namespace bidyn

#endif
