#ifndef BIDYN_POLY_HPP
#define BIDYN_POLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bidyn/numeric.hpp"

namespace bidyn {

using Exps = std::vector<int>;
using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// graded lexicographic order; first variable strongest
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Exact multivariate polynomial over K (Rat or Fp). Terms are kept in a map
/// ordered by grlex; no zero coefficients are stored.
template <class K>
class Poly {
public:
    VarList vars;
    std::map<Exps, K, GrlexLess> terms;

    Poly() = default;
    explicit Poly(VarList v) : vars(std::move(v)) {}

    static Poly zero(VarList v) { return Poly(std::move(v)); }

    static Poly constant(VarList v, K c) {
        Poly p(v);
        Exps e(v->size(), 0);
        if (!(c == K{})) p.terms.emplace(std::move(e), std::move(c));
        return p;
    }

    static Poly variable(VarList v, std::size_t i, K one) {
        Poly p(v);
        Exps e(v->size(), 0);
        e[i] = 1;
        p.terms.emplace(std::move(e), std::move(one));
        return p;
    }

    static Poly monomial(VarList v, Exps e, K c) {
        Poly p(v);
        if (!(c == K{})) p.terms.emplace(std::move(e), std::move(c));
        return p;
    }

    std::size_t nvars() const { return vars ? vars->size() : 0; }
    bool is_zero() const { return terms.empty(); }

    int degree() const {
        if (terms.empty()) return -1;
        return total_degree(terms.rbegin()->first);
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (auto& [e, c] : terms) d = std::max(d, e[var]);
        return d;
    }

    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int d = total_degree(terms.begin()->first);
        for (auto& [e, c] : terms)
            if (total_degree(e) != d) return false;
        return true;
    }

    const K* leading_coeff() const {
        if (terms.empty()) return nullptr;
        return &terms.rbegin()->second;
    }
    const Exps* leading_exps() const {
        if (terms.empty()) return nullptr;
        return &terms.rbegin()->first;
    }

    void add_term(const Exps& e, const K& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!(c == K{})) terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == K{}) terms.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_compatible(a, b);
        Poly r(a.vars ? a.vars : b.vars);
        r.terms = a.terms;
        for (auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r(vars);
        for (auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_compatible(a, b);
        Poly r(a.vars ? a.vars : b.vars);
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                Exps e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const K& c) const {
        Poly r(vars);
        if (c == K{}) return r;
        for (auto& [e, k] : terms) r.terms.emplace(e, k * c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms.size() != b.terms.size()) return false;
        auto ia = a.terms.begin();
        for (auto ib = b.terms.begin(); ib != b.terms.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly r = constant(vars, one_like());
        Poly b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    K eval(const std::vector<K>& pt) const {
        K acc{};
        for (auto& [e, c] : terms) {
            K t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int j = 0; j < e[i]; ++j) t *= pt[i];
            acc += t;
        }
        return acc;
    }

    /// full substitution x_i -> imgs[i]; imgs share one variable list
    template <class P2>
    P2 substitute(const std::vector<P2>& imgs) const {
        if (imgs.size() != nvars()) throw std::invalid_argument("substitute: arity mismatch");
        P2 acc;
        if (!imgs.empty()) acc = P2(imgs[0].vars);
        for (auto& [e, c] : terms) {
            P2 t = P2::constant(imgs.empty() ? VarList{} : imgs[0].vars, convert_coeff<typename P2::coeff_type>(c));
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t *= imgs[i].pow(static_cast<unsigned>(e[i]));
            acc += t;
        }
        return acc;
    }

    Poly derivative(std::size_t var, const K& one) const {
        Poly r(vars);
        for (auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            Exps e2(e);
            e2[var] -= 1;
            K mult{};
            for (int j = 0; j < e[var]; ++j) mult += one;
            r.add_term(e2, c * mult);
        }
        return r;
    }

    using coeff_type = K;

    K one_like() const {
        if (!terms.empty()) return unit_of(terms.begin()->second);
        return K{};
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            std::string cs = coeff_str(it->second);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            bool any_var = total_degree(it->first) > 0;
            bool coeff_is_one = (cs == "1");
            if (!coeff_is_one || !any_var) os << cs;
            bool need_star = !coeff_is_one && any_var;
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                int e = it->first[i];
                if (e == 0) continue;
                if (need_star) os << "*";
                need_star = true;
                os << (*vars)[i];
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    static void check_compatible(const Poly& a, const Poly& b) {
        if (a.vars && b.vars && a.vars != b.vars && *a.vars != *b.vars)
            throw std::invalid_argument("poly: variable list mismatch");
    }
    static K unit_of(const K& sample);
    template <class K2>
    static K2 convert_coeff(const K& c);
    static std::string coeff_str(const K& c);
};

template <>
inline Rat Poly<Rat>::unit_of(const Rat&) { return Rat(1); }
template <>
inline Fp Poly<Fp>::unit_of(const Fp& sample) { return Fp(1, sample.p); }

template <>
template <>
inline Rat Poly<Rat>::convert_coeff<Rat>(const Rat& c) { return c; }
template <>
template <>
inline Fp Poly<Fp>::convert_coeff<Fp>(const Fp& c) { return c; }

template <>
inline std::string Poly<Rat>::coeff_str(const Rat& c) { return c.get_str(); }
template <>
inline std::string Poly<Fp>::coeff_str(const Fp& c) { return std::to_string(c.v); }

using PolyQ = Poly<Rat>;
using PolyP = Poly<Fp>;

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

/// reduce a rational-coefficient polynomial mod p; throws if a denominator
/// vanishes (bad prime)
inline PolyP reduce_mod(const PolyQ& f, const GF& gf) {
    auto vars = f.vars;
    PolyP r(vars);
    Int p(static_cast<unsigned long>(gf.p));
    for (auto& [e, c] : f.terms) {
        Int den = denominator(c);
        if (den % p == 0) throw std::domain_error("reduce_mod: denominator divisible by p");
        Fp num = gf.from_int(numerator(c));
        Fp d = gf.from_int(den);
        Fp v = num / d;
        if (!v.is_zero()) r.terms.emplace(e, v);
    }
    return r;
}

/// integer-normalize: scale so coefficients are coprime integers and the
/// grlex-leading coefficient is positive; returns the applied factor
inline Rat int_normalize(PolyQ& f) {
    if (f.terms.empty()) return Rat(1);
    Int den(1), num(0);
    for (auto& [e, c] : f.terms) den = lcm(den, denominator(c));
    for (auto& [e, c] : f.terms) num = gcd(num, Int(numerator(c) * (den / denominator(c))));
    Rat scale = Rat(den) / Rat(num);
    if (sgn(*f.leading_coeff()) < 0) scale = -scale;
    for (auto& [e, c] : f.terms) {
        const_cast<Rat&>(c) *= scale;
        const_cast<Rat&>(c).canonicalize();
    }
    return scale;
}

/// monic-normalize over Fp
inline Fp monic_normalize(PolyP& f) {
    if (f.terms.empty()) return Fp();
    Fp lc = *f.leading_coeff();
    Fp ilc = lc.inv();
    for (auto& [e, c] : f.terms) const_cast<Fp&>(c) *= ilc;
    return ilc;
}

template <class K>
Poly<K> normalized_unit(const Poly<K>& f);

template <>
inline PolyQ normalized_unit<Rat>(const PolyQ& f) {
    PolyQ g = f;
    int_normalize(g);
    return g;
}
template <>
inline PolyP normalized_unit<Fp>(const PolyP& f) {
    PolyP g = f;
    monic_normalize(g);
    return g;
}

/// exact division; throws if not divisible
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    Poly<K> rem = a, quot(a.vars.get() ? a.vars : b.vars);
    const Exps& lb = *b.leading_exps();
    const K& cb = *b.leading_coeff();
    while (!rem.is_zero()) {
        const Exps& lr = *rem.leading_exps();
        Exps q(lr.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = lr[i] - lb[i];
            if (q[i] < 0) throw std::domain_error("exact_div: not divisible");
        }
        K cq = *rem.leading_coeff() / cb;
        Poly<K> m = Poly<K>::monomial(rem.vars, q, cq);
        quot += m;
        rem -= m * b;
    }
    return quot;
}

template <class K>
bool divides(const Poly<K>& b, const Poly<K>& a, Poly<K>* quotient = nullptr) {
    if (a.is_zero()) {
        if (quotient) *quotient = Poly<K>(a.vars);
        return true;
    }
    if (b.is_zero()) return false;
    try {
        Poly<K> q = exact_div(a, b);
        if (quotient) *quotient = std::move(q);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

} // namespace bidyn

#endif
