#include "bidyn/gcd.hpp"

#include <map>

namespace bidyn {

namespace {

// fixed prime stream for modular images; any good primes work, determinism
// keeps golden outputs stable
std::vector<std::uint64_t> prime_stream(std::size_t n) {
    Rng rng(0x9d2c5680c0a573a7ULL);
    std::vector<std::uint64_t> ps;
    while (ps.size() < n) {
        std::uint64_t p = random_prime31(rng);
        bool dup = false;
        for (auto q : ps) dup |= (q == p);
        if (!dup) ps.push_back(p);
    }
    return ps;
}

PolyQ clear_denominators(const PolyQ& f) {
    PolyQ g = f;
    int_normalize(g);
    return g;
}

Int leading_int(const PolyQ& f) { return numerator(*f.leading_coeff()); }

// symmetric lift of x mod m into (-m/2, m/2]
Int sym_lift(const Int& x, const Int& m) {
    Int r = x % m;
    if (sgn(r) < 0) r += m;
    if (r * 2 > m) r -= m;
    return r;
}

bool try_modular_gcd(const PolyQ& A, const PolyQ& B, PolyQ& out) {
    auto primes = prime_stream(24);
    std::map<Exps, Int, GrlexLess> acc;  // CRT accumulator
    Int modulus(1);
    Exps best_lead;
    bool have = false;
    PolyQ prev_lift(A.vars);
    Int gl = gcd(leading_int(A), leading_int(B));

    for (auto p : primes) {
        GF gf(p);
        Int pz(static_cast<unsigned long>(p));
        if (leading_int(A) % pz == 0 || leading_int(B) % pz == 0) continue;
        PolyP Ap, Bp, Gp;
        try {
            Ap = reduce_mod(A, gf);
            Bp = reduce_mod(B, gf);
            Gp = gcd_field(Ap, Bp);
        } catch (const std::domain_error&) {
            continue;
        }
        if (Gp.degree() == 0) {
            out = PolyQ::constant(A.vars, Rat(1));
            return true;
        }
        // scale so the leading coefficient matches gl mod p
        Fp target = gf.from_int(gl);
        PolyP Gs = Gp.scaled(target);

        const Exps& lead = *Gs.leading_exps();
        if (!have || GrlexLess{}(lead, best_lead)) {
            acc.clear();
            modulus = 1;
            best_lead = lead;
            have = true;
        } else if (GrlexLess{}(best_lead, lead)) {
            continue;  // unlucky prime
        }

        // CRT combine
        std::map<Exps, Int, GrlexLess> next;
        if (modulus == 1) {
            for (auto& [e, c] : Gs.terms) next[e] = Int(static_cast<unsigned long>(c.v));
        } else {
            Int m2 = modulus * pz;
            // exponents present in either accumulator or new image
            auto combine = [&](const Int& old, std::uint64_t nv) {
                // x = old mod modulus, x = nv mod p
                Int mi = modulus % pz;
                Fp invp = Fp(mi.get_ui(), p).inv();
                Int diff = Int(static_cast<unsigned long>(nv)) - (old % pz);
                Int t = (diff * Int(static_cast<unsigned long>(invp.v))) % pz;
                if (sgn(t) < 0) t += pz;
                Int x = old + modulus * t;
                return x % m2;
            };
            for (auto& [e, c] : Gs.terms) {
                auto it = acc.find(e);
                Int old = (it == acc.end()) ? Int(0) : it->second;
                next[e] = combine(old, c.v);
            }
            for (auto& [e, old] : acc)
                if (Gs.terms.find(e) == Gs.terms.end()) next[e] = combine(old, 0);
        }
        modulus = (modulus == 1) ? pz : modulus * pz;
        acc = std::move(next);

        // symmetric lift, stabilization + certification
        PolyQ lift(A.vars);
        for (auto& [e, c] : acc) {
            Int v = sym_lift(c, modulus);
            if (sgn(v) != 0) lift.terms.emplace(e, Rat(v));
        }
        if (!lift.is_zero() && lift == prev_lift) {
            PolyQ cand = lift;
            int_normalize(cand);
            if (divides(cand, A) && divides(cand, B)) {
                out = std::move(cand);
                return true;
            }
        }
        prev_lift = lift;
        // also try certification on the first lift for cheap cases
        if (modulus > Int(1)) {
            PolyQ cand = lift;
            if (!cand.is_zero()) {
                int_normalize(cand);
                if (cand.degree() > 0 && divides(cand, A) && divides(cand, B)) {
                    out = std::move(cand);
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

PolyP gcd_poly(const PolyP& a, const PolyP& b) { return gcd_field(a, b); }

PolyQ gcd_poly(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero()) return normalized_unit(b);
    if (b.is_zero()) return normalized_unit(a);
    PolyQ A = clear_denominators(a), B = clear_denominators(b);
    if (A.degree() == 0 || B.degree() == 0) return PolyQ::constant(A.vars, Rat(1));
    PolyQ out(A.vars);
    if (try_modular_gcd(A, B, out)) return out;
    return gcd_field(A, B);
}

PolyQ gcd_poly(const std::vector<PolyQ>& fs) {
    PolyQ g;
    bool first = true;
    for (auto& f : fs) {
        if (first) { g = f; first = false; }
        else g = gcd_poly(g, f);
        if (!g.is_zero() && g.degree() == 0) return normalized_unit(g);
    }
    return normalized_unit(g);
}

PolyP gcd_poly(const std::vector<PolyP>& fs) {
    PolyP g;
    bool first = true;
    for (auto& f : fs) {
        if (first) { g = f; first = false; }
        else g = gcd_poly(g, f);
        if (!g.is_zero() && g.degree() == 0) return normalized_unit(g);
    }
    return normalized_unit(g);
}

} // namespace bidyn
