#ifndef BIDYN_NUMERIC_HPP
#define BIDYN_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bidyn {

using Int = mpz_class;
using Rat = mpq_class;

inline Int numerator(const Rat& q) { return Int(q.get_num()); }
inline Int denominator(const Rat& q) { return Int(q.get_den()); }

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

/// Prime field element. p fits in 32 bits so products stay inside uint64.
/// An element with p == 0 is the "universal zero": it may combine with any
/// modulus, which lets default-constructed coefficients behave as 0.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t mod) : v(value % mod), p(mod) {}

    static Fp zero() { return Fp(); }

    bool is_zero() const { return v == 0; }

    friend std::uint64_t common_mod(const Fp& a, const Fp& b) {
        if (a.p == 0) return b.p;
        if (b.p == 0) return a.p;
        if (a.p != b.p) throw std::invalid_argument("Fp modulus mismatch");
        return a.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t m = common_mod(a, b);
        if (m == 0) return Fp();
        std::uint64_t s = a.v + b.v;
        if (s >= m) s -= m;
        return Fp(s, m);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t m = common_mod(a, b);
        if (m == 0) return Fp();
        return Fp(a.v + m - b.v, m);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t m = common_mod(a, b);
        if (m == 0) return Fp();
        return Fp((a.v * b.v) % m, m);
    }
    Fp operator-() const { return p == 0 ? Fp() : Fp(p - v, p); }

    Fp inv() const {
        if (v == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(v);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(t), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v == 0 && b.v == 0) return true;
        return a.v == b.v && common_mod(a, b) != 0;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline Fp pow(Fp a, std::uint64_t e) {
    if (a.p == 0) return a;
    Fp r(1, a.p);
    while (e) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Coefficient domains. Generic code takes a domain object to build constants;
// QQ carries no state, GF carries its modulus.
// ---------------------------------------------------------------------------

struct QQ {
    using Elt = Rat;
    Rat from_int(const Int& n) const { return Rat(n); }
    Rat from_long(long n) const { return Rat(n); }
    bool is_zero(const Rat& a) const { return sgn(a) == 0; }
    Rat inv(const Rat& a) const { return Rat(1) / a; }
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
};

struct GF {
    std::uint64_t p;
    using Elt = Fp;
    explicit GF(std::uint64_t mod) : p(mod) {}
    Fp from_int(const Int& n) const {
        Int r = n % Int(static_cast<unsigned long>(p));
        if (sgn(r) < 0) r += Int(static_cast<unsigned long>(p));
        return Fp(r.get_ui(), p);
    }
    Fp from_long(long n) const { return from_int(Int(n)); }
    bool is_zero(const Fp& a) const { return a.is_zero(); }
    Fp inv(const Fp& a) const { return a.inv(); }
    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
};

// ---------------------------------------------------------------------------
// Deterministic RNG: all randomness in the library flows from explicit seeds.
// ---------------------------------------------------------------------------

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = next(); } while (x >= lim);
        return x % n;
    }
    /// small signed integer in [-m, m], never 0
    long nonzero(long m) {
        long v = static_cast<long>(below(2 * static_cast<std::uint64_t>(m))) - m;
        return v >= 0 ? v + 1 : v;
    }
    Rng fork(std::uint64_t tag) { return Rng(next() ^ (tag * 0x9e3779b97f4a7c15ULL)); }
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((__uint128_t)a * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// a prime near 2^31, selected deterministically from the rng
inline std::uint64_t random_prime31(Rng& rng) {
    for (;;) {
        std::uint64_t c = (1ULL << 31) - rng.below(1ULL << 27);
        if (c % 2 == 0) ++c;
        while (!is_prime_u64(c)) c += 2;
        if (c < (1ULL << 32)) return c;
    }
}

/// square root mod p (Tonelli-Shanks); empty if not a residue
inline bool sqrt_mod(Fp a, Fp& out) {
    std::uint64_t p = a.p;
    if (a.v == 0) { out = Fp(0, p); return true; }
    if (pow(a, (p - 1) / 2).v != 1) return false;
    if (p % 4 == 3) { out = pow(a, (p + 1) / 4); return true; }
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    Fp z(2, p);
    while (pow(z, (p - 1) / 2).v == 1) z = Fp(z.v + 1, p);
    Fp m = pow(a, (q + 1) / 2), t = pow(a, q), c = pow(z, q);
    int r = s;
    while (t.v != 1) {
        Fp t2 = t;
        int i = 0;
        while (t2.v != 1) { t2 *= t2; ++i; }
        Fp b = c;
        for (int j = 0; j < r - i - 1; ++j) b *= b;
        m *= b;
        c = b * b;
        t = t * c;
        r = i;
    }
    out = m;
    return true;
}

/// Rational reconstruction of x mod m: find n/d with |n|,d <= sqrt(m/2).
inline bool rational_reconstruct(const Int& x, const Int& m, Rat& out) {
    Int a = m, b = x % m;
    if (sgn(b) < 0) b += m;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = a, r1 = b, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (sgn(t1) == 0) return false;
    if (sgn(t1) < 0) { t1 = -t1; r1 = -r1; }
    if (gcd(r1, t1) != 1) return false;
    out = Rat(r1) / Rat(t1);
    return true;
}

} // namespace bidyn

#endif
