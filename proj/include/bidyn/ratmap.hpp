#ifndef BIDYN_RATMAP_HPP
#define BIDYN_RATMAP_HPP

#include <optional>

#include "bidyn/chart.hpp"
#include "bidyn/upoly.hpp"

namespace bidyn {

// ---------------------------------------------------------------------------
// canonical projective points
// ---------------------------------------------------------------------------

/// integer coordinates, gcd 1, first nonzero coordinate positive
inline std::vector<Rat> canonical_point(std::vector<Rat> v) {
    Int den(1);
    for (auto& x : v) den = lcm(den, denominator(x));
    Int g(0);
    for (auto& x : v) g = gcd(g, Int(numerator(x) * (den / denominator(x))));
    if (sgn(g) == 0) throw std::invalid_argument("canonical_point: zero vector");
    int lead = 0;
    for (auto& x : v) {
        if (sgn(x) != 0) { lead = sgn(x); break; }
    }
    Rat scale = Rat(den) / Rat(g);
    if (lead < 0) scale = -scale;
    for (auto& x : v) {
        x *= scale;
        x.canonicalize();
    }
    return v;
}

inline std::vector<Fp> canonical_point(std::vector<Fp> v) {
    for (auto& x : v)
        if (!x.is_zero()) {
            Fp inv = x.inv();
            for (auto& y : v) y *= inv;
            return v;
        }
    throw std::invalid_argument("canonical_point: zero vector");
}

template <class K>
bool same_point(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.size() != b.size()) return false;
    auto ca = canonical_point(a), cb = canonical_point(b);
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// rational maps between projective spaces
// ---------------------------------------------------------------------------

template <class K>
struct RatMap {
    std::vector<Poly<K>> co;  // coprime homogeneous coordinates, common degree
    int deg = -1;

    int source_dim() const { return co.empty() ? -1 : static_cast<int>(co[0].nvars()) - 1; }
    int target_dim() const { return static_cast<int>(co.size()) - 1; }
};

struct IndeterminateError : std::domain_error {
    explicit IndeterminateError(const std::string& at)
        : std::domain_error("map is indeterminate at " + at) {}
};

struct DegenerateComposition : std::domain_error {
    DegenerateComposition() : std::domain_error("composition is identically zero") {}
};

template <class K>
Poly<K> map_gcd(const std::vector<Poly<K>>& co);

template <>
inline PolyQ map_gcd<Rat>(const std::vector<PolyQ>& co) { return gcd_poly(co); }
template <>
inline PolyP map_gcd<Fp>(const std::vector<PolyP>& co) { return gcd_poly(co); }

/// collective content-and-sign normalization of the coordinate tuple
inline void tuple_normalize(std::vector<PolyQ>& co) {
    Int den(1), num(0);
    for (auto& f : co)
        for (auto& [e, c] : f.terms) den = lcm(den, denominator(c));
    for (auto& f : co)
        for (auto& [e, c] : f.terms) num = gcd(num, Int(numerator(c) * (den / denominator(c))));
    Rat scale = Rat(den) / Rat(num);
    for (auto& f : co)
        if (!f.is_zero()) {
            if (sgn(*f.leading_coeff()) < 0) scale = -scale;
            break;
        }
    for (auto& f : co)
        for (auto& [e, c] : f.terms) {
            const_cast<Rat&>(c) *= scale;
            const_cast<Rat&>(c).canonicalize();
        }
}

inline void tuple_normalize(std::vector<PolyP>& co) {
    for (auto& f : co)
        if (!f.is_zero()) {
            Fp inv = f.leading_coeff()->inv();
            for (auto& g : co)
                for (auto& [e, c] : g.terms) const_cast<Fp&>(c) *= inv;
            return;
        }
}

/// Build the reduced map from a raw homogeneous tuple: common polynomial
/// factor removed, content removed, canonical sign. Idempotent.
template <class K>
RatMap<K> normalize_map(std::vector<Poly<K>> raw) {
    bool all_zero = true;
    int deg = -1;
    for (auto& f : raw) {
        if (f.is_zero()) continue;
        all_zero = false;
        if (!f.is_homogeneous()) throw std::invalid_argument("normalize_map: inhomogeneous coordinate");
        if (deg < 0) deg = f.degree();
        else if (f.degree() != deg) throw std::invalid_argument("normalize_map: mixed degrees");
    }
    if (all_zero) throw DegenerateComposition();
    std::vector<Poly<K>> nz;
    for (auto& f : raw)
        if (!f.is_zero()) nz.push_back(f);
    Poly<K> g = map_gcd<K>(nz);
    if (g.degree() > 0)
        for (auto& f : raw)
            if (!f.is_zero()) f = exact_div(f, g);
    tuple_normalize(raw);
    RatMap<K> m;
    m.co = std::move(raw);
    m.deg = -1;
    for (auto& f : m.co)
        if (!f.is_zero()) { m.deg = f.degree(); break; }
    return m;
}

/// f after g; the raw substitution is reduced
template <class K>
RatMap<K> compose(const RatMap<K>& f, const RatMap<K>& g) {
    if (f.source_dim() != g.target_dim())
        throw std::invalid_argument("compose: dimension mismatch");
    std::vector<Poly<K>> raw;
    raw.reserve(f.co.size());
    for (auto& c : f.co) raw.push_back(c.template substitute<Poly<K>>(g.co));
    return normalize_map(std::move(raw));
}

template <class K>
bool is_identity(const RatMap<K>& m) {
    if (m.deg != 1 || m.co.size() != m.co[0].nvars()) return false;
    std::vector<Poly<K>> id;
    for (std::size_t i = 0; i < m.co.size(); ++i)
        id.push_back(Poly<K>::variable(m.co[0].vars, i, m.co[0].one_like()));
    RatMap<K> probe = m;
    std::vector<Poly<K>> co = probe.co;
    tuple_normalize(co);
    for (std::size_t i = 0; i < co.size(); ++i)
        if (co[i] != id[i]) return false;
    return true;
}

template <class K>
bool is_indeterminate_at(const RatMap<K>& f, const std::vector<K>& pt) {
    for (auto& c : f.co)
        if (!(c.eval(pt) == K{})) return false;
    return true;
}

/// canonical image point; nullopt when all coordinates vanish
template <class K>
std::optional<std::vector<K>> evaluate(const RatMap<K>& f, const std::vector<K>& pt) {
    std::vector<K> img;
    img.reserve(f.co.size());
    bool all_zero = true;
    for (auto& c : f.co) {
        img.push_back(c.eval(pt));
        if (!(img.back() == K{})) all_zero = false;
    }
    if (all_zero) return std::nullopt;
    return canonical_point(std::move(img));
}

// ---------------------------------------------------------------------------
// line restriction and degree sequences
// ---------------------------------------------------------------------------

template <class K>
BinForm<K> eval_poly_binforms(const Poly<K>& f, const std::vector<BinForm<K>>& args, int arg_deg) {
    BinForm<K> acc = BinForm<K>::zero(f.degree() * arg_deg);
    for (auto& [e, c] : f.terms) {
        BinForm<K> t(0, {c});
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * args[i].pow(static_cast<unsigned>(e[i]));
        // pad to the common degree (homogeneous input assumed)
        if (t.deg != acc.deg) throw std::logic_error("eval_poly_binforms: inhomogeneous input");
        acc = acc + t;
    }
    return acc;
}

/// apply a map to a tuple of binary forms and cancel the common factor
template <class K>
std::vector<BinForm<K>> map_restrict_step(const RatMap<K>& f, const std::vector<BinForm<K>>& cur,
                                          int cur_deg, int* out_deg) {
    std::vector<BinForm<K>> img;
    img.reserve(f.co.size());
    for (auto& c : f.co) img.push_back(eval_poly_binforms(c, cur, cur_deg));
    // gcd across nonzero coordinates
    BinForm<K> g;
    bool have = false;
    for (auto& b : img) {
        if (b.is_zero()) continue;
        g = have ? bingcd(g, b) : b;
        have = true;
    }
    if (!have) throw DegenerateComposition();
    for (auto& b : img) {
        if (b.is_zero()) b = BinForm<K>::zero(img[0].deg - g.deg);
        else b = binform_exact_div(b, g);
    }
    int d = -1;
    for (auto& b : img) d = std::max(d, b.deg);
    *out_deg = d;
    return img;
}

struct DegreeSequence {
    std::vector<long> values;       // deg(word^n) for n = 1..N
    std::string method;             // exact | generic-line | mod-p
    std::uint64_t prime = 0;        // for mod-p entries
    std::string note;
};

/// exact composition-power degrees of a word of maps (applied right to left)
template <class K>
DegreeSequence degree_sequence_exact(const std::vector<RatMap<K>>& word, int N) {
    DegreeSequence out;
    out.method = "exact";
    RatMap<K> w = word.back();
    for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) w = compose(word[i], w);
    RatMap<K> cur = w;
    out.values.push_back(cur.deg);
    for (int n = 2; n <= N; ++n) {
        cur = compose(w, cur);
        out.values.push_back(cur.deg);
    }
    return out;
}

template <class K>
std::vector<BinForm<K>> random_line(std::size_t nvars, Rng& rng, const K& one);

template <>
inline std::vector<BinForm<Rat>> random_line<Rat>(std::size_t nvars, Rng& rng, const Rat&) {
    std::vector<BinForm<Rat>> line;
    for (std::size_t i = 0; i < nvars; ++i)
        line.push_back(BinForm<Rat>(1, {Rat(rng.nonzero(50)), Rat(rng.nonzero(50))}));
    return line;
}
template <>
inline std::vector<BinForm<Fp>> random_line<Fp>(std::size_t nvars, Rng& rng, const Fp& one) {
    std::vector<BinForm<Fp>> line;
    for (std::size_t i = 0; i < nvars; ++i)
        line.push_back(BinForm<Fp>(1, {Fp(1 + rng.below(one.p - 1), one.p), Fp(1 + rng.below(one.p - 1), one.p)}));
    return line;
}

/// degrees via restriction of iterates to a random line; two independent
/// lines must agree, with a bounded number of retries
template <class K>
DegreeSequence degree_sequence_line(const std::vector<RatMap<K>>& word, int N, Rng rng,
                                    const K& one) {
    auto run = [&](Rng r) {
        std::vector<long> degs;
        auto line = random_line<K>(word.back().co[0].nvars(), r, one);
        int cur_deg = 1;
        std::vector<BinForm<K>> cur = line;
        for (int n = 1; n <= N; ++n) {
            for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i)
                cur = map_restrict_step(word[i], cur, cur_deg, &cur_deg);
            degs.push_back(cur_deg);
        }
        return degs;
    };
    for (int attempt = 0; attempt < 5; ++attempt) {
        Rng r1 = rng.fork(2 * attempt), r2 = rng.fork(2 * attempt + 1);
        try {
            auto d1 = run(r1), d2 = run(r2);
            if (d1 == d2) {
                DegreeSequence out;
                out.values = d1;
                out.method = "generic-line";
                return out;
            }
        } catch (const DegenerateComposition&) {
            continue;  // line hit a base point; retry
        }
    }
    throw std::runtime_error("degree_sequence_line: lines disagree after bounded retries");
}

/// mod-p degrees: two primes, entry-wise maximum (good primes dominate)
DegreeSequence degree_sequence_modp(const std::vector<RatMap<Rat>>& word, int N, Rng rng);

// ---------------------------------------------------------------------------
// contraction analysis
// ---------------------------------------------------------------------------

template <class K>
struct ContractionResult {
    bool contracted = false;
    std::vector<K> image;              // when contracted
    std::vector<std::vector<K>> samples;  // images otherwise
};

template <class K>
std::vector<K> sample_param_value(Rng& rng, const K& one);

template <>
inline std::vector<Rat> sample_param_value<Rat>(Rng& rng, const Rat&) {
    return {Rat(rng.nonzero(200)), Rat(1)};
}
template <>
inline std::vector<Fp> sample_param_value<Fp>(Rng& rng, const Fp& one) {
    return {Fp(1 + rng.below(one.p - 1), one.p), Fp(1, one.p)};
}

/// Declare contraction when all defined images of sampled points of the
/// parametrized curve coincide. The parametrization is a tuple of homogeneous
/// polynomials in (s, t).
template <class K>
ContractionResult<K> contraction_analysis(const RatMap<K>& f, const std::vector<Poly<K>>& param,
                                          int nsamples, Rng rng, const K& one) {
    ContractionResult<K> out;
    std::vector<std::vector<K>> images;
    int taken = 0, guard = 0;
    while (taken < nsamples && guard++ < nsamples * 20) {
        auto st = sample_param_value<K>(rng, one);
        std::vector<K> pt;
        bool zero = true;
        for (auto& c : param) {
            pt.push_back(c.eval(st));
            if (!(pt.back() == K{})) zero = false;
        }
        if (zero) continue;  // parameter hit a base point of the parametrization
        pt = canonical_point(std::move(pt));
        auto img = evaluate(f, pt);
        if (!img) continue;  // indeterminate sample
        images.push_back(*img);
        ++taken;
    }
    if (images.empty())
        throw std::domain_error("contraction_analysis: all samples indeterminate");
    out.samples = images;
    out.contracted = true;
    for (auto& img : images)
        if (!same_point(img, images.front())) { out.contracted = false; break; }
    if (out.contracted) out.image = images.front();
    return out;
}

} // namespace bidyn

#endif
