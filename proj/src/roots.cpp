#include "bidyn/roots.hpp"

namespace bidyn {

std::vector<UPoly<Rat>> sturm_chain(const UPoly<Rat>& p) {
    std::vector<UPoly<Rat>> chain;
    chain.push_back(p);
    chain.push_back(p.derivative(Rat(1)));
    while (!chain.back().is_zero() && chain.back().deg() > 0) {
        UPoly<Rat> q, r;
        udivmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        for (auto& c : r.c) c = -c;
        chain.push_back(r);
    }
    return chain;
}

static int sign_variations(const std::vector<UPoly<Rat>>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (auto& f : chain) {
        Rat v = f.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sturm_count(const std::vector<UPoly<Rat>>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace {

// simplest rational in [lo, hi] by the Stern-Brocot walk
Rat simplest_in(const Rat& lo, const Rat& hi) {
    if (lo == hi) return lo;
    if (sgn(lo) < 0 && sgn(hi) >= 0) return Rat(0);
    if (sgn(hi) < 0) return -simplest_in(-hi, -lo);
    // 0 <= lo < hi
    Int li = numerator(lo) / denominator(lo);
    Int hi_i = numerator(hi) / denominator(hi);
    if (li < hi_i || Rat(hi_i) == hi) {
        // an integer sits inside
        if (Rat(li + 1) <= hi) return Rat(li + 1);
        return Rat(hi_i);
    }
    Rat fl = lo - Rat(li), fh = hi - Rat(li);
    if (sgn(fl) == 0) return lo;
    Rat inner = simplest_in(Rat(1) / fh, Rat(1) / fl);
    return Rat(li) + Rat(1) / inner;
}

}  // namespace

std::optional<RootResult> largest_real_root(const std::vector<Int>& coeffs, const Rat& tol) {
    // to UPoly over Q
    UPoly<Rat> p;
    p.c.reserve(coeffs.size());
    for (auto& c : coeffs) p.c.push_back(Rat(c));
    p.trim();
    if (p.is_zero()) throw std::invalid_argument("largest_real_root: zero polynomial");
    if (p.deg() == 0) return std::nullopt;

    // square-free part
    UPoly<Rat> g = ugcd(p, p.derivative(Rat(1)));
    UPoly<Rat> sf = p;
    if (g.deg() > 0) {
        UPoly<Rat> q, r;
        udivmod(p, g, q, r);
        sf = q;
    }
    auto chain = sturm_chain(sf);

    // Cauchy bound
    Rat lead = sf.c.back();
    Rat bound(1);
    for (int i = 0; i < sf.deg(); ++i) {
        Rat a = sf.c[i] / lead;
        if (sgn(a) < 0) a = -a;
        if (a > bound) bound = a;
    }
    bound += 1;

    Rat lo = -bound, hi = bound;
    if (sturm_count(chain, lo, hi) == 0) return std::nullopt;

    // bisect towards the largest root: keep >= 1 root in (lo, hi]
    auto halve = [&]() {
        Rat mid = (lo + hi) / 2;
        if (sturm_count(chain, mid, hi) >= 1) lo = mid;
        else hi = mid;
    };
    // first shrink to width < 1/2 so an exactness test can fire
    while (hi - lo >= Rat(1, 2)) halve();

    // rational-root test: simplest rational in the bracket
    {
        Rat cand = simplest_in(lo, hi);
        if (sf.eval(cand) == Rat(0)) {
            RootResult r;
            r.exact = true;
            r.value = cand;
            r.lo = r.hi = cand;
            return r;
        }
    }
    while (hi - lo > tol) {
        halve();
        Rat cand = simplest_in(lo, hi);
        if (sf.eval(cand) == Rat(0)) {
            RootResult r;
            r.exact = true;
            r.value = cand;
            r.lo = r.hi = cand;
            return r;
        }
    }
    RootResult r;
    r.exact = false;
    r.lo = lo;
    r.hi = hi;
    return r;
}

} // namespace bidyn
