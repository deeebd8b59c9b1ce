#include "bidyn/ratmap.hpp"

namespace bidyn {

DegreeSequence degree_sequence_modp(const std::vector<RatMap<Rat>>& word, int N, Rng rng) {
    DegreeSequence best;
    best.method = "mod-p";
    for (int trial = 0; trial < 2; ++trial) {
        std::uint64_t p = random_prime31(rng);
        GF gf(p);
        std::vector<RatMap<Fp>> wp;
        bool good = true;
        try {
            for (auto& m : word) {
                RatMap<Fp> mp;
                for (auto& c : m.co) mp.co.push_back(reduce_mod(c, gf));
                mp.deg = m.deg;
                // leading forms must survive reduction
                for (std::size_t i = 0; i < m.co.size(); ++i)
                    if (mp.co[i].degree() != m.co[i].degree()) good = false;
                wp.push_back(std::move(mp));
            }
        } catch (const std::domain_error&) {
            good = false;
        }
        if (!good) continue;
        try {
            DegreeSequence cand = degree_sequence_line(wp, N, rng.fork(17 + trial), gf.one());
            cand.method = "mod-p";
            cand.prime = p;
            // reported degrees never exceed the true ones; keep the max
            if (best.values.empty()) best = cand;
            else {
                for (std::size_t i = 0; i < best.values.size(); ++i)
                    if (cand.values[i] > best.values[i]) {
                        best.values[i] = cand.values[i];
                        best.prime = p;
                    }
            }
        } catch (const std::exception&) {
            continue;
        }
    }
    if (best.values.empty()) throw std::runtime_error("degree_sequence_modp: no good prime found");
    return best;
}

} // namespace bidyn
