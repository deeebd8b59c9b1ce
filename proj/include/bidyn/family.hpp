#ifndef BIDYN_FAMILY_HPP
#define BIDYN_FAMILY_HPP

#include "bidyn/curve.hpp"

namespace bidyn {

// The fiberwise involutions of P^2 x T. Every map here is written in the six
// variables (x, y, z, a, b, c): plane coordinates first, curve coordinates
// second. Specializing (a, b, c) to a curve point yields a plane cubic map.

VarList vars_xyzabc();
VarList vars_xyz();

/// printed coordinates of the cubic involution attached to q
RatMap<Rat> iota_q();

/// the three coordinates of the generic fiber involution (psi); chi is the
/// same with b negated
std::array<PolyQ, 3> psi_coords6();
std::array<PolyQ, 3> chi_coords6();
std::array<PolyQ, 3> phi_coords6();  // iota_q viewed in six variables

/// defining cubic and contracted conic
PolyQ cubic_T_xyz();
PolyQ conic_Q_xyz();

/// rational parametrization of the conic: [8 s^2, 8 s t, t^2 - 5 s^2]
std::vector<PolyQ> conic_param();

template <class D>
Poly<typename D::Elt> reduce_poly(const PolyQ& f, const D& dom);

template <>
inline PolyQ reduce_poly<QQ>(const PolyQ& f, const QQ&) { return f; }
template <>
inline PolyP reduce_poly<GF>(const PolyQ& f, const GF& gf) { return reduce_mod(f, gf); }

/// the cubic involution attached to a curve point t: substitute the point
/// into the generic coordinates and reduce
template <class D>
RatMap<typename D::Elt> build_iota(const CurvePoint<typename D::Elt>& t, const D& dom) {
    using K = typename D::Elt;
    if (!on_curve(t)) throw std::invalid_argument("build_iota: point not on the curve");
    if (t.at_infinity) throw std::invalid_argument("build_iota: affine points only");
    VarList xyz = vars_xyz();
    auto coords6 = psi_coords6();
    std::vector<Poly<K>> imgs;
    K one = dom.one();
    imgs.push_back(Poly<K>::variable(xyz, 0, one));
    imgs.push_back(Poly<K>::variable(xyz, 1, one));
    imgs.push_back(Poly<K>::variable(xyz, 2, one));
    imgs.push_back(Poly<K>::constant(xyz, t.a));
    imgs.push_back(Poly<K>::constant(xyz, t.b));
    imgs.push_back(Poly<K>::constant(xyz, one));
    std::vector<Poly<K>> raw;
    for (auto& f : coords6) {
        Poly<K> fk = reduce_poly(f, dom);
        raw.push_back(fk.template substitute<Poly<K>>(imgs));
    }
    return normalize_map(std::move(raw));
}

/// the family of maps at a fixed curve point: phi = iota_q, psi = iota_t,
/// chi = iota_{-t}, G = phi o psi, F = phi o chi o phi o psi
template <class K>
struct FamilyMaps {
    RatMap<K> phi, psi, chi;
    RatMap<K> G;                    // composed and reduced
    std::vector<RatMap<K>> F_word;  // composition word, rightmost applied first
};

template <class D>
FamilyMaps<typename D::Elt> build_family(const CurvePoint<typename D::Elt>& t, const D& dom) {
    using K = typename D::Elt;
    FamilyMaps<K> fam;
    CurvePoint<K> q;  // (0, 0)
    q.a = dom.zero();
    q.b = dom.zero();
    fam.phi = build_iota(q, dom);
    fam.psi = build_iota(t, dom);
    fam.chi = build_iota(negate(t), dom);
    fam.G = compose(fam.phi, fam.psi);
    fam.F_word = {fam.phi, fam.chi, fam.phi, fam.psi};
    return fam;
}

/// a random point of the curve over F_p with b != 0 whose tangent data splits
/// and stays disjoint from the tangent data of q
std::optional<CurvePointP> random_good_point(const GF& gf, Rng& rng);

} // namespace bidyn

#endif
