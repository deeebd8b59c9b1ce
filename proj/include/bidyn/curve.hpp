#ifndef BIDYN_CURVE_HPP
#define BIDYN_CURVE_HPP

#include <optional>

#include "bidyn/ratmap.hpp"

namespace bidyn {

// The fixed elliptic curve y^2 z = x^3 + 5 x^2 z + 4 x z^2 and its marked
// 2-torsion point q = (0, 0). Affine coordinates (a, b) with b^2 = g(a),
// g(a) = a^3 + 5a^2 + 4a = a(a+1)(a+4).

template <class K>
struct CurvePoint {
    bool at_infinity = false;
    K a{}, b{};

    static CurvePoint infinity() {
        CurvePoint p;
        p.at_infinity = true;
        return p;
    }
    friend bool operator==(const CurvePoint& x, const CurvePoint& y) {
        if (x.at_infinity || y.at_infinity) return x.at_infinity == y.at_infinity;
        return x.a == y.a && x.b == y.b;
    }
};

using CurvePointQ = CurvePoint<Rat>;
using CurvePointP = CurvePoint<Fp>;

template <class K>
K curve_rhs(const K& a) {
    // a^3 + 5a^2 + 4a without domain constants
    K a2 = a * a;
    K r = a2 * a;
    for (int i = 0; i < 5; ++i) r += a2;
    for (int i = 0; i < 4; ++i) r += a;
    return r;
}

template <class K>
bool on_curve(const CurvePoint<K>& p) {
    if (p.at_infinity) return true;
    return p.b * p.b == curve_rhs(p.a);
}

template <class K>
CurvePoint<K> negate(const CurvePoint<K>& p) {
    CurvePoint<K> r = p;
    if (!r.at_infinity) r.b = -r.b;
    return r;
}

template <class K>
bool is_two_torsion(const CurvePoint<K>& p) {
    return p.at_infinity || p.b == K{};
}

/// the defining data of the four tangent points associated to a curve point
struct TangentPointData {
    std::vector<std::vector<Rat>> points;   // projective [x,y,z], exact (fixture q only)
    std::vector<std::vector<Rat>> lines;    // matching tangent lines as coefficient triples
    // for general t the data is carried by equations instead of solved points
    PolyQ quartic_in_x;                     // vanishing locus of tangent-point x-coordinates
    PolyQ curve_in_xy;                      // the cubic relation tying y to x
    bool solved = false;
};

/// Tangent data for the marked point q = (0,0): four rational tangent points
/// with their lines. For general affine t the quartic-pair equations are
/// returned unsolved; mod-p solving lives in tangent_points_modp.
TangentPointData tangent_points(const CurvePointQ& t);

/// tangent points of t over a prime field: x-roots of the quartic selected by
/// the exact tangency test; empty when the quartic does not split
std::vector<std::vector<Fp>> tangent_points_modp(const CurvePointP& t, const GF& gf);

/// the line through two projective points, as a coefficient triple
template <class K>
std::vector<K> line_through(const std::vector<K>& p, const std::vector<K>& q) {
    return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

/// intersection multiplicity of a plane curve with a parametrized line at a
/// given parameter value: order of the root in the restricted binary form
template <class K>
int line_contact_order(const Poly<K>& curve, const std::vector<K>& base,
                       const std::vector<K>& other, const std::vector<K>& at);

} // namespace bidyn

#endif
