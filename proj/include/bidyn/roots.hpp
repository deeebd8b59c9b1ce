#ifndef BIDYN_ROOTS_HPP
#define BIDYN_ROOTS_HPP

#include <optional>

#include "bidyn/upoly.hpp"

namespace bidyn {

struct RootResult {
    bool exact = false;
    Rat value;      // exact root when exact
    Rat lo, hi;     // bracket of width <= tol otherwise (lo < root <= hi)
};

/// Largest real root of an integer polynomial via Sturm isolation and
/// bisection. A rational-root test runs first so rational spectral radii are
/// reported exactly. Returns nullopt when there is no real root.
std::optional<RootResult> largest_real_root(const std::vector<Int>& coeffs, const Rat& tol);

/// number of distinct real roots in (a, b]
int sturm_count(const std::vector<UPoly<Rat>>& chain, const Rat& a, const Rat& b);

std::vector<UPoly<Rat>> sturm_chain(const UPoly<Rat>& p);

} // namespace bidyn

#endif
