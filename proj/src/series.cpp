#include "bidyn/series.hpp"

namespace bidyn {

Series<Rat> series_branch(const PolyQ& curve, int solve_for, int order) {
    if (curve.nvars() != 2) throw std::invalid_argument("series_branch: need a bivariate curve");
    // move the solved variable to slot 0
    PolyQ F = curve;
    if (solve_for == 1) {
        PolyQ swapped(curve.vars);
        for (auto& [e, c] : curve.terms) swapped.terms.emplace(Exps{e[1], e[0]}, c);
        F = swapped;
    } else if (solve_for != 0) {
        throw std::invalid_argument("series_branch: solve_for must be 0 or 1");
    }
    if (F.eval({Rat(0), Rat(0)}) != Rat(0))
        throw std::domain_error("series_branch: curve does not pass through the origin");
    PolyQ dF = F.derivative(0, Rat(1));
    if (dF.eval({Rat(0), Rat(0)}) == Rat(0))
        throw std::domain_error("series_branch: branch is singular for this parameter");
    auto id = [](const Rat& r) { return r; };
    Series<Rat> sol = newton_series_solve(F, Rat(0), order, id);
    // residual must vanish through the stated order
    Series<Rat> t = Series<Rat>::var(order, Rat(1));
    Series<Rat> residual = eval_poly_series(F, std::vector<Series<Rat>>{sol, t}, order, id);
    if (!residual.is_zero())
        throw std::domain_error("series_branch: residual does not vanish to requested order");
    return sol;
}

} // namespace bidyn
