#pragma once

#include "vmcat/diffpoly.hpp"
#include "vmcat/nilcox.hpp"
#include "vmcat/report.hpp"

namespace vmcat {

/// The H-twisted Zhu map V_Z -> Z[x]: L -> x, d^n L -> 0 (n >= 1), multiplicative.
XPoly zhu_h(const DiffPoly& f);

/// Quotient by the differential ideal (dL - 1): L -> x, dL -> 1, d^n L -> 0 (n >= 2).
XPoly q_map(const DiffPoly& f);

/// Zhu image of the 0-th product; the induced Poisson bracket on Z[x].
XPoly zhu_poisson_bracket(const DiffPoly& a, const DiffPoly& b, const AlgebraCtx& ctx);

/// Sweeps all monomials f of degree <= n_max and 0 <= j <= j_max and checks
///   zhu-mul:       zhu_h(d^j L * f) = delta_{j0} x zhu_h(f)
///   zhu-derive:    zhu_h(d f) = 0
///   zhu-bracket-generator: zhu_h(L_(0) f) = 0
///   zhu-bracket-all:       zhu_h(g_(0) f) = 0 for all monomials g, deg g <= n_max
///   q-mul:         q(d^j L * f) = delta_{j0} x q(f) + delta_{j1} q(f)
///   q-derive:      q(d f) = d/dx q(f)
Report verify_zhu_diagrams(int j_max, int n_max, const AlgebraCtx& ctx);

}  // namespace vmcat
