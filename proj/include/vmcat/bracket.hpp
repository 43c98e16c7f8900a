#pragma once

#include "vmcat/diffpoly.hpp"
#include "vmcat/lambda_poly.hpp"

namespace vmcat {

/// {L_lambda L} = (d + 2 lambda) L + c lambda^3.
LambdaPoly gen_bracket(const AlgebraCtx& ctx);

/// {f_lambda g} by the master formula
///   sum_{m,n} dg/d(d^n L) (lambda+d)^n {L_{lambda+d} L}_-> (-lambda-d)^m df/d(d^m L).
LambdaPoly bracket_master(const DiffPoly& f, const DiffPoly& g, const AlgebraCtx& ctx);

/// {f_lambda g} computed independently of the master formula: the right
/// slot is reduced by the Leibniz rule and right sesquilinearity, the left
/// slot by left sesquilinearity on generators and skew-symmetry for
/// products. Used as an oracle for bracket_master.
LambdaPoly bracket_recursive(const DiffPoly& f, const DiffPoly& g, const AlgebraCtx& ctx);

/// f_(n) g = n! * [lambda^n] {f_lambda g}.
DiffPoly nth_product(const DiffPoly& f, const DiffPoly& g, int n, const AlgebraCtx& ctx);

/// {g_lambda f} + {f_{-lambda-d} g}. Identically zero.
LambdaPoly skew_defect(const DiffPoly& f, const DiffPoly& g, const AlgebraCtx& ctx);

/// {a_lambda {b_mu c}} - {{a_lambda b}_{lambda+mu} c} - {b_mu {a_lambda c}}.
/// Identically zero.
BiLambdaPoly jacobi_defect(const DiffPoly& a, const DiffPoly& b, const DiffPoly& c,
                           const AlgebraCtx& ctx);

/// The L_0 action: scales each monomial by its conformal weight.
DiffPoly apply_hamiltonian(const DiffPoly& f);

/// H(f_(n) g) - (D_f + D_g - n - 1) f_(n) g for monomials f, g. Identically zero.
DiffPoly hamiltonian_defect(const Monomial& f, const Monomial& g, int n, const AlgebraCtx& ctx);

/// {a, b}_hbar = sum_j C(D_a - 1, j) hbar^j a_(j) b, applied per
/// conformal-weight component of a.
HbarPoly hbar_bracket(const DiffPoly& a, const DiffPoly& b, const AlgebraCtx& ctx);

}  // namespace vmcat
