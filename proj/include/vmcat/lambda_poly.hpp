#pragma once

#include <compare>

#include "vmcat/combination.hpp"
#include "vmcat/diffpoly.hpp"

namespace vmcat {

struct LambdaTag;
/// sum_n lambda^n * c_n with c_n in V_Z. The stored c_n is the lambda-bracket
/// coefficient; the n-th product is n! * c_n.
using LambdaPoly = Combination<int, DiffPoly, LambdaTag>;

struct BiExponent {
  int lam = 0;
  int mu = 0;
  friend auto operator<=>(const BiExponent&, const BiExponent&) = default;
  friend bool operator==(const BiExponent&, const BiExponent&) = default;
};

struct BiLambdaTag;
/// Polynomial in two commuting formal variables lambda, mu over V_Z.
using BiLambdaPoly = Combination<BiExponent, DiffPoly, BiLambdaTag>;

struct HbarTag;
/// Polynomial in hbar over V_Z.
using HbarPoly = Combination<int, DiffPoly, HbarTag>;

/// Embeds f as the lambda^0 coefficient.
LambdaPoly lift(const DiffPoly& f);

/// Coefficientwise total derivative.
LambdaPoly derive(const LambdaPoly& p);

/// Applies (sign * (lambda + d))^m, with d acting on the coefficients.
LambdaPoly shift_apply(const LambdaPoly& p, int m, int sign);

/// Multiplies every coefficient by f.
LambdaPoly mul(const DiffPoly& f, const LambdaPoly& p);

/// Multiplies by s * lambda^k.
LambdaPoly mul_lambda_power(const LambdaPoly& p, int k, const Integer& s = 1);

/// Replaces lambda by (-lambda - d): sum_n (-lambda - d)^n c_n.
LambdaPoly substitute_minus_lambda_minus_d(const LambdaPoly& p);

/// Highest lambda exponent, or -1 for zero.
int lambda_degree(const LambdaPoly& p);

}  // namespace vmcat
