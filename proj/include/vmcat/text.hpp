#pragma once

#include <string>
#include <string_view>

#include "vmcat/diffpoly.hpp"
#include "vmcat/k0sigma.hpp"
#include "vmcat/lambda_poly.hpp"
#include "vmcat/nilcox.hpp"
#include "vmcat/partition.hpp"

// Text forms. Every `format` output re-parses with the matching `parse_*`
// to an equal value. Parsers throw ParseError carrying the byte offset.
//
//   Partition      [5,2,1]   []
//   DiffPoly       3 d1L^2 L - 2 d3L     (dkL is d^k L; factors juxtaposed)
//   LambdaPoly     (d1L) + (2 L)*lam + (1)*lam^3
//   BiLambdaPoly   (L)*lam^2*mu
//   HbarPoly       (d1L) + (2 L)*hbar
//   K0SigmaElem    2*[3,1] - [2,2]
//   K0LambdaPoly   ([2]) + (2*[1])*lam
//   K0NElem        2*[N3] - [N0]
//   G0NElem        [L2]
//   XPoly          x^2 - 3 x + 1
//   WeylElem       x^2 D^2 + 4 x D + 2   (input may be in any order; it is normalized)
//   WordCombination  2 Ind^5 Res
namespace vmcat {

std::string format(const Partition& p);
std::string format(const Monomial& m);
std::string format(const DiffPoly& f);
std::string format(const LambdaPoly& p);
std::string format(const BiLambdaPoly& p);
std::string format(const HbarPoly& p);
std::string format(const K0SigmaElem& e);
std::string format(const K0LambdaPoly& p);
std::string format(const K0NElem& e);
std::string format(const G0NElem& e);
std::string format(const XPoly& p);
std::string format(const WeylElem& w);
std::string format(const WordCombination& w);

Partition parse_partition(std::string_view text);
DiffPoly parse_diffpoly(std::string_view text);
LambdaPoly parse_lambda_poly(std::string_view text);
BiLambdaPoly parse_bilambda_poly(std::string_view text);
HbarPoly parse_hbar_poly(std::string_view text);
K0SigmaElem parse_k0sigma(std::string_view text);
K0LambdaPoly parse_k0_lambda_poly(std::string_view text);
K0NElem parse_k0n(std::string_view text);
G0NElem parse_g0n(std::string_view text);
XPoly parse_xpoly(std::string_view text);
WeylElem parse_weyl(std::string_view text);
WordCombination parse_word(std::string_view text);

}  // namespace vmcat
