#pragma once

#include <compare>
#include <vector>

#include "vmcat/combination.hpp"
#include "vmcat/diffpoly.hpp"
#include "vmcat/k0sigma.hpp"

namespace vmcat {

struct K0NTag;
struct G0NTag;
struct XPolyTag;

/// K_0(N) in the basis [N_n] of projective nil-Coxeter modules.
using K0NElem = Combination<int, Integer, K0NTag>;
/// G_0(N) in the basis [L_n] of simple nil-Coxeter modules.
using G0NElem = Combination<int, Integer, G0NTag>;
/// Z[x], keyed by exponent.
using XPoly = Combination<int, Integer, XPolyTag>;

inline K0NElem basis_n(int n, const Integer& c = 1) { return K0NElem(n, c); }
inline G0NElem basis_l(int n, const Integer& c = 1) { return G0NElem(n, c); }
inline XPoly x_power(int n, const Integer& c = 1) { return XPoly(n, c); }

// Ind[N_n] = [N_{n+1}], Res[N_{n+1}] = (n+1)[N_n].
K0NElem ind(const K0NElem& e);
K0NElem res(const K0NElem& e);
// Ind[L_n] = (n+1)[L_{n+1}], Res[L_{n+1}] = [L_n].
G0NElem ind(const G0NElem& e);
G0NElem res(const G0NElem& e);

K0NElem mul(const K0NElem& a, const K0NElem& b);
G0NElem mul(const G0NElem& a, const G0NElem& b);
XPoly mul(const XPoly& a, const XPoly& b);
inline K0NElem operator*(const K0NElem& a, const K0NElem& b) { return mul(a, b); }
inline G0NElem operator*(const G0NElem& a, const G0NElem& b) { return mul(a, b); }
inline XPoly operator*(const XPoly& a, const XPoly& b) { return mul(a, b); }

XPoly d_dx(const XPoly& p);
XPoly times_x(const XPoly& p);

XPoly phi_n(const K0NElem& e);
K0NElem phi_n_inv(const XPoly& p);

/// Normally ordered Weyl monomial x^a D^b.
struct WeylMonomial {
  int x = 0;
  int d = 0;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
};

struct WeylTag;
/// Element of the integral Weyl algebra in normal order (x left of D).
using WeylElem = Combination<WeylMonomial, Integer, WeylTag>;

inline WeylElem weyl_term(int a, int b, const Integer& c = 1) { return WeylElem({a, b}, c); }

/// Normal-ordered product using D^b x^c = sum_k k! C(b,k) C(c,k) x^{c-k} D^{b-k}.
WeylElem weyl_mul(const WeylElem& u, const WeylElem& v);
inline WeylElem operator*(const WeylElem& u, const WeylElem& v) { return weyl_mul(u, v); }

/// x acts by multiplication, D by d/dx.
XPoly weyl_apply(const WeylElem& u, const XPoly& p);

enum class IndRes { ind, res };
using OperatorWord = std::vector<IndRes>;
struct WordTag;
/// Integer combination of composites of Ind and Res on K_0(N). Letters are
/// written left to right as in operator composition: the last letter acts
/// first.
using WordCombination = Combination<OperatorWord, Integer, WordTag>;

/// Ind -> x, Res -> d/dx, normalized by pushing each letter through the
/// accumulated normal form with D x = x D + 1.
WeylElem i_map(const WordCombination& w);

/// Evaluates the composite endomorphisms on an element of K_0(N).
K0NElem apply_word(const WordCombination& w, const K0NElem& e);

/// prod_k j_k! Ind^{j_k+3} Res for mu = (j_1+1, ..., j_s+1), factors in
/// weakly decreasing j. Requires central charge 0.
WordCombination psi1(const K0SigmaElem& e, const AlgebraCtx& ctx);

/// prod_k j_k! x^{j_k+3} D for the monomial prod_k d^{j_k} L, factors in
/// weakly decreasing j. Requires central charge 0.
WeylElem psi2(const DiffPoly& f, const AlgebraCtx& ctx);

}  // namespace vmcat
