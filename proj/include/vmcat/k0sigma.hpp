#pragma once

#include "vmcat/combination.hpp"
#include "vmcat/diffpoly.hpp"
#include "vmcat/partition.hpp"

namespace vmcat {

struct K0SigmaTag;
/// Element of K_0(Sigma) = sum_n K_0(Sigma_n) in the Specht basis [S^mu].
using K0SigmaElem = Combination<Partition, Integer, K0SigmaTag>;

struct K0LambdaTag;
/// Lambda polynomial with K_0(Sigma) coefficients.
using K0LambdaPoly = Combination<int, K0SigmaElem, K0LambdaTag>;

inline K0SigmaElem specht(const Partition& mu, const Integer& c = 1) { return K0SigmaElem(mu, c); }

// Part value k corresponds to the generator d^{k-1} L.
Monomial monomial_of(const Partition& mu);
Partition partition_of(const Monomial& m);

DiffPoly phi_sigma(const K0SigmaElem& e);
K0SigmaElem phi_sigma_inv(const DiffPoly& f);

/// Branching rules: sum over one-box additions / removals.
K0SigmaElem ind(const K0SigmaElem& e);
K0SigmaElem res(const K0SigmaElem& e);

/// Column-selective induction: adds a box to column i of the Young diagram
/// when that keeps it a diagram (i = 1, or column i-1 longer than column i).
K0SigmaElem p_i_ind(const K0SigmaElem& e, int i);

/// P^j Ind: inserts a row of j boxes. Throws DomainError if j < 1.
K0SigmaElem pj_ind(const K0SigmaElem& e, int j);

/// P^j Ind as the composite p_j Ind o ... o p_1 Ind.
K0SigmaElem pj_ind_by_columns(const K0SigmaElem& e, int j);

/// Multiplicity-weighted sum of single-part increments; categorifies d.
K0SigmaElem nabla(const K0SigmaElem& e);

/// Bilinear extension of [S^mu][S^nu] = [S^{mu u nu}].
K0SigmaElem mul(const K0SigmaElem& a, const K0SigmaElem& b);
inline K0SigmaElem operator*(const K0SigmaElem& a, const K0SigmaElem& b) { return mul(a, b); }

/// The lambda-bracket transported from V_Z along phi_sigma.
K0LambdaPoly lambda_bracket_k0(const K0SigmaElem& a, const K0SigmaElem& b, const AlgebraCtx& ctx);

}  // namespace vmcat
