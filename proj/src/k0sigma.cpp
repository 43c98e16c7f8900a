#include "vmcat/k0sigma.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "vmcat/bracket.hpp"
#include "vmcat/errors.hpp"

namespace vmcat {

Monomial monomial_of(const Partition& mu) {
  std::vector<int> orders;
  orders.reserve(mu.length());
  for (int part : mu.parts()) orders.push_back(part - 1);
  return Monomial(std::move(orders));
}

Partition partition_of(const Monomial& m) {
  std::vector<int> parts;
  parts.reserve(m.factor_count());
  for (int k : m.orders()) parts.push_back(k + 1);
  return Partition(std::move(parts));
}

DiffPoly phi_sigma(const K0SigmaElem& e) {
  DiffPoly out;
  for (const auto& [mu, c] : e) out.add_term(monomial_of(mu), c);
  return out;
}

K0SigmaElem phi_sigma_inv(const DiffPoly& f) {
  K0SigmaElem out;
  for (const auto& [m, c] : f) out.add_term(partition_of(m), c);
  return out;
}

K0SigmaElem ind(const K0SigmaElem& e) {
  K0SigmaElem out;
  for (const auto& [mu, c] : e) {
    for (const auto& nu : addable_results(mu)) out.add_term(nu, c);
  }
  return out;
}

K0SigmaElem res(const K0SigmaElem& e) {
  K0SigmaElem out;
  for (const auto& [mu, c] : e) {
    for (const auto& nu : removable_results(mu)) out.add_term(nu, c);
  }
  return out;
}

K0SigmaElem p_i_ind(const K0SigmaElem& e, int i) {
  if (i < 1) throw DomainError("column index must be positive, got " + std::to_string(i));
  K0SigmaElem out;
  const auto col = static_cast<std::size_t>(i - 1);
  for (const auto& [mu, c] : e) {
    std::vector<int> cols = conjugate(mu).parts();
    if (col > cols.size()) continue;
    const int here = col < cols.size() ? cols[col] : 0;
    if (col != 0 && cols[col - 1] <= here) continue;
    if (col == cols.size()) {
      cols.push_back(1);
    } else {
      ++cols[col];
    }
    out.add_term(conjugate(Partition(std::move(cols))), c);
  }
  return out;
}

K0SigmaElem pj_ind_by_columns(const K0SigmaElem& e, int j) {
  if (j < 1) throw DomainError("cannot insert a row of " + std::to_string(j) + " boxes");
  K0SigmaElem out = e;
  for (int i = 1; i <= j; ++i) out = p_i_ind(out, i);
  return out;
}

K0SigmaElem pj_ind(const K0SigmaElem& e, int j) {
  K0SigmaElem out;
  for (const auto& [mu, c] : e) out.add_term(insert_row(mu, j), c);
  if (out != pj_ind_by_columns(e, j)) throw std::logic_error("row insertion disagrees with column induction");
  return out;
}

K0SigmaElem nabla(const K0SigmaElem& e) {
  K0SigmaElem out;
  for (const auto& [mu, c] : e) {
    std::size_t row = 0;
    for (const auto& [value, count] : multiplicities(mu)) {
      // Raising the first row of a block keeps the parts sorted.
      auto parts = mu.parts();
      ++parts[row];
      out.add_term(Partition(std::move(parts)), c * count);
      row += static_cast<std::size_t>(count);
    }
  }
  return out;
}

K0SigmaElem mul(const K0SigmaElem& a, const K0SigmaElem& b) {
  K0SigmaElem out;
  for (const auto& [mu, x] : a) {
    for (const auto& [nu, y] : b) out.add_term(partition_union(mu, nu), x * y);
  }
  return out;
}

K0LambdaPoly lambda_bracket_k0(const K0SigmaElem& a, const K0SigmaElem& b, const AlgebraCtx& ctx) {
  K0LambdaPoly out;
  for (const auto& [e, coeff] : bracket_master(phi_sigma(a), phi_sigma(b), ctx)) {
    out.add_term(e, phi_sigma_inv(coeff));
  }
  return out;
}

}  // namespace vmcat
