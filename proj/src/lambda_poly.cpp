#include "vmcat/lambda_poly.hpp"

#include <vector>

namespace vmcat {

LambdaPoly lift(const DiffPoly& f) { return LambdaPoly(0, f); }

LambdaPoly derive(const LambdaPoly& p) {
  LambdaPoly out;
  for (const auto& [e, c] : p) out.add_term(e, derive(c));
  return out;
}

LambdaPoly shift_apply(const LambdaPoly& p, int m, int sign) {
  if (m == 0) return p;
  // (s(lambda + d))^m = s^m sum_k C(m,k) lambda^{m-k} d^k
  const Integer sign_power = (sign < 0 && m % 2 != 0) ? -1 : 1;
  LambdaPoly out;
  for (const auto& [e, c] : p) {
    DiffPoly dk = c;
    for (int k = 0; k <= m && !dk.empty(); ++k) {
      out.add_term(e + m - k, dk * (binomial(m, k) * sign_power));
      dk = derive(dk);
    }
  }
  return out;
}

LambdaPoly mul(const DiffPoly& f, const LambdaPoly& p) {
  LambdaPoly out;
  if (f.empty()) return out;
  for (const auto& [e, c] : p) out.add_term(e, mul(f, c));
  return out;
}

LambdaPoly mul_lambda_power(const LambdaPoly& p, int k, const Integer& s) {
  LambdaPoly out;
  for (const auto& [e, c] : p) out.add_term(e + k, c * s);
  return out;
}

LambdaPoly substitute_minus_lambda_minus_d(const LambdaPoly& p) {
  LambdaPoly out;
  for (const auto& [e, c] : p) out += shift_apply(lift(c), e, -1);
  return out;
}

int lambda_degree(const LambdaPoly& p) { return p.empty() ? -1 : p.terms().rbegin()->first; }

}  // namespace vmcat
