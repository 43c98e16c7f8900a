#include "vmcat/bracket.hpp"

#include <map>
#include <utility>

namespace vmcat {

LambdaPoly gen_bracket(const AlgebraCtx& ctx) {
  LambdaPoly out;
  out.add_term(0, generator(1));
  out.add_term(1, generator(0, 2));
  out.add_term(3, constant(ctx.central_charge));
  return out;
}

namespace {

// {L_{lambda+d} L}_-> B = sum_p v_p (lambda+d)^p B, where v_p are the
// coefficients of the generator bracket.
LambdaPoly apply_generator_bracket_right(const LambdaPoly& gen, const LambdaPoly& b) {
  LambdaPoly out;
  for (const auto& [p, v] : gen) out += mul(v, shift_apply(b, p, +1));
  return out;
}

}  // namespace

LambdaPoly bracket_master(const DiffPoly& f, const DiffPoly& g, const AlgebraCtx& ctx) {
  LambdaPoly out;
  if (f.empty() || g.empty()) return out;
  const LambdaPoly gen = gen_bracket(ctx);
  const auto g_orders = generator_orders(g);
  std::vector<std::pair<int, DiffPoly>> g_partials;
  for (int n : g_orders) g_partials.emplace_back(n, partial_wrt(g, n));

  for (int m : generator_orders(f)) {
    const LambdaPoly shifted = shift_apply(lift(partial_wrt(f, m)), m, -1);
    const LambdaPoly inner = apply_generator_bracket_right(gen, shifted);
    for (const auto& [n, dg] : g_partials) out += mul(dg, shift_apply(inner, n, +1));
  }
  return out;
}

namespace {

// Bracket of monomials by structural recursion. The cache is local to one
// top-level call.
class RecursiveBracket {
 public:
  explicit RecursiveBracket(const AlgebraCtx& ctx) : gen_(gen_bracket(ctx)) {}

  LambdaPoly operator()(const Monomial& f, const Monomial& g) {
    if (f.is_unit() || g.is_unit()) return {};
    auto key = std::make_pair(f, g);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    LambdaPoly result;
    if (g.factor_count() > 1) {
      // {f_lambda u h} = u {f_lambda h} + h {f_lambda u}
      const int u = g.orders().front();
      const Monomial h = g.without(u);
      result = mul(monomial(Monomial::generator(u)), (*this)(f, h));
      result += mul(monomial(h), (*this)(f, Monomial::generator(u)));
    } else {
      // {f_lambda d^k L} = (lambda + d)^k {f_lambda L}
      result = shift_apply(with_generator_right(f), g.orders().front(), +1);
    }
    cache_.emplace(std::move(key), result);
    return result;
  }

 private:
  // {f_lambda L}
  LambdaPoly with_generator_right(const Monomial& f) {
    if (f.factor_count() == 1) {
      // {d^m L_lambda L} = (-lambda)^m {L_lambda L}
      const int m = f.orders().front();
      return mul_lambda_power(gen_, m, m % 2 == 0 ? 1 : -1);
    }
    // skew-symmetry: {f_lambda L} = -{L_{-lambda-d} f}
    return -substitute_minus_lambda_minus_d((*this)(Monomial::generator(0), f));
  }

  LambdaPoly gen_;
  std::map<std::pair<Monomial, Monomial>, LambdaPoly> cache_;
};

}  // namespace

LambdaPoly bracket_recursive(const DiffPoly& f, const DiffPoly& g, const AlgebraCtx& ctx) {
  RecursiveBracket rec(ctx);
  LambdaPoly out;
  for (const auto& [mf, cf] : f) {
    for (const auto& [mg, cg] : g) {
      LambdaPoly term = rec(mf, mg);
      if (!term.empty()) out += term * Integer(cf * cg);
    }
  }
  return out;
}

DiffPoly nth_product(const DiffPoly& f, const DiffPoly& g, int n, const AlgebraCtx& ctx) {
  if (n < 0) return {};
  return bracket_master(f, g, ctx).coeff(n) * factorial(static_cast<unsigned long>(n));
}

LambdaPoly skew_defect(const DiffPoly& f, const DiffPoly& g, const AlgebraCtx& ctx) {
  return bracket_master(g, f, ctx) + substitute_minus_lambda_minus_d(bracket_master(f, g, ctx));
}

BiLambdaPoly jacobi_defect(const DiffPoly& a, const DiffPoly& b, const DiffPoly& c,
                           const AlgebraCtx& ctx) {
  BiLambdaPoly out;

  // {a_lambda {b_mu c}}
  for (const auto& [k, coeff] : bracket_master(b, c, ctx)) {
    for (const auto& [j, d] : bracket_master(a, coeff, ctx)) out.add_term({j, k}, d);
  }
  // {b_mu {a_lambda c}}
  for (const auto& [j, coeff] : bracket_master(a, c, ctx)) {
    for (const auto& [k, d] : bracket_master(b, coeff, ctx)) out.sub_term({j, k}, d);
  }
  // {{a_lambda b}_{lambda+mu} c}: bracket each lambda^n coefficient in a fresh
  // variable nu, then expand nu^p = (lambda + mu)^p.
  for (const auto& [n, coeff] : bracket_master(a, b, ctx)) {
    for (const auto& [p, d] : bracket_master(coeff, c, ctx)) {
      for (int i = 0; i <= p; ++i) out.sub_term({n + i, p - i}, d * binomial(p, i));
    }
  }
  return out;
}

DiffPoly apply_hamiltonian(const DiffPoly& f) {
  DiffPoly out;
  for (const auto& [m, c] : f) out.add_term(m, c * conformal_weight(m));
  return out;
}

DiffPoly hamiltonian_defect(const Monomial& f, const Monomial& g, int n, const AlgebraCtx& ctx) {
  const DiffPoly product = nth_product(monomial(f), monomial(g), n, ctx);
  const int shift = conformal_weight(f) + conformal_weight(g) - n - 1;
  return apply_hamiltonian(product) - product * Integer(shift);
}

HbarPoly hbar_bracket(const DiffPoly& a, const DiffPoly& b, const AlgebraCtx& ctx) {
  std::map<int, DiffPoly> components;
  for (const auto& [m, c] : a) components[conformal_weight(m)].add_term(m, c);

  HbarPoly out;
  for (const auto& [weight, part] : components) {
    for (const auto& [j, coeff] : bracket_master(part, b, ctx)) {
      const Integer scale = binomial_signed(weight - 1, j) * factorial(static_cast<unsigned long>(j));
      out.add_term(j, coeff * scale);
    }
  }
  return out;
}

}  // namespace vmcat
