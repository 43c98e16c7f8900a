// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "vmcat/bracket.hpp"
#include "vmcat/k0sigma.hpp"
#include "vmcat/nilcox.hpp"
#include "vmcat/partition.hpp"
#include "vmcat/text.hpp"
#include "vmcat/verify.hpp"
#include "vmcat/zhu.hpp"

using namespace vmcat;

namespace {

const std::vector<Integer> kCharges{0, 1, -2};

struct Outcome {
  bool ok = true;
  long cases = 0;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  std::string name;
  double time_limit_s;  // <= 0 means no limit
  std::function<Outcome()> run;
};

std::vector<std::pair<Monomial, Monomial>> monomial_pairs(int total) {
  const auto monos = monomials_up_to(total);
  std::vector<std::pair<Monomial, Monomial>> out;
  for (const auto& a : monos) {
    for (const auto& b : monos) {
      if (degree(a) + degree(b) <= total) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string pair_label(const Monomial& a, const Monomial& b) { return format(a) + " , " + format(b); }

Outcome generator_bracket() {
  Outcome o;
  for (const auto& c : kCharges) {
    const AlgebraCtx ctx{c};
    LambdaPoly expected;
    expected.add_term(0, generator(1));
    expected.add_term(1, generator(0, 2));
    expected.add_term(3, constant(c));
    o.expect(bracket_master(generator(0), generator(0), ctx) == expected, "c=" + c.get_str());
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& c : kCharges) {
    const AlgebraCtx ctx{c};
    for (const auto& [a, b] : monomial_pairs(7)) {
      o.expect(bracket_master(monomial(a), monomial(b), ctx) == bracket_recursive(monomial(a), monomial(b), ctx),
               "c=" + c.get_str() + ": " + pair_label(a, b));
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 200; ++i) {
    const AlgebraCtx ctx{kCharges[i % 3]};
    const DiffPoly f = random_diffpoly(rng, 8), g = random_diffpoly(rng, 8);
    o.expect(bracket_master(f, g, ctx) == bracket_recursive(f, g, ctx), "random pair " + std::to_string(i));
  }
  return o;
}

Outcome conformal_axioms() {
  Outcome o;
  for (const auto& c : kCharges) {
    const AlgebraCtx ctx{c};
    const std::string tag = "c=" + c.get_str() + ": ";
    for (const auto& [a, b] : monomial_pairs(8)) {
      const DiffPoly f = monomial(a), g = monomial(b);
      const LambdaPoly fg = bracket_master(f, g, ctx);
      o.expect(skew_defect(f, g, ctx).empty(), tag + "skew " + pair_label(a, b));
      if (degree(a) + degree(b) < 8) {
        o.expect(bracket_master(derive(f), g, ctx) == mul_lambda_power(fg, 1, -1), tag + "sesqui-left " + pair_label(a, b));
        o.expect(bracket_master(f, derive(g), ctx) == shift_apply(fg, 1, +1), tag + "sesqui-right " + pair_label(a, b));
      }
    }
    const auto monos = monomials_up_to(6);
    for (const auto& a : monos) {
      for (const auto& b : monos) {
        for (const auto& m : monos) {
          if (degree(a) + degree(b) + degree(m) > 6) continue;
          const DiffPoly x = monomial(a), y = monomial(b), z = monomial(m);
          const std::string label = tag + pair_label(a, b) + " , " + format(m);
          o.expect(jacobi_defect(x, y, z, ctx).empty(), "jacobi " + label);
          o.expect(bracket_master(x, y * z, ctx) == mul(y, bracket_master(x, z, ctx)) + mul(z, bracket_master(x, y, ctx)),
                   "leibniz " + label);
        }
      }
    }
  }
  return o;
}

Outcome spot_values() {
  Outcome o;
  for (const auto& c : kCharges) {
    const AlgebraCtx ctx{c};
    o.expect(nth_product(generator(0), generator(0), 1, ctx) == generator(0, 2), "L_(1)L, c=" + c.get_str());
    o.expect(nth_product(generator(0), generator(0), 3, ctx) == constant(6 * c), "L_(3)L, c=" + c.get_str());
  }
  return o;
}

Outcome theorem_diagrams() {
  Outcome o;
  for (int n = 0; n <= 10; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const K0SigmaElem e = specht(mu);
      const std::string label = format(mu);
      o.expect(phi_sigma(nabla(e)) == derive(phi_sigma(e)), "nabla square " + label);
      for (int j = 1; j <= 5; ++j) {
        const std::string lj = label + ", j=" + std::to_string(j);
        o.expect(phi_sigma(pj_ind(e, j)) == generator(j - 1) * phi_sigma(e), "row square " + lj);
        o.expect(nabla(pj_ind(e, j)) == pj_ind(e, j + 1) + pj_ind(nabla(e), j), "commutation " + lj);
      }
    }
  }
  return o;
}

// (-lambda - nabla)^k substituted into a K0-valued lambda polynomial
K0LambdaPoly k0_reflect(const K0LambdaPoly& p) {
  K0LambdaPoly out;
  for (const auto& [k, c] : p) {
    K0SigmaElem power = c;
    for (int i = 0; i <= k; ++i) {
      const Integer sign = k % 2 == 0 ? 1 : -1;
      out.add_term(k - i, power * (sign * binomial(k, i)));
      power = nabla(power);
    }
  }
  return out;
}

Outcome ring_isomorphism() {
  Outcome o;
  std::vector<Partition> basis;
  for (int n = 0; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) basis.push_back(mu);
  }
  for (const auto& mu : basis) {
    const K0SigmaElem e = specht(mu);
    o.expect(phi_sigma_inv(phi_sigma(e)) == e, "inverse " + format(mu));
    o.expect(phi_sigma(nabla(e)) == derive(phi_sigma(e)), "nabla " + format(mu));
  }
  for (int n = 0; n <= 8; ++n) {
    for (const auto& m : monomials_of_degree(n)) o.expect(phi_sigma(phi_sigma_inv(monomial(m))) == monomial(m), "onto " + format(m));
  }
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (a.size() + b.size() > 8) continue;
      const K0SigmaElem ea = specht(a), eb = specht(b);
      o.expect(phi_sigma(ea * eb) == phi_sigma(ea) * phi_sigma(eb), "product " + format(a) + " , " + format(b));
    }
  }
  for (const auto& c : kCharges) {
    const AlgebraCtx ctx{c};
    for (const auto& a : basis) {
      if (a.size() > 5) continue;
      for (const auto& b : basis) {
        if (b.size() > 5) continue;
        const std::string label = "c=" + c.get_str() + ": " + format(a) + " , " + format(b);
        const K0LambdaPoly ab = lambda_bracket_k0(specht(a), specht(b), ctx);
        LambdaPoly pulled;
        for (const auto& [k, coeff] : ab) pulled.add_term(k, phi_sigma(coeff));
        o.expect(pulled == bracket_master(phi_sigma(specht(a)), phi_sigma(specht(b)), ctx), "transport " + label);
        o.expect(lambda_bracket_k0(specht(b), specht(a), ctx) == -k0_reflect(ab), "skew " + label);
      }
    }
  }
  return o;
}

Outcome weyl_categorification() {
  Outcome o;
  for (int n = 0; n <= 50; ++n) {
    const std::string label = "n=" + std::to_string(n);
    o.expect(res(ind(basis_n(n))) - ind(res(basis_n(n))) == basis_n(n), "K0 " + label);
    o.expect(res(ind(basis_l(n))) - ind(res(basis_l(n))) == basis_l(n), "G0 " + label);
    o.expect(phi_n(ind(basis_n(n))) == times_x(phi_n(basis_n(n))), "phi ind " + label);
    o.expect(phi_n(res(basis_n(n))) == d_dx(phi_n(basis_n(n))), "phi res " + label);
  }
  return o;
}

Outcome branching_dimension() {
  Outcome o;
  for (int n = 0; n <= 12; ++n) {
    for (const auto& mu : partitions_of(n)) {
      Integer total = 0;
      for (const auto& nu : addable_results(mu)) total += standard_tableaux_count(nu);
      o.expect(total == (n + 1) * standard_tableaux_count(mu), format(mu));
    }
  }
  return o;
}

Outcome zhu_diagrams() {
  Outcome o;
  for (const auto& c : kCharges) {
    for (const auto& r : verify_zhu_diagrams(4, 8, AlgebraCtx{c})) {
      o.expect(r.passed, "c=" + c.get_str() + ": " + r.identity + " at " + r.failing_case);
    }
  }
  for (int n = 0; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const K0SigmaElem e = specht(mu);
      const K0NElem image = phi_n_inv(zhu_h(phi_sigma(e)));
      const XPoly qe = q_map(phi_sigma(e));
      for (int j = 0; j <= 4; ++j) {
        const std::string label = format(mu) + ", j=" + std::to_string(j);
        const K0SigmaElem lifted = pj_ind(e, j + 1);
        o.expect(phi_n_inv(zhu_h(phi_sigma(lifted))) == (j == 0 ? ind(image) : K0NElem{}), "zhu cube " + label);
        const XPoly expected = j == 0 ? times_x(qe) : (j == 1 ? qe : XPoly{});
        o.expect(q_map(phi_sigma(lifted)) == expected, "q cube " + label);
      }
      o.expect(q_map(phi_sigma(nabla(e))) == d_dx(qe), "q derive " + format(mu));
    }
  }
  return o;
}

Outcome quantization() {
  Outcome o;
  const AlgebraCtx ctx{0};
  for (int n = 0; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      o.expect(i_map(psi1(specht(mu), ctx)) == psi2(phi_sigma(specht(mu)), ctx), format(mu));
    }
  }
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 8; ++q) {
      const WeylElem a = weyl_term(p, 1), b = weyl_term(q, 1);
      o.expect(a * b - b * a == weyl_term(p + q - 1, 1, q - p), "witt p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
  }
  return o;
}

Outcome hamiltonian() {
  Outcome o;
  for (const auto& c : kCharges) {
    const AlgebraCtx ctx{c};
    const auto monos = monomials_up_to(6);
    for (const auto& a : monos) {
      for (const auto& b : monos) {
        const int top = lambda_degree(bracket_master(monomial(a), monomial(b), ctx));
        for (int n = 0; n <= top; ++n) {
          o.expect(hamiltonian_defect(a, b, n, ctx).empty(),
                   "c=" + c.get_str() + ": " + pair_label(a, b) + ", n=" + std::to_string(n));
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 generator bracket", 1.0, generator_bracket},
      {"2 master formula = recursive oracle", 60.0, oracle_equivalence},
      {"3 conformal axioms (skew, Jacobi, sesquilinearity, Leibniz)", 300.0, conformal_axioms},
      {"4 n-th product spot values", 0.0, spot_values},
      {"5 row-insertion and nabla diagrams", 60.0, theorem_diagrams},
      {"6 phi_sigma ring isomorphism and bracket transport", 0.0, ring_isomorphism},
      {"7 Weyl categorification", 1.0, weyl_categorification},
      {"8 branching dimension identity", 10.0, branching_dimension},
      {"9 Zhu and q diagrams", 0.0, zhu_diagrams},
      {"10 quantization and Witt commutator", 30.0, quantization},
      {"11 Hamiltonian axiom", 0.0, hamiltonian},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.ok = false;
      o.detail = "exceeded " + std::to_string(c.time_limit_s) + " s";
    }
    std::printf("%s  criterion %s  (%ld cases, %.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name.c_str(), o.cases, secs,
                o.ok ? "" : "  first failure: ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
