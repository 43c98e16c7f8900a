#include "vmcat/verify.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "vmcat/bracket.hpp"
#include "vmcat/k0sigma.hpp"
#include "vmcat/nilcox.hpp"
#include "vmcat/partition.hpp"
#include "vmcat/text.hpp"
#include "vmcat/zhu.hpp"

namespace vmcat {

std::vector<Monomial> monomials_up_to(int max_degree) {
  std::vector<Monomial> out;
  for (int n = 0; n <= max_degree; ++n) {
    for (auto& m : monomials_of_degree(n)) out.push_back(std::move(m));
  }
  return out;
}

DiffPoly random_diffpoly(std::mt19937_64& rng, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> deg(1, std::max(1, max_degree));
  std::uniform_int_distribution<int> coeff(-5, 5);
  DiffPoly out;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    const auto candidates = monomials_of_degree(deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    out.add_term(candidates[pick(rng)], coeff(rng));
  }
  return out;
}

namespace {

constexpr std::uint64_t kSeed = 0x5eedULL;
constexpr int kRandomPairs = 200;

template <class T>
std::string show(const T& v) {
  return format(v);
}

auto shower() {
  return [](const auto& v) { return format(v); };
}

std::vector<Partition> partitions_up_to(int n_max) {
  std::vector<Partition> out;
  for (int n = 0; n <= n_max; ++n) {
    for (auto& p : partitions_of(n)) out.push_back(std::move(p));
  }
  return out;
}

int bound(const std::optional<int>& v, int fallback) { return v.value_or(fallback); }

// ---------------------------------------------------------------- partitions

Report conjugate_involution(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"conjugate-involution"};
  for (const auto& p : partitions_up_to(bound(b.max_n, 12))) {
    r.check(conjugate(conjugate(p)), p, show(p), shower());
    r.check(conjugate(p).size(), p.size(), show(p), [](int v) { return std::to_string(v); });
  }
  return {r};
}

Report branching_dimension(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"branching-dimension"};
  CheckResult hook{"tableaux-hook-length"};
  auto str = [](const Integer& v) { return v.get_str(); };
  for (const auto& p : partitions_up_to(bound(b.max_n, 12))) {
    Integer sum = 0;
    for (const auto& q : addable_results(p)) sum += standard_tableaux_count(q);
    r.check(sum, Integer((p.size() + 1) * standard_tableaux_count(p)), show(p), str);
    hook.check(standard_tableaux_count(p), hook_length_count(p), show(p), str);
  }
  return {r, hook};
}

Report union_laws(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult comm{"union-commutative"};
  CheckResult assoc{"union-associative"};
  CheckResult unit{"union-unit"};
  CheckResult size{"union-size-additive"};
  const auto parts = partitions_up_to(bound(b.max_n, 5));
  for (const auto& p : parts) {
    unit.check(partition_union(p, Partition{}), p, show(p), shower());
    for (const auto& q : parts) {
      const std::string label = show(p) + " " + show(q);
      comm.check(partition_union(p, q), partition_union(q, p), label, shower());
      size.check(partition_union(p, q).size(), p.size() + q.size(), label,
                 [](int v) { return std::to_string(v); });
      for (const auto& s : parts) {
        assoc.check(partition_union(partition_union(p, q), s), partition_union(p, partition_union(q, s)),
                    label + " " + show(s), shower());
      }
    }
  }
  return {comm, assoc, unit, size};
}

Report insert_row_rules(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult as_union{"insert-row-union"};
  CheckResult columns{"insert-row-conjugate"};
  const int j_max = bound(b.max_j, 5);
  for (const auto& p : partitions_up_to(bound(b.max_n, 10))) {
    const auto cols = conjugate(p).parts();
    for (int j = 1; j <= j_max; ++j) {
      const std::string label = show(p) + ", j=" + std::to_string(j);
      const Partition inserted = insert_row(p, j);
      as_union.check(inserted, partition_union(p, Partition{j}), label, shower());
      std::vector<int> expected = cols;
      if (expected.size() < static_cast<std::size_t>(j)) expected.resize(static_cast<std::size_t>(j), 0);
      for (int i = 0; i < j; ++i) ++expected[static_cast<std::size_t>(i)];
      columns.check(conjugate(inserted), Partition(expected), label, shower());
    }
  }
  return {as_union, columns};
}

// ---------------------------------------------------------------- diffpoly

Report mul_laws(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult comm{"mul-commutative"};
  CheckResult assoc{"mul-associative"};
  CheckResult dist{"mul-distributive"};
  CheckResult unit{"mul-unit"};
  std::mt19937_64 rng(kSeed);
  const int deg = bound(b.max_deg, 8);
  for (int i = 0; i < kRandomPairs; ++i) {
    const DiffPoly f = random_diffpoly(rng, deg), g = random_diffpoly(rng, deg), h = random_diffpoly(rng, deg);
    const std::string label = show(f) + " | " + show(g) + " | " + show(h);
    comm.check(f * g, g * f, label, shower());
    assoc.check((f * g) * h, f * (g * h), label, shower());
    dist.check(f * (g + h), f * g + f * h, label, shower());
    unit.check(constant(1) * f, f, label, shower());
  }
  return {comm, assoc, dist, unit};
}

Report derive_leibniz(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"derive-leibniz"};
  std::mt19937_64 rng(kSeed + 1);
  const int deg = bound(b.max_deg, 8);
  for (int i = 0; i < kRandomPairs; ++i) {
    const DiffPoly f = random_diffpoly(rng, deg), g = random_diffpoly(rng, deg);
    r.check(derive(f * g), derive(f) * g + f * derive(g), show(f) + " | " + show(g), shower());
  }
  return {r};
}

Report derive_grading(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"derive-grading"};
  auto str = [](int v) { return std::to_string(v); };
  for (const auto& m : monomials_up_to(bound(b.max_deg, 10))) {
    for (const auto& [out, c] : derive(monomial(m))) {
      r.check(degree(out), degree(m) + 1, show(m), str);
      r.check(conformal_weight(out), conformal_weight(m) + 1, show(m), str);
    }
  }
  return {r};
}

Report monomial_partition_bijection(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"monomial-partition-bijection"};
  for (int n = 0; n <= bound(b.max_n, 10); ++n) {
    const auto monos = monomials_of_degree(n);
    const auto parts = partitions_of(n);
    r.check(monos.size(), parts.size(), "n=" + std::to_string(n),
            [](std::size_t v) { return std::to_string(v); });
    std::set<Partition> images;
    for (const auto& m : monos) {
      r.check(degree(m), n, show(m), [](int v) { return std::to_string(v); });
      images.insert(partition_of(m));
      r.check(monomial_of(partition_of(m)), m, show(m), shower());
    }
    r.check(images.size(), parts.size(), "n=" + std::to_string(n),
            [](std::size_t v) { return std::to_string(v); });
  }
  return {r};
}

Report partial_product_rule(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"partial-product-rule"};
  std::mt19937_64 rng(kSeed + 2);
  const int deg = bound(b.max_deg, 8);
  for (int i = 0; i < kRandomPairs; ++i) {
    const DiffPoly f = random_diffpoly(rng, deg), g = random_diffpoly(rng, deg);
    for (int k = 0; k < deg; ++k) {
      r.check(partial_wrt(f * g, k), partial_wrt(f, k) * g + f * partial_wrt(g, k),
              show(f) + " | " + show(g) + ", k=" + std::to_string(k), shower());
    }
  }
  return {r};
}

// ---------------------------------------------------------------- vmpva

std::vector<std::pair<Monomial, Monomial>> monomial_pairs(int total_degree) {
  std::vector<std::pair<Monomial, Monomial>> out;
  for (int n = 0; n <= total_degree; ++n) {
    for (const auto& f : monomials_up_to(n)) {
      for (const auto& g : monomials_of_degree(n - degree(f))) out.emplace_back(f, g);
    }
  }
  return out;
}

Report master_vs_recursive(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult mono{"master-vs-recursive-monomials"};
  CheckResult rand{"master-vs-recursive-random"};
  const int total = bound(b.max_deg, 7);
  for (const auto& [f, g] : monomial_pairs(total)) {
    mono.check(bracket_master(monomial(f), monomial(g), ctx), bracket_recursive(monomial(f), monomial(g), ctx),
               show(f) + " , " + show(g), shower());
  }
  std::mt19937_64 rng(kSeed + 3);
  for (int i = 0; i < kRandomPairs; ++i) {
    const DiffPoly f = random_diffpoly(rng, total + 1), g = random_diffpoly(rng, total + 1);
    rand.check(bracket_master(f, g, ctx), bracket_recursive(f, g, ctx), show(f) + " , " + show(g), shower());
  }
  return {mono, rand};
}

Report skew_symmetry(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult r{"skew-symmetry"};
  for (const auto& [f, g] : monomial_pairs(bound(b.max_deg, 8))) {
    r.check(skew_defect(monomial(f), monomial(g), ctx), LambdaPoly{}, show(f) + " , " + show(g), shower());
  }
  return {r};
}

template <class Visit>
void for_each_triple(int total, Visit visit) {
  for (const auto& [a, rest_first] : monomial_pairs(total)) {
    const int left = total - degree(a) - degree(rest_first);
    for (const auto& c : monomials_up_to(left)) visit(a, rest_first, c);
  }
}

Report jacobi(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult r{"jacobi"};
  for_each_triple(bound(b.max_deg, 6), [&](const Monomial& a, const Monomial& bb, const Monomial& c) {
    r.check(jacobi_defect(monomial(a), monomial(bb), monomial(c), ctx), BiLambdaPoly{},
            show(a) + " , " + show(bb) + " , " + show(c), shower());
  });
  return {r};
}

Report sesquilinearity(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult left{"sesquilinearity-left"};
  CheckResult right{"sesquilinearity-right"};
  for (const auto& [fm, gm] : monomial_pairs(bound(b.max_deg, 8))) {
    const DiffPoly f = monomial(fm), g = monomial(gm);
    const LambdaPoly fg = bracket_master(f, g, ctx);
    const std::string label = show(fm) + " , " + show(gm);
    left.check(bracket_master(derive(f), g, ctx), mul_lambda_power(fg, 1, -1), label, shower());
    right.check(bracket_master(f, derive(g), ctx), shift_apply(fg, 1, +1), label, shower());
  }
  return {left, right};
}

Report leibniz(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult r{"leibniz"};
  for_each_triple(bound(b.max_deg, 6), [&](const Monomial& am, const Monomial& bm, const Monomial& cm) {
    const DiffPoly a = monomial(am), bb = monomial(bm), c = monomial(cm);
    r.check(bracket_master(a, bb * c, ctx),
            mul(bb, bracket_master(a, c, ctx)) + mul(c, bracket_master(a, bb, ctx)),
            show(am) + " , " + show(bm) + " , " + show(cm), shower());
  });
  return {r};
}

Report hamiltonian(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult r{"hamiltonian"};
  const auto monos = monomials_up_to(bound(b.max_deg, 6));
  for (const auto& f : monos) {
    for (const auto& g : monos) {
      const int top = lambda_degree(bracket_master(monomial(f), monomial(g), ctx));
      for (int n = 0; n <= top; ++n) {
        r.check(hamiltonian_defect(f, g, n, ctx), DiffPoly{},
                show(f) + " , " + show(g) + ", n=" + std::to_string(n), shower());
      }
    }
  }
  return {r};
}

// (d^m L)_(j)(d^n L) from the closed form of the expansion
// (-lambda)^m (lambda + d)^n ((d + 2 lambda) L + c lambda^3).
DiffPoly generator_product_closed_form(int m, int n, int j, const AlgebraCtx& ctx) {
  const Integer sign = m % 2 == 0 ? 1 : -1;
  DiffPoly out;
  if (j >= m && j <= m + n + 1) {
    const Integer c = sign * factorial(static_cast<unsigned long>(j)) *
                      (binomial(n, j - m) + 2 * binomial(n, j - m - 1));
    out.add_term(Monomial::generator(n + m + 1 - j), c);
  }
  if (j == m + n + 3) {
    out.add_term(Monomial{}, sign * factorial(static_cast<unsigned long>(j)) * ctx.central_charge);
  }
  return out;
}

Report generator_products(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult r{"generator-products"};
  const int top = bound(b.max_deg, 8);
  for (int m = 0; m <= top; ++m) {
    for (int n = 0; m + n <= top; ++n) {
      for (int j = 0; j <= m + n + 4; ++j) {
        r.check(nth_product(generator(m), generator(n), j, ctx), generator_product_closed_form(m, n, j, ctx),
                "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", j=" + std::to_string(j), shower());
      }
    }
  }
  return {r};
}

Report integral_form(const VerifyBounds& b, const AlgebraCtx& ctx) {
  // Coefficients are stored as lambda-bracket coefficients, so integrality of
  // the bracket means n! divides every n-th product.
  CheckResult r{"integral-form"};
  for (const auto& [f, g] : monomial_pairs(bound(b.max_deg, 7))) {
    const LambdaPoly br = bracket_master(monomial(f), monomial(g), ctx);
    for (int n = 0; n <= lambda_degree(br); ++n) {
      const DiffPoly prod = nth_product(monomial(f), monomial(g), n, ctx);
      const Integer fact = factorial(static_cast<unsigned long>(n));
      DiffPoly divided;
      bool divisible = true;
      for (const auto& [mono, c] : prod) {
        if (!mpz_divisible_p(c.get_mpz_t(), fact.get_mpz_t())) divisible = false;
        divided.add_term(mono, Integer(c / fact));
      }
      r.check(divisible ? divided : prod, br.coeff(n),
              show(f) + " , " + show(g) + ", n=" + std::to_string(n), shower());
    }
  }
  return {r};
}

// ---------------------------------------------------------------- k0sigma

std::vector<K0SigmaElem> basis_up_to(int n_max) {
  std::vector<K0SigmaElem> out;
  for (const auto& p : partitions_up_to(n_max)) out.push_back(specht(p));
  return out;
}

Report phi_sigma_bijection(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"phi-sigma-bijection"};
  std::mt19937_64 rng(kSeed + 4);
  for (const auto& e : basis_up_to(bound(b.max_n, 10))) {
    r.check(phi_sigma_inv(phi_sigma(e)), e, show(e), shower());
  }
  for (int i = 0; i < kRandomPairs; ++i) {
    const DiffPoly f = random_diffpoly(rng, bound(b.max_n, 10));
    r.check(phi_sigma(phi_sigma_inv(f)), f, show(f), shower());
  }
  return {r};
}

Report thm33(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult left{"pj-ind-is-multiplication"};
  CheckResult right{"nabla-is-derivation"};
  CheckResult rel{"nabla-pj-ind-relation"};
  CheckResult cols{"pj-ind-columns"};
  const int j_max = bound(b.max_j, 5);
  for (const auto& e : basis_up_to(bound(b.max_n, 10))) {
    const std::string label = show(e);
    right.check(phi_sigma(nabla(e)), derive(phi_sigma(e)), label, shower());
    for (int j = 1; j <= j_max; ++j) {
      const std::string jl = label + ", j=" + std::to_string(j);
      left.check(phi_sigma(pj_ind(e, j)), generator(j - 1) * phi_sigma(e), jl, shower());
      rel.check(nabla(pj_ind(e, j)), pj_ind(e, j + 1) + pj_ind(nabla(e), j), jl, shower());
      cols.check(pj_ind(e, j), pj_ind_by_columns(e, j), jl, shower());
    }
  }
  return {left, right, rel, cols};
}

Report k0_ring(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult comm{"k0-product-commutative"};
  CheckResult assoc{"k0-product-associative"};
  CheckResult unit{"k0-product-unit"};
  CheckResult iso{"phi-sigma-ring-isomorphism"};
  CheckResult leib{"nabla-leibniz"};
  const auto basis = basis_up_to(bound(b.max_n, 5));
  const K0SigmaElem one = specht(Partition{});
  for (const auto& x : basis) {
    unit.check(x * one, x, show(x), shower());
    for (const auto& y : basis) {
      const std::string label = show(x) + " , " + show(y);
      comm.check(x * y, y * x, label, shower());
      iso.check(phi_sigma(x * y), phi_sigma(x) * phi_sigma(y), label, shower());
      leib.check(nabla(x * y), nabla(x) * y + x * nabla(y), label, shower());
    }
  }
  const auto small = basis_up_to(std::min(bound(b.max_n, 5), 3));
  for (const auto& x : small) {
    for (const auto& y : small) {
      for (const auto& z : small) {
        assoc.check((x * y) * z, x * (y * z), show(x) + " , " + show(y) + " , " + show(z), shower());
      }
    }
  }
  return {comm, assoc, unit, iso, leib};
}

Report ind_dimension(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"ind-dimension"};
  CheckResult restr{"res-dimension"};
  auto str = [](const Integer& v) { return v.get_str(); };
  auto dim = [](const K0SigmaElem& e) {
    Integer d = 0;
    for (const auto& [mu, c] : e) d += c * standard_tableaux_count(mu);
    return d;
  };
  for (const auto& p : partitions_up_to(bound(b.max_n, 10))) {
    const K0SigmaElem e = specht(p);
    r.check(dim(ind(e)), Integer((p.size() + 1) * standard_tableaux_count(p)), show(p), str);
    // restriction preserves dimension
    restr.check(dim(res(e)), p.empty() ? Integer(0) : standard_tableaux_count(p), show(p), str);
  }
  return {r, restr};
}

struct K0BiTag;
using K0BiLambdaPoly = Combination<BiExponent, K0SigmaElem, K0BiTag>;

K0SigmaElem nabla_power(K0SigmaElem e, int k) {
  for (int i = 0; i < k && !e.empty(); ++i) e = nabla(e);
  return e;
}

// sum_n (-lambda - nabla)^n c_n, computed on the K_0 side.
K0LambdaPoly k0_substitute(const K0LambdaPoly& p) {
  K0LambdaPoly out;
  for (const auto& [n, c] : p) {
    const Integer sign = n % 2 == 0 ? 1 : -1;
    for (int k = 0; k <= n; ++k) out.add_term(n - k, nabla_power(c, k) * Integer(sign * binomial(n, k)));
  }
  return out;
}

Report k0_bracket_transport(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult transport{"k0-bracket-transport"};
  CheckResult skew{"k0-skew-symmetry"};
  CheckResult jac{"k0-jacobi"};
  const int n_max = bound(b.max_n, 4);
  const auto basis = basis_up_to(n_max);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const std::string label = show(x) + " , " + show(y);
      const K0LambdaPoly xy = lambda_bracket_k0(x, y, ctx);
      LambdaPoly pulled;
      for (const auto& [e, c] : xy) pulled.add_term(e, phi_sigma(c));
      transport.check(pulled, bracket_master(phi_sigma(x), phi_sigma(y), ctx), label, shower());
      skew.check(lambda_bracket_k0(y, x, ctx) + k0_substitute(xy), K0LambdaPoly{}, label, shower());
    }
  }
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      for (const auto& z : basis) {
        if (x.begin()->first.size() + y.begin()->first.size() + z.begin()->first.size() > n_max) continue;
        K0BiLambdaPoly defect;
        for (const auto& [k, c] : lambda_bracket_k0(y, z, ctx)) {
          for (const auto& [j, d] : lambda_bracket_k0(x, c, ctx)) defect.add_term({j, k}, d);
        }
        for (const auto& [j, c] : lambda_bracket_k0(x, z, ctx)) {
          for (const auto& [k, d] : lambda_bracket_k0(y, c, ctx)) defect.sub_term({j, k}, d);
        }
        for (const auto& [n, c] : lambda_bracket_k0(x, y, ctx)) {
          for (const auto& [p, d] : lambda_bracket_k0(c, z, ctx)) {
            for (int i = 0; i <= p; ++i) defect.sub_term({n + i, p - i}, d * binomial(p, i));
          }
        }
        jac.check(defect.empty(), true, show(x) + " , " + show(y) + " , " + show(z),
                  [](bool v) { return std::string(v ? "zero" : "nonzero"); });
      }
    }
  }
  return {transport, skew, jac};
}

// ---------------------------------------------------------------- nilcox

Report weyl_relations(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult k0n{"weyl-relation-k0n"};
  CheckResult g0n{"weyl-relation-g0n"};
  CheckResult inter{"phi-n-intertwines"};
  const int n_max = bound(b.max_n, 50);
  for (int n = 0; n <= n_max; ++n) {
    const std::string label = "n=" + std::to_string(n);
    const K0NElem e = basis_n(n);
    k0n.check(res(ind(e)) - ind(res(e)), e, label, shower());
    const G0NElem g = basis_l(n);
    g0n.check(res(ind(g)) - ind(res(g)), g, label, shower());
    inter.check(phi_n(ind(e)), times_x(phi_n(e)), label, shower());
    inter.check(phi_n(res(e)), d_dx(phi_n(e)), label, shower());
    inter.check(phi_n_inv(phi_n(e)), e, label, shower());
  }
  return {k0n, g0n, inter};
}

WeylElem random_weyl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(0, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> terms(1, 3);
  WeylElem out;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) out.add_term({exp(rng), exp(rng)}, coeff(rng));
  return out;
}

// The word x^a D^b as Ind^a Res^b.
WordCombination word_of(const WeylElem& w) {
  WordCombination out;
  for (const auto& [m, c] : w) {
    OperatorWord word(static_cast<std::size_t>(m.x), IndRes::ind);
    word.insert(word.end(), static_cast<std::size_t>(m.d), IndRes::res);
    out.add_term(word, c);
  }
  return out;
}

WordCombination concat(const WordCombination& u, const WordCombination& v) {
  WordCombination out;
  for (const auto& [a, x] : u) {
    for (const auto& [bw, y] : v) {
      OperatorWord w = a;
      w.insert(w.end(), bw.begin(), bw.end());
      out.add_term(w, x * y);
    }
  }
  return out;
}

Report weyl_algebra(const VerifyBounds&, const AlgebraCtx&) {
  CheckResult assoc{"weyl-associativity"};
  CheckResult rewrite{"weyl-product-vs-rewriting"};
  CheckResult action{"weyl-action-compatible"};
  std::mt19937_64 rng(kSeed + 5);
  for (int i = 0; i < kRandomPairs; ++i) {
    const WeylElem u = random_weyl(rng), v = random_weyl(rng), w = random_weyl(rng);
    const std::string label = show(u) + " | " + show(v) + " | " + show(w);
    assoc.check((u * v) * w, u * (v * w), label, shower());
    rewrite.check(u * v, i_map(concat(word_of(u), word_of(v))), label, shower());
    for (int n = 0; n <= 6; ++n) {
      action.check(weyl_apply(u * v, x_power(n)), weyl_apply(u, weyl_apply(v, x_power(n))),
                   label + ", x^" + std::to_string(n), shower());
    }
  }
  return {assoc, rewrite, action};
}

Report witt_commutator(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"witt-commutator"};
  const int top = bound(b.max_deg, 8);
  for (int p = 1; p <= top; ++p) {
    for (int q = 1; q <= top; ++q) {
      const WeylElem a = weyl_term(p, 1), c = weyl_term(q, 1);
      r.check(a * c - c * a, weyl_term(p + q - 1, 1, q - p), "p=" + std::to_string(p) + ", q=" + std::to_string(q),
              shower());
    }
  }
  return {r};
}

Report quantization(const VerifyBounds& b, const AlgebraCtx&) {
  // The quantization maps are defined at central charge 0 only.
  const AlgebraCtx zero{};
  CheckResult diagram{"quantization-diagram"};
  CheckResult act{"psi1-action"};
  for (const auto& p : partitions_up_to(bound(b.max_n, 6))) {
    const K0SigmaElem e = specht(p);
    const WordCombination word = psi1(e, zero);
    diagram.check(i_map(word), psi2(phi_sigma(e), zero), show(p), shower());
    for (int n = 0; n <= 8; ++n) {
      act.check(phi_n(apply_word(word, basis_n(n))), weyl_apply(i_map(word), x_power(n)),
                show(p) + ", [N" + std::to_string(n) + "]", shower());
    }
  }
  return {diagram, act};
}

// ---------------------------------------------------------------- zhu

Report zhu_homomorphisms(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult zhu{"zhu-homomorphism"};
  CheckResult q{"q-homomorphism"};
  std::mt19937_64 rng(kSeed + 6);
  const int deg = bound(b.max_deg, 8);
  for (int i = 0; i < kRandomPairs; ++i) {
    const DiffPoly f = random_diffpoly(rng, deg), g = random_diffpoly(rng, deg);
    const std::string label = show(f) + " | " + show(g);
    zhu.check(zhu_h(f * g), zhu_h(f) * zhu_h(g), label, shower());
    zhu.check(zhu_h(f + g), zhu_h(f) + zhu_h(g), label, shower());
    q.check(q_map(f * g), q_map(f) * q_map(g), label, shower());
    q.check(q_map(f + g), q_map(f) + q_map(g), label, shower());
  }
  return {zhu, q};
}

Report q_derive(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"q-derive-partitions"};
  for (const auto& e : basis_up_to(bound(b.max_n, 10))) {
    const DiffPoly f = phi_sigma(e);
    r.check(q_map(derive(f)), d_dx(q_map(f)), show(e), shower());
    // through K-theory: nabla on K_0(Sigma) lands on Res on K_0(N)
    r.check(phi_n_inv(q_map(phi_sigma(nabla(e)))), res(phi_n_inv(q_map(f))), show(e), shower());
  }
  return {r};
}

Report zhu_kills(const VerifyBounds& b, const AlgebraCtx& ctx) {
  CheckResult der{"zhu-kills-derivatives"};
  CheckResult br{"zhu-kills-zeroth-products"};
  const auto basis = basis_up_to(bound(b.max_n, 8));
  for (const auto& e : basis) {
    const DiffPoly f = phi_sigma(e);
    der.check(zhu_h(derive(f)), XPoly{}, show(e), shower());
    br.check(zhu_poisson_bracket(generator(0), f, ctx), XPoly{}, show(e), shower());
    br.check(zhu_poisson_bracket(f, generator(0), ctx), XPoly{}, show(e), shower());
  }
  return {der, br};
}

Report zhu_cube(const VerifyBounds& b, const AlgebraCtx&) {
  CheckResult r{"zhu-cube"};
  CheckResult q{"q-cube"};
  const int j_max = bound(b.max_j, 4);
  auto through_zhu = [](const K0SigmaElem& e) { return phi_n_inv(zhu_h(phi_sigma(e))); };
  auto through_q = [](const K0SigmaElem& e) { return phi_n_inv(q_map(phi_sigma(e))); };
  for (const auto& e : basis_up_to(bound(b.max_n, 8))) {
    for (int j = 0; j <= j_max; ++j) {
      const std::string label = show(e) + ", j=" + std::to_string(j);
      const K0SigmaElem lifted = pj_ind(e, j + 1);
      r.check(through_zhu(lifted), j == 0 ? ind(through_zhu(e)) : K0NElem{}, label, shower());
      const K0NElem base = through_q(e);
      q.check(through_q(lifted), j == 0 ? ind(base) : (j == 1 ? base : K0NElem{}), label, shower());
    }
  }
  return {r, q};
}

Report zhu_diagrams(const VerifyBounds& b, const AlgebraCtx& ctx) {
  return verify_zhu_diagrams(bound(b.max_j, 4), bound(b.max_n, 8), ctx);
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> suites = {
      {"conjugate-involution", "partitions", "conjugation is an involution preserving size (max-n 12)",
       conjugate_involution},
      {"branching-dimension", "partitions",
       "sum of tableaux counts over added boxes is (n+1) f^p; recursion agrees with hook lengths (max-n 12)",
       branching_dimension},
      {"union-laws", "partitions", "union is commutative, associative, unital, size-additive (max-n 5)", union_laws},
      {"insert-row", "partitions", "insert_row equals union with (j) and adds a box to the first j columns",
       insert_row_rules},
      {"mul-laws", "diffpoly", "product is commutative, associative, distributive, unital (max-deg 8)", mul_laws},
      {"derive-leibniz", "diffpoly", "d(fg) = d(f) g + f d(g) on random pairs (max-deg 8)", derive_leibniz},
      {"derive-grading", "diffpoly", "d raises degree and conformal weight by one (max-deg 10)", derive_grading},
      {"monomial-partition-bijection", "diffpoly", "degree-n monomials biject with partitions of n (max-n 10)",
       monomial_partition_bijection},
      {"partial-product-rule", "diffpoly", "generator partials obey the product rule (max-deg 8)",
       partial_product_rule},
      {"master-vs-recursive", "vmpva",
       "master formula equals the recursive oracle on monomial pairs (total max-deg 7) and random pairs",
       master_vs_recursive},
      {"skew-symmetry", "vmpva", "skew_defect vanishes on monomial pairs (total max-deg 8)", skew_symmetry},
      {"jacobi", "vmpva", "jacobi_defect vanishes on monomial triples (total max-deg 6)", jacobi},
      {"sesquilinearity", "vmpva", "{df_l g} = -l {f_l g}, {f_l dg} = (l+d){f_l g} (total max-deg 8)",
       sesquilinearity},
      {"leibniz", "vmpva", "{a_l bc} = b{a_l c} + c{a_l b} on monomial triples (total max-deg 6)", leibniz},
      {"hamiltonian", "vmpva", "hamiltonian_defect vanishes on monomial pairs (max-deg 6 each)", hamiltonian},
      {"generator-products", "vmpva", "n-th products of generators match the closed-form table (max-deg 8)",
       generator_products},
      {"integral-form", "vmpva", "n! divides every n-th product of V_Z elements (total max-deg 7)", integral_form},
      {"phi-sigma-bijection", "k0sigma", "phi_sigma and its inverse are mutually inverse (max-n 10)",
       phi_sigma_bijection},
      {"thm33", "k0sigma",
       "P^j Ind <-> d^{j-1}L, nabla <-> d, nabla P^j = P^{j+1} + P^j nabla, row vs column P^j (max-n 10, max-j 5)",
       thm33},
      {"k0-ring", "k0sigma", "union product laws, phi_sigma ring isomorphism, nabla Leibniz (max-n 5)", k0_ring},
      {"ind-dimension", "k0sigma", "Ind multiplies dimension by n+1; Res preserves it (max-n 10)", ind_dimension},
      {"k0-bracket-transport", "k0sigma", "transported bracket, its skew-symmetry and Jacobi in K_0 (max-n 4)",
       k0_bracket_transport},
      {"weyl-relations", "nilcox", "Res Ind - Ind Res = Id on K_0(N), G_0(N); phi_N intertwines (max-n 50)",
       weyl_relations},
      {"weyl-algebra", "nilcox", "Weyl product associative, agrees with rewriting and with the action",
       weyl_algebra},
      {"witt-commutator", "nilcox", "[x^p D, x^q D] = (q-p) x^{p+q-1} D (max-deg 8)", witt_commutator},
      {"quantization", "nilcox", "i o psi1 = psi2 o phi_sigma at c=0 (max-n 6)", quantization},
      {"zhu-homomorphisms", "zhu", "zhu_h and q are ring homomorphisms (max-deg 8)", zhu_homomorphisms},
      {"q-derive", "zhu", "q o d = d/dx o q (max-n 10)", q_derive},
      {"zhu-kills", "zhu", "zhu_h kills derivatives and 0-th products with L (max-n 8)", zhu_kills},
      {"zhu-cube", "zhu", "Zhu and q cubes through K-theory (max-n 8, max-j 4)", zhu_cube},
      {"zhu-diagrams", "zhu", "verify_zhu_diagrams sweep (max-n 8, max-j 4)", zhu_diagrams},
  };
  return suites;
}

Report run_suite(const std::string& name, const VerifyBounds& bounds, const AlgebraCtx& ctx) {
  Report out;
  bool found = false;
  for (const auto& suite : verification_suites()) {
    if (name != "all" && suite.name != name) continue;
    found = true;
    for (auto& r : suite.run(bounds, ctx)) out.push_back(std::move(r));
  }
  if (!found) throw std::invalid_argument("unknown verification suite '" + name + "'");
  return out;
}

}  // namespace vmcat
