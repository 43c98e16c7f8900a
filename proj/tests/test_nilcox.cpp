#include <doctest.h>

#include <random>

#include "vmcat/errors.hpp"
#include "vmcat/nilcox.hpp"
#include "vmcat/partition.hpp"

using namespace vmcat;

namespace {

const AlgebraCtx c0{0};

WeylElem X() { return weyl_term(1, 0); }
WeylElem D() { return weyl_term(0, 1); }

WeylElem random_weyl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 4), c(-3, 3), n(1, 3);
  WeylElem w;
  for (int i = n(rng); i > 0; --i) w.add_term({e(rng), e(rng)}, c(rng));
  return w;
}

// oracle: two operators agree on Z[x] iff they agree on 1, x, ..., x^N
// for N above every exponent present
bool same_action(const WeylElem& u, const WeylElem& v, int n) {
  for (int k = 0; k <= n; ++k) {
    if (weyl_apply(u, x_power(k)) != weyl_apply(v, x_power(k))) return false;
  }
  return true;
}

OperatorWord word(std::initializer_list<std::pair<IndRes, int>> runs) {
  OperatorWord w;
  for (const auto& [letter, count] : runs) w.insert(w.end(), count, letter);
  return w;
}

}  // namespace

TEST_CASE("K0(N) and G0(N) actions") {
  CHECK(ind(basis_n(3)) == basis_n(4));
  CHECK(res(basis_n(3)) == basis_n(2, 3));
  CHECK(res(basis_n(0)).empty());
  CHECK(ind(basis_l(2)) == basis_l(3, 3));
  CHECK(res(basis_l(5)) == basis_l(4));
  CHECK(res(basis_l(0)).empty());
  for (int n = 0; n <= 50; ++n) {
    CHECK(res(ind(basis_n(n))) - ind(res(basis_n(n))) == basis_n(n));
    CHECK(res(ind(basis_l(n))) - ind(res(basis_l(n))) == basis_l(n));
  }
}

TEST_CASE("K0(N) and G0(N) products") {
  CHECK(basis_n(2) * basis_n(3) == basis_n(5));
  CHECK(basis_l(1) * basis_l(1) == basis_l(2, 2));
  const G0NElem e = basis_l(3, 2) - basis_l(1);
  CHECK(basis_l(0) * e == e);
  CHECK(basis_l(2) * basis_l(3) == basis_l(5, 10));
}

TEST_CASE("phi_N") {
  CHECK(phi_n(basis_n(3)) == x_power(3));
  CHECK(phi_n(basis_n(0)) == x_power(0));
  CHECK(phi_n(basis_n(1, 2) - basis_n(0)) == x_power(1, 2) - x_power(0));
  for (int n = 0; n <= 50; ++n) {
    const K0NElem e = basis_n(n, n + 1) + basis_n(n / 2);
    CHECK(phi_n(ind(e)) == times_x(phi_n(e)));
    CHECK(phi_n(res(e)) == d_dx(phi_n(e)));
    CHECK(phi_n_inv(phi_n(e)) == e);
    CHECK(phi_n(e * basis_n(3)) == phi_n(e) * x_power(3));
  }
}

TEST_CASE("Weyl product") {
  CHECK(D() * X() == weyl_term(1, 1) + weyl_term(0, 0));
  CHECK(X() * D() == weyl_term(1, 1));
  CHECK(weyl_term(0, 2) * weyl_term(2, 0) == weyl_term(2, 2) + weyl_term(1, 1, 4) + weyl_term(0, 0, 2));
  CHECK(weyl_apply(weyl_term(1, 1), x_power(2)) == x_power(2, 2));
  CHECK(weyl_apply(D(), x_power(0)).empty());
  CHECK(weyl_apply(weyl_term(0, 2) * weyl_term(2, 0), x_power(2)) == x_power(2, 12));
  // D^b x^c against the action of D^b after multiplying by x^c
  for (int b = 0; b <= 5; ++b) {
    for (int c = 0; c <= 5; ++c) {
      const WeylElem prod = weyl_term(0, b) * weyl_term(c, 0);
      for (int k = 0; k <= 10; ++k) {
        XPoly direct = x_power(k + c);
        for (int i = 0; i < b; ++i) direct = d_dx(direct);
        CHECK(weyl_apply(prod, x_power(k)) == direct);
      }
      CHECK(same_action(prod, weyl_term(0, b) * weyl_term(c, 0), b + c + 2));
    }
  }
}

TEST_CASE("Weyl product matches composition of actions") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const WeylElem u = random_weyl(rng), v = random_weyl(rng), w = random_weyl(rng);
    for (int k = 0; k <= 12; ++k) {
      CHECK(weyl_apply(u * v, x_power(k)) == weyl_apply(u, weyl_apply(v, x_power(k))));
    }
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
  }
}

TEST_CASE("Witt commutator") {
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 8; ++q) {
      const WeylElem a = weyl_term(p, 1), b = weyl_term(q, 1);
      CHECK(a * b - b * a == weyl_term(p + q - 1, 1, q - p));
    }
  }
}

TEST_CASE("i_map and words") {
  WordCombination w(word({{IndRes::ind, 3}, {IndRes::res, 1}}), 1);
  CHECK(i_map(w) == weyl_term(3, 1));
  WordCombination dx(word({{IndRes::res, 1}, {IndRes::ind, 1}}), 1);
  CHECK(i_map(dx) == weyl_term(1, 1) + weyl_term(0, 0));
  CHECK(apply_word(dx, basis_n(4)) == basis_n(4, 5));
  CHECK(apply_word(w, basis_n(2)) == basis_n(4, 2));
}

TEST_CASE("quantization examples") {
  const WordCombination w1 = psi1(specht({1}), c0);
  CHECK(w1 == WordCombination(word({{IndRes::ind, 3}, {IndRes::res, 1}}), 1));
  CHECK(i_map(w1) == weyl_term(3, 1));
  const WordCombination w3 = psi1(specht({3}), c0);
  CHECK(w3 == WordCombination(word({{IndRes::ind, 5}, {IndRes::res, 1}}), 2));
  CHECK(i_map(w3) == weyl_term(5, 1, 2));
  const WordCombination w11 = psi1(specht({1, 1}), c0);
  CHECK(w11 == WordCombination(word({{IndRes::ind, 3}, {IndRes::res, 1}, {IndRes::ind, 3}, {IndRes::res, 1}}), 1));
  CHECK(i_map(w11) == weyl_term(6, 2) + weyl_term(5, 1, 3));

  CHECK(psi2(generator(2), c0) == weyl_term(5, 1, 2));
  CHECK(psi2(generator(0), c0) == weyl_term(3, 1));
  CHECK(psi2(generator(0) * generator(0), c0) == weyl_term(6, 2) + weyl_term(5, 1, 3));
  CHECK(psi1(specht({}), c0) == WordCombination(OperatorWord{}, 1));
}

TEST_CASE("quantization diagram") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const WordCombination w = psi1(specht(mu), c0);
      const WeylElem q = i_map(w);
      CHECK(q == psi2(phi_sigma(specht(mu)), c0));
      // the word acting on K0(N) agrees with the Weyl element acting on Z[x]
      for (int k = 0; k <= 8; ++k) CHECK(phi_n(apply_word(w, basis_n(k))) == weyl_apply(q, x_power(k)));
    }
  }
}

TEST_CASE("quantization requires zero charge") {
  CHECK_THROWS_AS(psi1(specht({1}), AlgebraCtx{1}), DomainError);
  CHECK_THROWS_AS(psi2(generator(0), AlgebraCtx{-2}), DomainError);
}
