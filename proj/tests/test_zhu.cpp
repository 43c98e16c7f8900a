#include <doctest.h>

#include <random>

#include "vmcat/bracket.hpp"
#include "vmcat/k0sigma.hpp"
#include "vmcat/verify.hpp"
#include "vmcat/zhu.hpp"

using namespace vmcat;

namespace {

const DiffPoly L = generator(0);
const DiffPoly dL = generator(1);
const DiffPoly d2L = generator(2);

// oracle: substitute values for each generator order and multiply out
XPoly substitute(const DiffPoly& f, const std::vector<XPoly>& images) {
  XPoly out;
  for (const auto& [m, c] : f) {
    XPoly term = x_power(0, c);
    for (int k : m.orders()) term = term * (k < static_cast<int>(images.size()) ? images[k] : XPoly{});
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("zhu_h and q examples") {
  CHECK(zhu_h(L * L * L) == x_power(3));
  CHECK(zhu_h(dL * L).empty());
  CHECK(zhu_h(constant(5)) == x_power(0, 5));
  CHECK(q_map(dL * L) == x_power(1));
  CHECK(q_map(dL * dL * Integer(3) + L) == x_power(0, 3) + x_power(1));
  CHECK(q_map(d2L).empty());
  CHECK(q_map(derive(L * L * L)) == x_power(2, 3));
}

TEST_CASE("zhu_h and q agree with substitution") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const DiffPoly f = random_diffpoly(rng, 8);
    CHECK(zhu_h(f) == substitute(f, {x_power(1)}));
    CHECK(q_map(f) == substitute(f, {x_power(1), x_power(0)}));
    const DiffPoly g = random_diffpoly(rng, 6);
    CHECK(zhu_h(f * g) == zhu_h(f) * zhu_h(g));
    CHECK(q_map(f * g) == q_map(f) * q_map(g));
    CHECK(zhu_h(derive(f)).empty());
    CHECK(q_map(derive(f)) == d_dx(q_map(f)));
  }
}

TEST_CASE("Poisson bracket on the Zhu image vanishes") {
  for (const Integer c : {Integer(0), Integer(1), Integer(-2)}) {
    const AlgebraCtx ctx{c};
    CHECK(zhu_poisson_bracket(L, L, ctx).empty());
    CHECK(zhu_poisson_bracket(L * L, dL * L, ctx).empty());
    for (const auto& f : monomials_up_to(5)) {
      for (const auto& g : monomials_up_to(5)) {
        CHECK(zhu_poisson_bracket(monomial(f), monomial(g), ctx).empty());
      }
    }
  }
}

TEST_CASE("cube through K-theory") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const XPoly base = zhu_h(phi_sigma(specht(mu)));
      const K0NElem image = phi_n_inv(base);
      for (int j = 0; j <= 4; ++j) {
        const K0NElem lifted = phi_n_inv(zhu_h(phi_sigma(pj_ind(specht(mu), j + 1))));
        CHECK(lifted == (j == 0 ? ind(image) : K0NElem{}));
      }
    }
  }
}

TEST_CASE("diagram report") {
  for (const Integer c : {Integer(0), Integer(1), Integer(-2)}) {
    const Report r = verify_zhu_diagrams(4, 6, AlgebraCtx{c});
    CHECK(r.size() == 6);
    for (const auto& check : r) {
      CHECK_MESSAGE(check.passed, check.identity);
      CHECK(check.cases > 0);
    }
  }
}
