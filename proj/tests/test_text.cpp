#include <doctest.h>

#include <random>

#include "vmcat/bracket.hpp"
#include "vmcat/errors.hpp"
#include "vmcat/text.hpp"
#include "vmcat/verify.hpp"

using namespace vmcat;

namespace {

const DiffPoly L = generator(0);
const DiffPoly dL = generator(1);

std::size_t error_position(auto&& parse, std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for ", text);
  return 0;
}

}  // namespace

TEST_CASE("formatting") {
  CHECK(format(Partition{5, 2, 1}) == "[5,2,1]");
  CHECK(format(Partition{}) == "[]");
  CHECK(format(DiffPoly{}) == "0");
  CHECK(format(constant(1)) == "1");
  CHECK(format(dL * dL * L * Integer(3) - generator(3, 2)) == "3 d1L^2 L - 2 d3L");
  CHECK(format(bracket_master(L, L, AlgebraCtx{1})) == "(d1L) + (2 L)*lam + (1)*lam^3");
  CHECK(format(specht({3, 1}, 2) - specht({2, 2})) == "2*[3,1] - [2,2]");
  CHECK(format(basis_n(3)) == "[N3]");
  CHECK(format(basis_l(2, 3)) == "3*[L2]");
  CHECK(format(x_power(2) - x_power(1, 3) + x_power(0)) == "x^2 - 3 x + 1");
}

TEST_CASE("parsing") {
  CHECK(parse_diffpoly("L") == L);
  CHECK(parse_diffpoly("3 L d1L^2") == dL * dL * L * Integer(3));
  CHECK(parse_diffpoly("d1L*L - 2") == dL * L - constant(2));
  CHECK(parse_diffpoly("d0L") == L);
  CHECK(parse_diffpoly("-L + L") == DiffPoly{});
  CHECK(parse_partition("[ 5, 2 ,1 ]") == Partition{5, 2, 1});
  CHECK(parse_k0sigma("2*[3,1] - [2,2]") == specht({3, 1}, 2) - specht({2, 2}));
  CHECK(parse_k0sigma("[]") == specht({}));
  CHECK(parse_weyl("D^2 x^2") == weyl_term(2, 2) + weyl_term(1, 1, 4) + weyl_term(0, 0, 2));
  CHECK(parse_weyl("D x") == weyl_term(1, 1) + weyl_term(0, 0));
  CHECK(parse_word("2 Ind^5 Res").size() == 1);
  CHECK(parse_k0n("[N3] + 2*[N0]") == basis_n(3) + basis_n(0, 2));
  CHECK(parse_g0n("[L2]") == basis_l(2));
  CHECK(parse_xpoly("x^2 - 3 x + 1") == x_power(2) - x_power(1, 3) + x_power(0));
  CHECK(parse_diffpoly("123456789012345678901234567890 L") ==
        L * Integer("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position(parse_diffpoly, "L +") == 3);
  CHECK(error_position(parse_diffpoly, "L ? L") == 2);
  CHECK(error_position(parse_diffpoly, "d-1L") == 1);
  CHECK(error_position(parse_partition, "[2,3]") == 3);
  CHECK(error_position(parse_partition, "[2,0]") == 3);
  CHECK(error_position(parse_k0sigma, "[1") == 2);
  CHECK_THROWS_AS(parse_diffpoly(""), ParseError);
  CHECK_THROWS_AS(parse_weyl("x*"), ParseError);
  CHECK_THROWS_AS(parse_word("Ind Rez"), ParseError);
  try {
    parse_diffpoly("d-1L");
  } catch (const ParseError& e) {
    CHECK(std::string(e.message()).find("negative derivative order") != std::string::npos);
  }
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const DiffPoly f = random_diffpoly(rng, 8, 5);
    CHECK(parse_diffpoly(format(f)) == f);
    const DiffPoly g = random_diffpoly(rng, 4, 3);
    const LambdaPoly br = bracket_master(f, g, AlgebraCtx{-2});
    CHECK(parse_lambda_poly(format(br)) == br);
    const K0SigmaElem e = phi_sigma_inv(f);
    CHECK(parse_k0sigma(format(e)) == e);
    const HbarPoly h = hbar_bracket(f, g, AlgebraCtx{1});
    CHECK(parse_hbar_poly(format(h)) == h);
    const BiLambdaPoly j = jacobi_defect(L, f, g, AlgebraCtx{1});
    CHECK(parse_bilambda_poly(format(j)) == j);
  }
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const WeylElem w = weyl_term(0, a) * weyl_term(b, 0) - weyl_term(a, b, 7);
      CHECK(parse_weyl(format(w)) == w);
    }
  }
  const K0LambdaPoly k = lambda_bracket_k0(specht({2, 1}), specht({1}), AlgebraCtx{3});
  CHECK(parse_k0_lambda_poly(format(k)) == k);
  const WordCombination w = psi1(specht({3, 1, 1}), AlgebraCtx{0});
  CHECK(parse_word(format(w)) == w);
}
