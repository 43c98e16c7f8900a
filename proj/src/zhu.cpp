#include "vmcat/zhu.hpp"

#include <string>

#include "vmcat/bracket.hpp"
#include "vmcat/text.hpp"

namespace vmcat {

namespace {

// Multiplicative extension of generator images; `image(k)` is the x-exponent
// of the image of d^k L, or -1 when it maps to zero.
template <class Image>
XPoly multiplicative(const DiffPoly& f, Image image) {
  XPoly out;
  for (const auto& [m, c] : f) {
    int power = 0;
    bool vanishes = false;
    for (int k : m.orders()) {
      auto img = image(k);
      if (img < 0) {
        vanishes = true;
        break;
      }
      power += img;
    }
    if (!vanishes) out.add_term(power, c);
  }
  return out;
}

}  // namespace

XPoly zhu_h(const DiffPoly& f) {
  return multiplicative(f, [](int k) { return k == 0 ? 1 : -1; });
}

XPoly q_map(const DiffPoly& f) {
  return multiplicative(f, [](int k) { return k == 0 ? 1 : (k == 1 ? 0 : -1); });
}

XPoly zhu_poisson_bracket(const DiffPoly& a, const DiffPoly& b, const AlgebraCtx& ctx) {
  return zhu_h(bracket_master(a, b, ctx).coeff(0));
}

Report verify_zhu_diagrams(int j_max, int n_max, const AlgebraCtx& ctx) {
  CheckResult zhu_mul{"zhu-mul"};
  CheckResult zhu_derive{"zhu-derive"};
  CheckResult zhu_gen{"zhu-bracket-generator"};
  CheckResult zhu_all{"zhu-bracket-all"};
  CheckResult q_mul{"q-mul"};
  CheckResult q_derive{"q-derive"};
  auto show = [](const XPoly& p) { return format(p); };

  std::vector<DiffPoly> monomials;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& m : monomials_of_degree(n)) monomials.push_back(monomial(m));
  }

  for (const auto& f : monomials) {
    const std::string label = "f=" + format(f);
    const XPoly zf = zhu_h(f);
    const XPoly qf = q_map(f);
    for (int j = 0; j <= j_max; ++j) {
      const DiffPoly product = mul(generator(j), f);
      const std::string case_label = label + ", j=" + std::to_string(j);
      zhu_mul.check(zhu_h(product), j == 0 ? times_x(zf) : XPoly{}, case_label, show);
      XPoly q_expected = j == 0 ? times_x(qf) : (j == 1 ? qf : XPoly{});
      q_mul.check(q_map(product), q_expected, case_label, show);
    }
    zhu_derive.check(zhu_h(derive(f)), XPoly{}, label, show);
    q_derive.check(q_map(derive(f)), d_dx(qf), label, show);
    zhu_gen.check(zhu_poisson_bracket(generator(0), f, ctx), XPoly{}, label, show);
    for (const auto& g : monomials) {
      zhu_all.check(zhu_poisson_bracket(g, f, ctx), XPoly{}, "g=" + format(g) + ", " + label, show);
    }
  }
  return {zhu_mul, zhu_derive, zhu_gen, zhu_all, q_mul, q_derive};
}

}  // namespace vmcat
