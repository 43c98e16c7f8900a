#include "vmcat/nilcox.hpp"

#include <algorithm>
#include <string>

#include "vmcat/errors.hpp"

namespace vmcat {

K0NElem ind(const K0NElem& e) {
  K0NElem out;
  for (const auto& [n, c] : e) out.add_term(n + 1, c);
  return out;
}

K0NElem res(const K0NElem& e) {
  K0NElem out;
  for (const auto& [n, c] : e) {
    if (n > 0) out.add_term(n - 1, c * n);
  }
  return out;
}

G0NElem ind(const G0NElem& e) {
  G0NElem out;
  for (const auto& [n, c] : e) out.add_term(n + 1, c * (n + 1));
  return out;
}

G0NElem res(const G0NElem& e) {
  G0NElem out;
  for (const auto& [n, c] : e) {
    if (n > 0) out.add_term(n - 1, c);
  }
  return out;
}

K0NElem mul(const K0NElem& a, const K0NElem& b) {
  K0NElem out;
  for (const auto& [n, x] : a) {
    for (const auto& [m, y] : b) out.add_term(n + m, x * y);
  }
  return out;
}

G0NElem mul(const G0NElem& a, const G0NElem& b) {
  G0NElem out;
  for (const auto& [n, x] : a) {
    for (const auto& [m, y] : b) out.add_term(n + m, x * y * binomial(n + m, n));
  }
  return out;
}

XPoly mul(const XPoly& a, const XPoly& b) {
  XPoly out;
  for (const auto& [n, x] : a) {
    for (const auto& [m, y] : b) out.add_term(n + m, x * y);
  }
  return out;
}

XPoly d_dx(const XPoly& p) {
  XPoly out;
  for (const auto& [n, c] : p) {
    if (n > 0) out.add_term(n - 1, c * n);
  }
  return out;
}

XPoly times_x(const XPoly& p) {
  XPoly out;
  for (const auto& [n, c] : p) out.add_term(n + 1, c);
  return out;
}

XPoly phi_n(const K0NElem& e) {
  XPoly out;
  for (const auto& [n, c] : e) out.add_term(n, c);
  return out;
}

K0NElem phi_n_inv(const XPoly& p) {
  K0NElem out;
  for (const auto& [n, c] : p) out.add_term(n, c);
  return out;
}

WeylElem weyl_mul(const WeylElem& u, const WeylElem& v) {
  WeylElem out;
  for (const auto& [left, a] : u) {
    for (const auto& [right, b] : v) {
      const Integer ab = a * b;
      const int kmax = std::min(left.d, right.x);
      for (int k = 0; k <= kmax; ++k) {
        Integer c = ab * binomial(left.d, k) * binomial(right.x, k) *
                    factorial(static_cast<unsigned long>(k));
        out.add_term({left.x + right.x - k, left.d + right.d - k}, c);
      }
    }
  }
  return out;
}

XPoly weyl_apply(const WeylElem& u, const XPoly& p) {
  XPoly out;
  for (const auto& [w, a] : u) {
    XPoly q = p;
    for (int i = 0; i < w.d; ++i) q = d_dx(q);
    for (const auto& [n, c] : q) out.add_term(n + w.x, c * a);
  }
  return out;
}

namespace {

// (x^a D^b) * x = x^{a+1} D^b + b x^a D^{b-1}: D^b x rewritten by b
// applications of D x = x D + 1.
WeylElem right_multiply_x(const WeylElem& u) {
  WeylElem out;
  for (const auto& [w, c] : u) {
    out.add_term({w.x + 1, w.d}, c);
    if (w.d > 0) out.add_term({w.x, w.d - 1}, c * w.d);
  }
  return out;
}

WeylElem right_multiply_d(const WeylElem& u) {
  WeylElem out;
  for (const auto& [w, c] : u) out.add_term({w.x, w.d + 1}, c);
  return out;
}

void require_zero_charge(const AlgebraCtx& ctx, const char* what) {
  if (sgn(ctx.central_charge) != 0) {
    throw DomainError(std::string(what) + " is defined only at central charge 0, got " +
                      ctx.central_charge.get_str());
  }
}

}  // namespace

WeylElem i_map(const WordCombination& w) {
  WeylElem out;
  for (const auto& [word, c] : w) {
    WeylElem acc = weyl_term(0, 0, c);
    for (IndRes letter : word) acc = letter == IndRes::ind ? right_multiply_x(acc) : right_multiply_d(acc);
    out += acc;
  }
  return out;
}

K0NElem apply_word(const WordCombination& w, const K0NElem& e) {
  K0NElem out;
  for (const auto& [word, c] : w) {
    K0NElem acc = e;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = *it == IndRes::ind ? ind(acc) : res(acc);
    out += acc * c;
  }
  return out;
}

WordCombination psi1(const K0SigmaElem& e, const AlgebraCtx& ctx) {
  require_zero_charge(ctx, "psi1");
  WordCombination out;
  for (const auto& [mu, c] : e) {
    OperatorWord word;
    Integer scale = c;
    for (int part : mu.parts()) {
      const int j = part - 1;
      scale *= factorial(static_cast<unsigned long>(j));
      word.insert(word.end(), static_cast<std::size_t>(j + 3), IndRes::ind);
      word.push_back(IndRes::res);
    }
    out.add_term(word, scale);
  }
  return out;
}

WeylElem psi2(const DiffPoly& f, const AlgebraCtx& ctx) {
  require_zero_charge(ctx, "psi2");
  WeylElem out;
  for (const auto& [m, c] : f) {
    WeylElem acc = weyl_term(0, 0, c);
    for (int j : m.orders()) {
      acc = weyl_mul(acc, weyl_term(j + 3, 1, factorial(static_cast<unsigned long>(j))));
    }
    out += acc;
  }
  return out;
}

}  // namespace vmcat
