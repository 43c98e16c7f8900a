#include "vmcat/text.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>
#include <vector>

#include "vmcat/errors.hpp"

namespace vmcat {

// ---------------------------------------------------------------------------
// formatting

namespace {

template <class Combo, class Body>
std::string format_signed_sum(const Combo& combo, Body body, bool descending = false) {
  if (combo.empty()) return "0";
  std::string out;
  bool first = true;
  std::vector<std::pair<typename Combo::key_type, Integer>> terms(combo.begin(), combo.end());
  if (descending) std::reverse(terms.begin(), terms.end());
  for (const auto& [key, c] : terms) {
    const bool negative = sgn(c) < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += body(key, magnitude);
    first = false;
  }
  return out;
}

std::string power_suffix(int e) { return e == 1 ? std::string() : "^" + std::to_string(e); }

std::string var_suffix(const char* var, int e) {
  if (e == 0) return {};
  return std::string("*") + var + power_suffix(e);
}

template <class Combo, class Inner, class Suffix>
std::string format_poly_coeffs(const Combo& combo, Inner inner, Suffix suffix) {
  if (combo.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : combo) {
    if (!out.empty()) out += " + ";
    out += "(" + inner(c) + ")" + suffix(key);
  }
  return out;
}

std::string partition_body(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::string scaled(const Integer& c, const std::string& body, const char* sep) {
  return c == 1 ? body : c.get_str() + sep + body;
}

}  // namespace

std::string format(const Partition& p) { return partition_body(p); }

std::string format(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  const auto& orders = m.orders();
  for (std::size_t i = 0; i < orders.size();) {
    std::size_t j = i;
    while (j < orders.size() && orders[j] == orders[i]) ++j;
    if (!out.empty()) out += " ";
    out += orders[i] == 0 ? "L" : "d" + std::to_string(orders[i]) + "L";
    out += power_suffix(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

std::string format(const DiffPoly& f) {
  return format_signed_sum(f, [](const Monomial& m, const Integer& c) {
    if (m.is_unit()) return c.get_str();
    return scaled(c, format(m), " ");
  });
}

std::string format(const LambdaPoly& p) {
  return format_poly_coeffs(
      p, [](const DiffPoly& c) { return format(c); }, [](int e) { return var_suffix("lam", e); });
}

std::string format(const BiLambdaPoly& p) {
  return format_poly_coeffs(
      p, [](const DiffPoly& c) { return format(c); },
      [](const BiExponent& e) { return var_suffix("lam", e.lam) + var_suffix("mu", e.mu); });
}

std::string format(const HbarPoly& p) {
  return format_poly_coeffs(
      p, [](const DiffPoly& c) { return format(c); }, [](int e) { return var_suffix("hbar", e); });
}

std::string format(const K0SigmaElem& e) {
  return format_signed_sum(
      e, [](const Partition& mu, const Integer& c) { return scaled(c, partition_body(mu), "*"); }, true);
}

std::string format(const K0LambdaPoly& p) {
  return format_poly_coeffs(
      p, [](const K0SigmaElem& c) { return format(c); }, [](int e) { return var_suffix("lam", e); });
}

std::string format(const K0NElem& e) {
  return format_signed_sum(e, [](int n, const Integer& c) {
    return scaled(c, "[N" + std::to_string(n) + "]", "*");
  }, true);
}

std::string format(const G0NElem& e) {
  return format_signed_sum(e, [](int n, const Integer& c) {
    return scaled(c, "[L" + std::to_string(n) + "]", "*");
  }, true);
}

std::string format(const XPoly& p) {
  return format_signed_sum(p, [](int n, const Integer& c) {
    if (n == 0) return c.get_str();
    return scaled(c, "x" + power_suffix(n), " ");
  }, true);
}

std::string format(const WeylElem& w) {
  return format_signed_sum(w, [](const WeylMonomial& m, const Integer& c) {
    if (m.x == 0 && m.d == 0) return c.get_str();
    std::string body;
    if (m.x > 0) body += "x" + power_suffix(m.x);
    if (m.d > 0) body += (body.empty() ? "" : " ") + std::string("D") + power_suffix(m.d);
    return scaled(c, body, " ");
  }, true);
}

std::string format(const WordCombination& w) {
  return format_signed_sum(w, [](const OperatorWord& word, const Integer& c) {
    if (word.empty()) return c.get_str();
    std::string body;
    for (std::size_t i = 0; i < word.size();) {
      std::size_t j = i;
      while (j < word.size() && word[j] == word[i]) ++j;
      if (!body.empty()) body += " ";
      body += word[i] == IndRes::ind ? "Ind" : "Res";
      body += power_suffix(static_cast<int>(j - i));
      i = j;
    }
    return scaled(c, body, " ");
  });
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Next character without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  // A small non-negative integer (exponent, order, index), read without
  // skipping leading whitespace.
  int small_number() {
    const std::size_t start = pos_;
    if (peek_raw() == '-') fail("negative value not allowed");
    if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("expected a digit");
    Integer v = number();
    if (v > INT_MAX / 4) {
      pos_ = start;
      fail("value too large");
    }
    return static_cast<int>(v.get_si());
  }

  int optional_exponent() {
    if (peek_raw() != '^') return 1;
    ++pos_;
    return small_number();
  }

  void finish() {
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// term ( ('+'|'-') term )*, with an optional leading sign.
template <class T, class Term>
T parse_sum(Scanner& s, Term term) {
  T out;
  bool first = true;
  for (;;) {
    bool negative = false;
    if (s.accept('-')) {
      negative = true;
    } else if (!s.accept('+') && !first) {
      break;
    }
    T t = term(s);
    if (negative) {
      out -= t;
    } else {
      out += t;
    }
    first = false;
  }
  return out;
}

template <class T, class Term>
T parse_whole(std::string_view text, Term term) {
  Scanner s(text);
  T out = parse_sum<T>(s, term);
  s.finish();
  return out;
}

struct Coefficient {
  Integer value = 1;
  bool explicit_value = false;
};

Coefficient leading_coefficient(Scanner& s) {
  Coefficient c;
  if (s.at_digit()) {
    c.value = s.number();
    c.explicit_value = true;
  }
  return c;
}

DiffPoly diffpoly_term(Scanner& s) {
  Coefficient c = leading_coefficient(s);
  std::vector<int> orders;
  for (;;) {
    const bool starred = s.accept('*');
    const char next = s.peek();
    int order;
    if (next == 'L') {
      s.expect('L');
      order = 0;
    } else if (next == 'd') {
      s.expect('d');
      if (s.peek_raw() == '-') s.fail("negative derivative order");
      order = s.small_number();
      if (s.peek_raw() != 'L') s.fail("expected 'L' after derivative order");
      s.expect('L');
    } else {
      if (starred) s.fail("expected a generator after '*'");
      break;
    }
    const int e = s.optional_exponent();
    orders.insert(orders.end(), static_cast<std::size_t>(e), order);
  }
  if (!c.explicit_value && orders.empty()) s.fail("expected a term");
  return monomial(Monomial(std::move(orders)), c.value);
}

DiffPoly diffpoly_sum(Scanner& s) { return parse_sum<DiffPoly>(s, diffpoly_term); }

// Parses '*var^k' suffixes in the given order; each is optional.
std::vector<int> variable_powers(Scanner& s, const std::vector<std::string_view>& vars) {
  std::vector<int> powers(vars.size(), 0);
  std::size_t next_var = 0;
  while (s.peek() == '*') {
    s.accept('*');
    bool matched = false;
    for (std::size_t v = next_var; v < vars.size(); ++v) {
      if (s.accept_word(vars[v])) {
        powers[v] = s.optional_exponent();
        next_var = v + 1;
        matched = true;
        break;
      }
    }
    if (!matched) s.fail("expected a formal variable");
  }
  return powers;
}

DiffPoly diffpoly_constant(const Integer& c) { return constant(c); }

Partition partition_literal(Scanner& s) {
  s.expect('[');
  std::vector<int> parts;
  if (!s.accept(']')) {
    do {
      s.skip_ws();
      const std::size_t at = s.pos();
      const int v = s.small_number();
      if (v == 0) throw ParseError("partition parts must be positive", at);
      if (!parts.empty() && v > parts.back()) {
        throw ParseError("partition parts must be weakly decreasing", at);
      }
      parts.push_back(v);
    } while (s.accept(','));
    s.expect(']');
  }
  return Partition(std::move(parts));
}

K0SigmaElem k0sigma_term(Scanner& s) {
  Coefficient c = leading_coefficient(s);
  if (c.explicit_value) s.accept('*');
  if (s.peek() != '[') {
    if (!c.explicit_value) s.fail("expected a partition literal");
    return specht(Partition{}, c.value);
  }
  return specht(partition_literal(s), c.value);
}

K0SigmaElem k0sigma_sum(Scanner& s) { return parse_sum<K0SigmaElem>(s, k0sigma_term); }

template <class Elem>
Elem indexed_basis_term(Scanner& s, char letter) {
  Coefficient c = leading_coefficient(s);
  if (c.explicit_value) s.accept('*');
  if (s.peek() != '[') {
    if (!c.explicit_value) s.fail("expected a basis literal");
    if (sgn(c.value) != 0) s.fail("expected a basis literal");
    return Elem{};
  }
  s.expect('[');
  if (s.peek_raw() != letter) s.fail(std::string("expected '") + letter + "'");
  s.expect(letter);
  const int n = s.small_number();
  s.expect(']');
  return Elem(n, c.value);
}

XPoly xpoly_term(Scanner& s) {
  Coefficient c = leading_coefficient(s);
  const bool starred = s.accept('*');
  if (s.peek() == 'x') {
    s.expect('x');
    return x_power(s.optional_exponent(), c.value);
  }
  if (starred || !c.explicit_value) s.fail("expected a term");
  return x_power(0, c.value);
}

WeylElem weyl_term_parser(Scanner& s) {
  Coefficient c = leading_coefficient(s);
  WeylElem acc = weyl_term(0, 0, c.value);
  bool any = c.explicit_value;
  for (;;) {
    const bool starred = s.accept('*');
    const char next = s.peek();
    if (next == 'x' || next == 'D') {
      s.expect(next);
      const int e = s.optional_exponent();
      acc = weyl_mul(acc, next == 'x' ? weyl_term(e, 0) : weyl_term(0, e));
      any = true;
    } else {
      if (starred) s.fail("expected 'x' or 'D' after '*'");
      break;
    }
  }
  if (!any) s.fail("expected a term");
  return acc;
}

WordCombination word_term(Scanner& s) {
  Coefficient c = leading_coefficient(s);
  OperatorWord word;
  for (;;) {
    const bool starred = s.accept('*');
    IndRes letter;
    if (s.accept_word("Ind")) {
      letter = IndRes::ind;
    } else if (s.accept_word("Res")) {
      letter = IndRes::res;
    } else {
      if (starred) s.fail("expected 'Ind' or 'Res' after '*'");
      break;
    }
    const int e = s.optional_exponent();
    word.insert(word.end(), static_cast<std::size_t>(e), letter);
  }
  if (!c.explicit_value && word.empty()) s.fail("expected a term");
  return WordCombination(word, c.value);
}

}  // namespace

Partition parse_partition(std::string_view text) {
  Scanner s(text);
  Partition p = partition_literal(s);
  s.finish();
  return p;
}

DiffPoly parse_diffpoly(std::string_view text) { return parse_whole<DiffPoly>(text, diffpoly_term); }

namespace {

template <class Poly, class Coeff, class Inner, class Key>
Poly parse_coeff_poly(std::string_view text, Inner inner, Coeff (*constant_of)(const Integer&),
                      const std::vector<std::string_view>& vars, Key make_key) {
  auto term = [&](Scanner& s) {
    Coefficient c = leading_coefficient(s);
    if (c.explicit_value && s.peek() == '*' ) s.accept('*');
    Coeff body;
    if (s.peek() == '(') {
      s.expect('(');
      body = inner(s);
      s.expect(')');
      body *= c.value;
    } else {
      if (!c.explicit_value) s.fail("expected '('");
      body = constant_of(c.value);
    }
    return Poly(make_key(variable_powers(s, vars)), body);
  };
  return parse_whole<Poly>(text, term);
}

K0SigmaElem k0_constant(const Integer& c) { return specht(Partition{}, c); }

}  // namespace

LambdaPoly parse_lambda_poly(std::string_view text) {
  return parse_coeff_poly<LambdaPoly>(text, diffpoly_sum, diffpoly_constant, {"lam"},
                                      [](const std::vector<int>& p) { return p[0]; });
}

BiLambdaPoly parse_bilambda_poly(std::string_view text) {
  return parse_coeff_poly<BiLambdaPoly>(text, diffpoly_sum, diffpoly_constant, {"lam", "mu"},
                                        [](const std::vector<int>& p) { return BiExponent{p[0], p[1]}; });
}

HbarPoly parse_hbar_poly(std::string_view text) {
  return parse_coeff_poly<HbarPoly>(text, diffpoly_sum, diffpoly_constant, {"hbar"},
                                    [](const std::vector<int>& p) { return p[0]; });
}

K0SigmaElem parse_k0sigma(std::string_view text) { return parse_whole<K0SigmaElem>(text, k0sigma_term); }

K0LambdaPoly parse_k0_lambda_poly(std::string_view text) {
  return parse_coeff_poly<K0LambdaPoly>(text, k0sigma_sum, k0_constant, {"lam"},
                                        [](const std::vector<int>& p) { return p[0]; });
}

K0NElem parse_k0n(std::string_view text) {
  return parse_whole<K0NElem>(text, [](Scanner& s) { return indexed_basis_term<K0NElem>(s, 'N'); });
}

G0NElem parse_g0n(std::string_view text) {
  return parse_whole<G0NElem>(text, [](Scanner& s) { return indexed_basis_term<G0NElem>(s, 'L'); });
}

XPoly parse_xpoly(std::string_view text) { return parse_whole<XPoly>(text, xpoly_term); }

WeylElem parse_weyl(std::string_view text) { return parse_whole<WeylElem>(text, weyl_term_parser); }

WordCombination parse_word(std::string_view text) { return parse_whole<WordCombination>(text, word_term); }

}  // namespace vmcat
