#include "vmcat/json_io.hpp"

#include "vmcat/text.hpp"

namespace vmcat {

using nlohmann::json;

json to_json(const Integer& c) {
  if (mpz_fits_slong_p(c.get_mpz_t())) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const DiffPoly& f) {
  json out = json::array();
  for (const auto& [m, c] : f) out.push_back({{"mono", m.orders()}, {"c", to_json(c)}});
  return out;
}

json to_json(const LambdaPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p) out.push_back({{"lam", e}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const BiLambdaPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p) out.push_back({{"lam", e.lam}, {"mu", e.mu}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const HbarPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p) out.push_back({{"hbar", e}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const K0SigmaElem& e) {
  json out = json::array();
  for (const auto& [mu, c] : e) out.push_back({{"partition", mu.parts()}, {"c", to_json(c)}});
  return out;
}

json to_json(const K0LambdaPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p) out.push_back({{"lam", e}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const K0NElem& e) {
  json out = json::array();
  for (const auto& [n, c] : e) out.push_back({{"n", n}, {"c", to_json(c)}});
  return out;
}

json to_json(const G0NElem& e) {
  json out = json::array();
  for (const auto& [n, c] : e) out.push_back({{"n", n}, {"c", to_json(c)}});
  return out;
}

json to_json(const XPoly& p) {
  json out = json::array();
  for (const auto& [n, c] : p) out.push_back({{"x", n}, {"c", to_json(c)}});
  return out;
}

json to_json(const WeylElem& w) {
  json out = json::array();
  for (const auto& [m, c] : w) out.push_back({{"x", m.x}, {"D", m.d}, {"c", to_json(c)}});
  return out;
}

json to_json(const WordCombination& w) {
  json out = json::array();
  for (const auto& [word, c] : w) {
    out.push_back({{"word", format(WordCombination(word, 1))}, {"c", to_json(c)}});
  }
  return out;
}

json to_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r) {
    out.push_back({{"identity", c.identity},
                   {"cases", c.cases},
                   {"passed", c.passed},
                   {"case", c.failing_case},
                   {"lhs", c.lhs},
                   {"rhs", c.rhs}});
  }
  return out;
}

}  // namespace vmcat
