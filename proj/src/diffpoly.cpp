#include "vmcat/diffpoly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "vmcat/errors.hpp"
#include "vmcat/partition.hpp"

namespace vmcat {

Monomial::Monomial(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int k : orders_) {
    if (k < 0) throw DomainError("negative derivative order " + std::to_string(k));
  }
  std::sort(orders_.begin(), orders_.end(), std::greater<>());
}

int Monomial::exponent_of(int order) const {
  return static_cast<int>(std::count(orders_.begin(), orders_.end(), order));
}

Monomial Monomial::without(int order) const {
  Monomial m = *this;
  auto it = std::find(m.orders_.begin(), m.orders_.end(), order);
  if (it != m.orders_.end()) m.orders_.erase(it);
  return m;
}

Monomial Monomial::with(int order) const {
  Monomial m = *this;
  auto pos = std::lower_bound(m.orders_.begin(), m.orders_.end(), order, std::greater<>());
  m.orders_.insert(pos, order);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.orders_.reserve(a.orders_.size() + b.orders_.size());
  std::merge(a.orders_.begin(), a.orders_.end(), b.orders_.begin(), b.orders_.end(),
             std::back_inserter(m.orders_), std::greater<>());
  return m;
}

int degree(const Monomial& m) {
  int d = 0;
  for (int k : m.orders()) d += k + 1;
  return d;
}

int conformal_weight(const Monomial& m) {
  int w = 0;
  for (int k : m.orders()) w += k + 2;
  return w;
}

DiffPoly constant(const Integer& c) { return DiffPoly(Monomial{}, c); }
DiffPoly generator(int order, const Integer& c) { return DiffPoly(Monomial::generator(order), c); }
DiffPoly monomial(const Monomial& m, const Integer& c) { return DiffPoly(m, c); }

DiffPoly mul(const DiffPoly& f, const DiffPoly& g) {
  DiffPoly out;
  for (const auto& [mf, cf] : f) {
    for (const auto& [mg, cg] : g) out.add_term(mf * mg, cf * cg);
  }
  return out;
}

DiffPoly derive(const DiffPoly& f) {
  DiffPoly out;
  for (const auto& [m, c] : f) {
    const auto& orders = m.orders();
    for (std::size_t i = 0; i < orders.size();) {
      int k = orders[i];
      std::size_t j = i;
      while (j < orders.size() && orders[j] == k) ++j;
      Integer mult = static_cast<long>(j - i);
      out.add_term(m.without(k).with(k + 1), c * mult);
      i = j;
    }
  }
  return out;
}

DiffPoly derive(const DiffPoly& f, int times) {
  DiffPoly out = f;
  for (int i = 0; i < times && !out.empty(); ++i) out = derive(out);
  return out;
}

DiffPoly partial_wrt(const DiffPoly& f, int order) {
  DiffPoly out;
  for (const auto& [m, c] : f) {
    int e = m.exponent_of(order);
    if (e > 0) out.add_term(m.without(order), c * e);
  }
  return out;
}

std::vector<int> generator_orders(const DiffPoly& f) {
  std::set<int> seen;
  for (const auto& [m, c] : f) seen.insert(m.orders().begin(), m.orders().end());
  return {seen.begin(), seen.end()};
}

int max_degree(const DiffPoly& f) {
  int d = 0;
  for (const auto& [m, c] : f) d = std::max(d, degree(m));
  return d;
}

std::vector<Monomial> monomials_of_degree(int n) {
  std::vector<Monomial> out;
  for (const auto& p : partitions_of(n)) {
    std::vector<int> orders;
    orders.reserve(p.length());
    for (int part : p.parts()) orders.push_back(part - 1);
    out.emplace_back(std::move(orders));
  }
  return out;
}

}  // namespace vmcat
