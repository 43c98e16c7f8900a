#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "vmcat/combination.hpp"
#include "vmcat/integer.hpp"

namespace vmcat {

/// Session-wide parameters of the Virasoro-Magri bracket.
struct AlgebraCtx {
  Integer central_charge = 0;
};

/// A monomial in the generators d^k L, stored as the multiset of derivative
/// orders in weakly decreasing order. The empty multiset is the unit.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> orders);
  Monomial(std::initializer_list<int> orders) : Monomial(std::vector<int>(orders)) {}

  static Monomial generator(int order) { return Monomial{order}; }

  const std::vector<int>& orders() const { return orders_; }
  bool is_unit() const { return orders_.empty(); }
  std::size_t factor_count() const { return orders_.size(); }
  int exponent_of(int order) const;

  /// The monomial with one factor of `order` removed (precondition: present).
  Monomial without(int order) const;
  /// The monomial with one factor of `order` added.
  Monomial with(int order) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> orders_;
};

/// sum of (order + 1): the grading under which degree-n monomials
/// correspond to partitions of n.
int degree(const Monomial& m);

/// sum of (order + 2): the L_0 eigenvalue. Zero on the unit.
int conformal_weight(const Monomial& m);

struct DiffPolyTag;
/// Integer-coefficient polynomial in the generators d^k L.
using DiffPoly = Combination<Monomial, Integer, DiffPolyTag>;

DiffPoly constant(const Integer& c);
DiffPoly generator(int order, const Integer& c = 1);
DiffPoly monomial(const Monomial& m, const Integer& c = 1);

DiffPoly mul(const DiffPoly& f, const DiffPoly& g);
inline DiffPoly operator*(const DiffPoly& f, const DiffPoly& g) { return mul(f, g); }

/// The total derivative: Leibniz extension of d(d^k L) = d^{k+1} L.
DiffPoly derive(const DiffPoly& f);
DiffPoly derive(const DiffPoly& f, int times);

/// Formal partial derivative with respect to the generator d^order L.
DiffPoly partial_wrt(const DiffPoly& f, int order);

/// Distinct generator orders that occur in some monomial of `f`.
std::vector<int> generator_orders(const DiffPoly& f);

/// Largest degree of a monomial of `f` (0 for the zero polynomial).
int max_degree(const DiffPoly& f);

/// All monomials of the given degree.
std::vector<Monomial> monomials_of_degree(int n);

}  // namespace vmcat
