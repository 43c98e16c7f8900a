#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "vmcat/integer.hpp"

namespace vmcat {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Every constructor normalizes to this canonical form, so equality and
/// ordering are plain lexicographic comparisons of the part lists.
class Partition {
 public:
  Partition() = default;

  /// Sorts `parts` into weakly decreasing order. Throws DomainError if any
  /// part is not positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // number of boxes
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Column lengths: result[i] = #{ parts >= i+1 }.
Partition conjugate(const Partition& p);

/// Partitions obtained by adding one box, ordered by the row of the new box.
std::vector<Partition> addable_results(const Partition& p);

/// Partitions obtained by removing one box, ordered by the row of the box.
std::vector<Partition> removable_results(const Partition& p);

/// Multiset union of parts.
Partition partition_union(const Partition& p, const Partition& q);

/// Adds a row of `j` boxes. Throws DomainError when j < 1.
Partition insert_row(const Partition& p, int j);

/// Distinct part values in decreasing order with their multiplicities.
std::vector<std::pair<int, int>> multiplicities(const Partition& p);

/// Number of standard Young tableaux of shape `p`, via the box-removal
/// recursion f^p = sum over removable q of f^q, f^() = 1.
Integer standard_tableaux_count(const Partition& p);

/// Hook-length formula n! / prod hooks. Independent of the recursion above.
Integer hook_length_count(const Partition& p);

/// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

}  // namespace vmcat
