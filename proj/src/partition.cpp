#include "vmcat/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "vmcat/errors.hpp"

namespace vmcat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_) {
    if (v <= 0) throw DomainError("partition parts must be positive, got " + std::to_string(v));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  if (!p.empty()) {
    cols.assign(static_cast<std::size_t>(p[0]), 0);
    for (int v : p.parts()) {
      for (int i = 0; i < v; ++i) ++cols[static_cast<std::size_t>(i)];
    }
  }
  return Partition(std::move(cols));
}

std::vector<Partition> addable_results(const Partition& p) {
  const auto& parts = p.parts();
  std::vector<Partition> out;
  for (std::size_t r = 0; r <= parts.size(); ++r) {
    int here = r < parts.size() ? parts[r] : 0;
    if (r == 0 || parts[r - 1] > here) {
      auto grown = parts;
      if (r == parts.size()) {
        grown.push_back(1);
      } else {
        ++grown[r];
      }
      out.emplace_back(std::move(grown));
    }
  }
  return out;
}

std::vector<Partition> removable_results(const Partition& p) {
  const auto& parts = p.parts();
  std::vector<Partition> out;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    int below = r + 1 < parts.size() ? parts[r + 1] : 0;
    if (parts[r] > below) {
      auto shrunk = parts;
      if (--shrunk[r] == 0) shrunk.pop_back();
      out.emplace_back(std::move(shrunk));
    }
  }
  return out;
}

Partition partition_union(const Partition& p, const Partition& q) {
  std::vector<int> merged;
  merged.reserve(p.length() + q.length());
  std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(), q.parts().end(),
             std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

Partition insert_row(const Partition& p, int j) {
  if (j < 1) throw DomainError("cannot insert a row of " + std::to_string(j) + " boxes");
  return partition_union(p, Partition{j});
}

std::vector<std::pair<int, int>> multiplicities(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int v : p.parts()) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

Integer standard_tableaux_count(const Partition& p) {
  // Per-thread memo: counts are pure functions of the shape.
  thread_local std::map<Partition, Integer> memo;
  if (p.empty()) return 1;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  Integer total = 0;
  for (const auto& q : removable_results(p)) total += standard_tableaux_count(q);
  memo.emplace(p, total);
  return total;
}

Integer hook_length_count(const Partition& p) {
  const auto cols = conjugate(p);
  Integer hooks = 1;
  for (std::size_t r = 0; r < p.length(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      int arm = p[r] - c - 1;
      int leg = cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(static_cast<unsigned long>(p.size())) / hooks;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    prefix.push_back(v);
    enumerate(remaining - v, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  enumerate(n, n, prefix, out);
  return out;
}

}  // namespace vmcat
