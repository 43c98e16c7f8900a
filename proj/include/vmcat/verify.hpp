#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vmcat/diffpoly.hpp"
#include "vmcat/report.hpp"

namespace vmcat {

/// Optional overrides for a suite's sweep ranges; unset fields use the
/// suite's default.
struct VerifyBounds {
  std::optional<int> max_n;
  std::optional<int> max_j;
  std::optional<int> max_deg;
};

struct SuiteInfo {
  std::string name;
  std::string module;
  std::string description;
  std::function<Report(const VerifyBounds&, const AlgebraCtx&)> run;
};

/// Every structural identity of the engine, addressable by name.
const std::vector<SuiteInfo>& verification_suites();

/// Runs one suite by name, or every suite for "all". Throws
/// std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const VerifyBounds& bounds, const AlgebraCtx& ctx);

/// A random polynomial with up to `max_terms` monomials of degree in
/// [1, max_degree] and coefficients in [-5, 5].
DiffPoly random_diffpoly(std::mt19937_64& rng, int max_degree, int max_terms = 4);

/// All monomials of degree <= max_degree, unit included.
std::vector<Monomial> monomials_up_to(int max_degree);

}  // namespace vmcat
