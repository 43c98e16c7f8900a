#pragma once

#include <json.hpp>

#include "vmcat/diffpoly.hpp"
#include "vmcat/k0sigma.hpp"
#include "vmcat/lambda_poly.hpp"
#include "vmcat/nilcox.hpp"
#include "vmcat/partition.hpp"
#include "vmcat/report.hpp"

// JSON payloads. Integer coefficients are JSON numbers when they fit in a
// signed 64-bit value and decimal strings otherwise.
//
//   DiffPoly      [{"mono":[orders...], "c":int}]
//   LambdaPoly    [{"lam":k, "coeff":DiffPoly}]
//   BiLambdaPoly  [{"lam":j, "mu":k, "coeff":DiffPoly}]
//   HbarPoly      [{"hbar":k, "coeff":DiffPoly}]
//   Partition     [parts...]
//   K0SigmaElem   [{"partition":[parts...], "c":int}]
//   K0LambdaPoly  [{"lam":k, "coeff":K0SigmaElem}]
//   K0NElem       [{"n":k, "c":int}]       (also G0NElem)
//   XPoly         [{"x":k, "c":int}]
//   WeylElem      [{"x":a, "D":b, "c":int}]
//   WordCombination [{"word":"Ind^3 Res", "c":int}]
//   Report        [{"identity":s, "cases":n, "passed":b, "case":s, "lhs":s, "rhs":s}]
namespace vmcat {

nlohmann::json to_json(const Integer& c);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const DiffPoly& f);
nlohmann::json to_json(const LambdaPoly& p);
nlohmann::json to_json(const BiLambdaPoly& p);
nlohmann::json to_json(const HbarPoly& p);
nlohmann::json to_json(const K0SigmaElem& e);
nlohmann::json to_json(const K0LambdaPoly& p);
nlohmann::json to_json(const K0NElem& e);
nlohmann::json to_json(const G0NElem& e);
nlohmann::json to_json(const XPoly& p);
nlohmann::json to_json(const WeylElem& w);
nlohmann::json to_json(const WordCombination& w);
nlohmann::json to_json(const Report& r);

}  // namespace vmcat
