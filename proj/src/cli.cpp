#include "vmcat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "vmcat/bracket.hpp"
#include "vmcat/errors.hpp"
#include "vmcat/json_io.hpp"
#include "vmcat/k0sigma.hpp"
#include "vmcat/nilcox.hpp"
#include "vmcat/text.hpp"
#include "vmcat/verify.hpp"
#include "vmcat/zhu.hpp"

namespace vmcat {

namespace {

using nlohmann::json;

// Which grammar an operand is written in.
enum class Kind { diffpoly, k0sigma, k0n, g0n, weyl };

Kind classify(const std::string& text) {
  if (text.find("[N") != std::string::npos) return Kind::k0n;
  if (text.find("[L") != std::string::npos) return Kind::g0n;
  if (text.find('[') != std::string::npos) return Kind::k0sigma;
  if (text.find_first_of("xD") != std::string::npos) return Kind::weyl;
  return Kind::diffpoly;
}

struct Result {
  std::string type;
  std::string text;
  json value;
};

template <class T>
Result make_result(const std::string& type, const T& v) {
  return {type, format(v), to_json(v)};
}

struct Options {
  std::string charge_text = "0";
  Integer charge = 0;
  std::string format = "text";
  std::string suite = "all";
  std::optional<int> max_n, max_j, max_deg;
  std::vector<std::string> operands;
  int index = 0;
};

// Operand positions of a parse error are reported relative to the operand.
template <class Parser>
auto parse_operand(Parser parser, const std::string& text, const char* role) {
  try {
    return parser(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(role) + " '" + text + "': " + e.message(), e.position());
  }
}

DiffPoly diffpoly_operand(const std::string& text, const char* role) {
  if (classify(text) == Kind::k0sigma) return phi_sigma(parse_operand(parse_k0sigma, text, role));
  return parse_operand(parse_diffpoly, text, role);
}

Result dispatch(const std::string& verb, const Options& o, const AlgebraCtx& ctx) {
  const auto& args = o.operands;
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw CLI::ValidationError(verb, "expected " + std::to_string(n) + " operand(s), got " +
                                           std::to_string(args.size()));
    }
  };

  if (verb == "bracket") {
    need(2);
    if (classify(args[0]) == Kind::k0sigma && classify(args[1]) == Kind::k0sigma) {
      return make_result("k0_lambda_poly", lambda_bracket_k0(parse_operand(parse_k0sigma, args[0], "first operand"),
                                                             parse_operand(parse_k0sigma, args[1], "second operand"),
                                                             ctx));
    }
    return make_result("lambda_poly", bracket_master(diffpoly_operand(args[0], "first operand"),
                                                     diffpoly_operand(args[1], "second operand"), ctx));
  }
  if (verb == "nprod") {
    need(2);
    return make_result("diffpoly", nth_product(diffpoly_operand(args[0], "first operand"),
                                               diffpoly_operand(args[1], "second operand"), o.index, ctx));
  }
  if (verb == "mul") {
    need(2);
    switch (classify(args[0])) {
      case Kind::k0sigma:
        return make_result("k0sigma", mul(parse_operand(parse_k0sigma, args[0], "first operand"),
                                          parse_operand(parse_k0sigma, args[1], "second operand")));
      case Kind::k0n:
        return make_result("k0n", mul(parse_operand(parse_k0n, args[0], "first operand"),
                                      parse_operand(parse_k0n, args[1], "second operand")));
      case Kind::g0n:
        return make_result("g0n", mul(parse_operand(parse_g0n, args[0], "first operand"),
                                      parse_operand(parse_g0n, args[1], "second operand")));
      case Kind::weyl:
        return make_result("weyl", weyl_mul(parse_operand(parse_weyl, args[0], "first operand"),
                                            parse_operand(parse_weyl, args[1], "second operand")));
      case Kind::diffpoly:
        break;
    }
    return make_result("diffpoly", mul(parse_operand(parse_diffpoly, args[0], "first operand"),
                                       parse_operand(parse_diffpoly, args[1], "second operand")));
  }
  if (verb == "der") {
    need(1);
    return make_result("diffpoly", derive(parse_operand(parse_diffpoly, args[0], "operand")));
  }
  if (verb == "pjind") {
    need(1);
    return make_result("k0sigma", pj_ind(parse_operand(parse_k0sigma, args[0], "operand"), o.index));
  }
  if (verb == "nabla") {
    need(1);
    return make_result("k0sigma", nabla(parse_operand(parse_k0sigma, args[0], "operand")));
  }
  if (verb == "ind" || verb == "res") {
    need(1);
    const bool up = verb == "ind";
    switch (classify(args[0])) {
      case Kind::k0n: {
        auto e = parse_operand(parse_k0n, args[0], "operand");
        return make_result("k0n", up ? ind(e) : res(e));
      }
      case Kind::g0n: {
        auto e = parse_operand(parse_g0n, args[0], "operand");
        return make_result("g0n", up ? ind(e) : res(e));
      }
      default: {
        auto e = parse_operand(parse_k0sigma, args[0], "operand");
        return make_result("k0sigma", up ? ind(e) : res(e));
      }
    }
  }
  if (verb == "zhu") {
    need(1);
    return make_result("xpoly", zhu_h(diffpoly_operand(args[0], "operand")));
  }
  if (verb == "qmap") {
    need(1);
    return make_result("xpoly", q_map(diffpoly_operand(args[0], "operand")));
  }
  if (verb == "quantize") {
    need(1);
    if (classify(args[0]) == Kind::k0sigma) {
      const auto word = psi1(parse_operand(parse_k0sigma, args[0], "operand"), ctx);
      const auto weyl = i_map(word);
      return {"quantization", format(word) + " -> " + format(weyl),
              json{{"word", to_json(word)}, {"weyl", to_json(weyl)}}};
    }
    return make_result("weyl", psi2(parse_operand(parse_diffpoly, args[0], "operand"), ctx));
  }
  if (verb == "phi") {
    need(1);
    switch (classify(args[0])) {
      case Kind::k0sigma:
        return make_result("diffpoly", phi_sigma(parse_operand(parse_k0sigma, args[0], "operand")));
      case Kind::k0n:
        return make_result("xpoly", phi_n(parse_operand(parse_k0n, args[0], "operand")));
      case Kind::weyl:
        return make_result("k0n", phi_n_inv(parse_operand(parse_xpoly, args[0], "operand")));
      default:
        return make_result("k0sigma", phi_sigma_inv(parse_operand(parse_diffpoly, args[0], "operand")));
    }
  }
  if (verb == "count-syt") {
    need(1);
    const Integer count = standard_tableaux_count(parse_operand(parse_partition, args[0], "operand"));
    return {"integer", count.get_str(), to_json(count)};
  }
  throw std::logic_error("unhandled verb " + verb);
}

void emit(std::ostream& out, const Options& o, const std::string& verb, const Result& r) {
  if (o.format == "json") {
    json doc = {{"verb", verb},
                {"charge", to_json(o.charge)},
                {"result", {{"type", r.type}, {"value", r.value}, {"text", r.text}}}};
    out << doc.dump() << '\n';
  } else {
    out << r.text << '\n';
  }
}

int run_verify(std::ostream& out, const Options& o, const AlgebraCtx& ctx) {
  const VerifyBounds bounds{o.max_n, o.max_j, o.max_deg};
  const Report report = run_suite(o.suite, bounds, ctx);
  const bool ok = all_passed(report);
  if (o.format == "json") {
    json doc = {{"verb", "verify"},
                {"charge", to_json(o.charge)},
                {"result", {{"type", "report"}, {"suite", o.suite}, {"passed", ok}, {"value", to_json(report)}}}};
    out << doc.dump() << '\n';
  } else {
    for (const auto& c : report) {
      out << (c.passed ? "PASS " : "FAIL ") << c.identity << " (" << c.cases << " cases)";
      if (!c.passed) out << "\n  case: " << c.failing_case << "\n  lhs:  " << c.lhs << "\n  rhs:  " << c.rhs;
      out << '\n';
    }
    out << (ok ? "all identities hold" : "verification FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int parse_index(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("index '" + text + "' is not an integer", 0);
  }
  if (used != text.size()) throw ParseError("index '" + text + "' is not an integer", used);
  return value;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Virasoro-Magri Poisson vertex algebra and its categorification"};
  app.require_subcommand(1, 1);

  Options o;
  // Shared flags are accepted before or after the verb.
  auto add_common = [&o](CLI::App& a) {
    a.add_option("--charge", o.charge_text, "integer central charge c");
    a.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  add_common(app);

  struct Verb {
    const char* name;
    const char* help;
    int operands;
    bool indexed;
  };
  const std::vector<Verb> verbs = {
      {"bracket", "lambda-bracket {f_lam g} of two differential polynomials or K0 elements", 2, false},
      {"nprod", "n-th product f_(n) g", 2, true},
      {"mul", "product in V_Z, K0(Sigma), K0(N), G0(N) or the Weyl algebra", 2, false},
      {"der", "total derivative", 1, false},
      {"pjind", "P^j Ind on K0(Sigma)", 1, true},
      {"nabla", "the derivation nabla on K0(Sigma)", 1, false},
      {"ind", "induction on K0(Sigma), K0(N) or G0(N)", 1, false},
      {"res", "restriction on K0(Sigma), K0(N) or G0(N)", 1, false},
      {"zhu", "Zhu_H map to Z[x]", 1, false},
      {"qmap", "quotient map q to Z[x]", 1, false},
      {"quantize", "psi2 of a differential polynomial, or i o psi1 of a K0 element (charge 0)", 1, false},
      {"phi", "phi_Sigma / phi_N and inverses, chosen by operand syntax", 1, false},
      {"count-syt", "number of standard Young tableaux of a partition", 1, false},
  };
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    add_common(*sub);
    // Operands are taken verbatim; CLI11's own positional handling would
    // rewrite bracketed partition literals such as [5,2,1].
    sub->allow_extras();
    std::string usage = std::to_string(v.operands) + " operand expression(s)";
    if (v.indexed) usage += " followed by an integer index";
    sub->footer("Operands: " + usage);
  }
  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  add_common(*verify);
  verify->add_option("--suite", o.suite, "suite name or 'all'");
  verify->add_option("--max-n", o.max_n, "largest partition size / basis index");
  verify->add_option("--max-j", o.max_j, "largest row length / generator index");
  verify->add_option("--max-deg", o.max_deg, "largest degree");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitParseError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  if (!std::regex_match(o.charge_text, std::regex("[+-]?[0-9]+")) ||
      o.charge.set_str(o.charge_text[0] == '+' ? o.charge_text.substr(1) : o.charge_text, 10) != 0) {
    err << "usage error: --charge expects an integer, got '" << o.charge_text << "'\n";
    return kExitParseError;
  }
  const AlgebraCtx ctx{o.charge};
  try {
    if (verb == "verify") return run_verify(out, o, ctx);
    o.operands = sub->remaining();
    for (const auto& operand : o.operands) {
      if (operand.rfind("--", 0) == 0) throw CLI::ValidationError(verb, "unknown flag " + operand);
    }
    for (const auto& v : verbs) {
      if (verb != v.name || !v.indexed) continue;
      if (o.operands.empty()) throw CLI::ValidationError(verb, "missing integer index");
      o.index = parse_index(o.operands.back());
      o.operands.pop_back();
    }
    emit(out, o, verb, dispatch(verb, o, ctx));
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace vmcat
