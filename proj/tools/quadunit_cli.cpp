#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "quadunit/classgroup.hpp"
#include "quadunit/errors.hpp"
#include "quadunit/families.hpp"
#include "quadunit/ideals.hpp"
#include "quadunit/sweeps.hpp"
#include "quadunit/units.hpp"

using nlohmann::json;
using namespace quadunit;

namespace {

// Arguments that parse but make no sense together (exit code 2), as opposed
// to domain errors from the library (exit code 3).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json mpz_json(const mpz_class& z) {
  // numbers wider than 64 bits travel as decimal strings
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

json quadint_json(const QuadInt& x, bool with_d) {
  json j;
  j["u"] = mpz_json(x.u());
  j["v"] = mpz_json(x.v());
  if (with_d) j["d"] = x.d();
  return j;
}

// Malformed integers are command-line errors, reported like CLI11's own
// parse failures: message on stderr, exit code 2.
mpz_class parse_mpz(const std::string& text, const std::string& name) {
  try {
    return mpz_class(text);
  } catch (const std::invalid_argument&) {
    std::cerr << name << " is not an integer: " << text << "\n";
    std::exit(2);
  }
}

json row_json(const FamilyRow& row) {
  json j;
  j["kind"] = family_kind_name(row.kind);
  j["a"] = row.a;
  j["N"] = mpz_json(row.N);
  j["squarefree"] = row.squarefree;
  j["predicted_e"] = row.predicted_e;
  j["observed_e"] = row.observed_e ? json(*row.observed_e) : json(nullptr);
  j["cf_pattern_ok"] = row.cf_pattern_ok ? json(*row.cf_pattern_ok) : json(nullptr);
  j["equivalence_ok"] = row.equivalence_ok ? json(*row.equivalence_ok) : json(nullptr);
  return j;
}

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

const char* kRowColumns[] = {"kind",        "a",          "N",
                             "squarefree",  "predicted_e", "observed_e",
                             "cf_pattern_ok", "equivalence_ok"};

void print_rows_csv(const std::vector<json>& rows) {
  bool first = true;
  for (const char* col : kRowColumns) {
    std::cout << (first ? "" : ",") << col;
    first = false;
  }
  std::cout << "\n";
  for (const json& r : rows) {
    first = true;
    for (const char* col : kRowColumns) {
      std::cout << (first ? "" : ",") << cell(r.at(col));
      first = false;
    }
    std::cout << "\n";
  }
}

void print_rows_md(const std::vector<json>& rows) {
  std::cout << "|";
  for (const char* col : kRowColumns) std::cout << " " << col << " |";
  std::cout << "\n|";
  for (std::size_t i = 0; i < std::size(kRowColumns); ++i) std::cout << " --- |";
  std::cout << "\n";
  for (const json& r : rows) {
    std::cout << "|";
    for (const char* col : kRowColumns) std::cout << " " << cell(r.at(col)) << " |";
    std::cout << "\n";
  }
}

struct Options {
  std::string format = "json";
  std::size_t max_iter = kDefaultMaxSteps;
};

// Runs a command body, wraps the payload (or the error) in the envelope,
// prints it, and returns the exit code.
int run_envelope(const std::string& command, const json& inputs, const Options& opts,
                 const std::function<json()>& body) {
  json env;
  env["command"] = command;
  env["inputs"] = inputs;
  int code = 0;
  try {
    env["result"] = body();
    env["status"] = "ok";
  } catch (const UsageError& ex) {
    env["error"] = ex.what();
    env["status"] = "error";
    code = 2;
  } catch (const DomainError& ex) {
    env["error"] = ex.what();
    env["status"] = "error";
    code = 3;
  } catch (const VerificationError& ex) {
    env["error"] = ex.what();
    env["status"] = "error";
    code = 4;
  } catch (const IterationLimitError& ex) {
    env["error"] = ex.what();
    env["status"] = "error";
    code = 4;
  } catch (const InvariantError& ex) {
    env["error"] = ex.what();
    env["status"] = "error";
    code = 4;
  }
  if (opts.format == "json") {
    std::cout << env.dump(2) << "\n";
  } else if (code != 0) {
    std::cerr << command << ": " << env["error"].get<std::string>() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit index e = [O*:A*] of real quadratic orders, decided three ways"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--max-iter", opts.max_iter, "step cap for continued-fraction expansions")
      ->envname("QUADUNIT_MAX_ITER")
      ->capture_default_str();

  std::string arg_n, arg_p = "0", arg_q = "1";
  std::size_t arg_max_terms = 0;

  auto* cmd_cf = app.add_subcommand("cf", "continued fraction of (P + sqrt(N))/Q");
  cmd_cf->add_option("N", arg_n, "radicand")->required();
  cmd_cf->add_option("--P", arg_p, "numerator shift");
  cmd_cf->add_option("--Q", arg_q, "denominator");
  cmd_cf->add_option("--max-terms", arg_max_terms, "per-call override of --max-iter");

  unsigned long long arg_oracle_bound = 0;
  auto* cmd_index = app.add_subcommand("index", "unit index e of Q(sqrt(N)), N = 1 mod 4");
  cmd_index->add_option("N", arg_n, "radicand")->required();
  auto* oracle_opt =
      cmd_index->add_option("--oracle-bound", arg_oracle_bound,
                            "cross-check odd-Pell by brute force up to this y");

  std::string arg_kind;
  long long arg_a_min = 0, arg_a_max = 0;
  bool arg_verify = false, arg_sf_only = false;
  auto* cmd_family = app.add_subcommand("family", "survey one parametric family");
  cmd_family->add_option("kind", arg_kind, "a2+4 | a2-4 | 4a2+1")->required();
  cmd_family->add_option("--a-min", arg_a_min, "first odd parameter")->required();
  cmd_family->add_option("--a-max", arg_a_max, "last odd parameter")->required();
  cmd_family->add_flag("--verify", arg_verify, "run CF, equivalence and unit checks");
  cmd_family->add_flag("--squarefree-only", arg_sf_only, "drop non-square-free members");

  long long arg_n_ll = 0;
  auto* cmd_classgroup =
      app.add_subcommand("classgroup", "narrow class numbers h+(N), h+(4N) and the kernel order");
  cmd_classgroup->add_option("N", arg_n_ll, "radicand, 5 mod 8")->required();

  std::string arg_sign = "+";
  auto* cmd_ideal = app.add_subcommand("ideal", "ideal identities in Z[sqrt(N)]");
  cmd_ideal->require_subcommand(1);
  auto* ideal_square = cmd_ideal->add_subcommand("square", "[4, sqrt(N)+s]^2 = 2[4, sqrt(N)-s]");
  auto* ideal_principal = cmd_ideal->add_subcommand("principal", "is [4, sqrt(N)+s] principal?");
  auto* ideal_extend = cmd_ideal->add_subcommand("extend", "is the extension to O equal to 2O?");
  for (CLI::App* sub : {ideal_square, ideal_principal, ideal_extend}) {
    sub->add_option("N", arg_n, "radicand")->required();
    sub->add_option("--sign", arg_sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (opts.format != "json" && !cmd_family->parsed()) {
    std::cerr << "--format " << opts.format << " is only available for family\n";
    return 2;
  }

  if (cmd_cf->parsed()) {
    std::size_t cap = arg_max_terms != 0 ? arg_max_terms : opts.max_iter;
    mpz_class N = parse_mpz(arg_n, "N");
    mpz_class P = parse_mpz(arg_p, "P");
    mpz_class Q = parse_mpz(arg_q, "Q");
    json inputs;
    inputs["N"] = mpz_json(N);
    inputs["P"] = mpz_json(P);
    inputs["Q"] = mpz_json(Q);
    inputs["max_terms"] = cap;
    return run_envelope("cf", inputs, opts, [&]() {
      CFExpansion cf = expand(QuadIrr(P, Q, N), cap);
      json res;
      res["preperiod"] = json::array();
      for (const auto& a : cf.preperiod) res["preperiod"].push_back(mpz_json(a));
      res["period"] = json::array();
      for (const auto& a : cf.period) res["period"].push_back(mpz_json(a));
      res["period_length"] = cf.period_length();
      res["cycle_states"] = json::array();
      for (const auto& [sp, sq] : cf.cycle_states)
        res["cycle_states"].push_back(json::array({mpz_json(sp), mpz_json(sq)}));
      return res;
    });
  }

  if (cmd_index->parsed()) {
    mpz_class N = parse_mpz(arg_n, "N");
    json inputs;
    inputs["N"] = mpz_json(N);
    if (*oracle_opt) inputs["oracle_bound"] = arg_oracle_bound;
    return run_envelope("index", inputs, opts, [&]() {
      UnitReport rep = unit_index(N, opts.max_iter);
      json res;
      res["e"] = rep.e;
      res["norm"] = rep.norm_A;
      res["epsilon_A"] = quadint_json(rep.epsilon_A, false);
      res["epsilon_O"] = quadint_json(rep.epsilon_O, true);
      if (rep.odd_pell) {
        res["odd_pell"] = json{{"x", mpz_json(rep.odd_pell->first)},
                               {"y", mpz_json(rep.odd_pell->second)}};
      } else {
        res["odd_pell"] = nullptr;
      }
      json methods;
      methods["parity"] = rep.method_flags.parity;
      methods["cf_equivalence"] =
          rep.method_flags.cf_equivalence ? json(*rep.method_flags.cf_equivalence) : json(nullptr);
      if (*oracle_opt) {
        auto found = odd_pell_oracle(N, arg_oracle_bound);
        bool ok;
        if (found) {
          ok = rep.e == 3 && rep.odd_pell && found->first == rep.odd_pell->first &&
               found->second == rep.odd_pell->second;
        } else {
          // nothing below the bound: consistent unless the true y is within it
          ok = rep.e == 1 || rep.odd_pell->second > mpz_class(static_cast<unsigned long>(arg_oracle_bound));
        }
        methods["oracle"] = ok;
      }
      res["methods"] = methods;
      return res;
    });
  }

  if (cmd_family->parsed()) {
    json inputs;
    inputs["kind"] = arg_kind;
    inputs["a_min"] = arg_a_min;
    inputs["a_max"] = arg_a_max;
    inputs["verify"] = arg_verify;
    inputs["squarefree_only"] = arg_sf_only;

    std::vector<json> table;
    auto body = [&]() {
      auto kind = family_kind_from_name(arg_kind);
      if (!kind) throw UsageError("unknown family kind: " + arg_kind);
      std::vector<FamilyRow> rows;
      if (arg_verify) {
        rows = survey(*kind, arg_a_min, arg_a_max, opts.max_iter);
        if (arg_sf_only) {
          std::erase_if(rows, [](const FamilyRow& r) { return !r.squarefree; });
        }
      } else {
        rows = family_members(*kind, arg_a_min, arg_a_max, arg_sf_only);
      }
      json res;
      res["rows"] = json::array();
      for (const auto& row : rows) {
        json j = row_json(row);
        table.push_back(j);
        res["rows"].push_back(std::move(j));
      }
      return res;
    };
    int code = run_envelope("family", inputs, opts, body);
    if (code == 0 && opts.format == "csv") print_rows_csv(table);
    if (code == 0 && opts.format == "md") print_rows_md(table);
    return code;
  }

  if (cmd_classgroup->parsed()) {
    json inputs;
    inputs["N"] = arg_n_ll;
    return run_envelope("classgroup", inputs, opts, [&]() {
      ClassData cd = kernel_check(arg_n_ll, opts.max_iter);
      UnitReport rep = unit_index(mpz_class(static_cast<long>(arg_n_ll)), opts.max_iter);
      json res;
      res["h_plus_N"] = cd.h_plus_O;
      res["h_plus_4N"] = cd.h_plus_A;
      res["kernel_order"] = cd.kernel_order;
      res["predicted_e"] = cd.predicted_e;
      res["observed_e"] = rep.e;
      return res;
    });
  }

  if (cmd_ideal->parsed()) {
    mpz_class N = parse_mpz(arg_n, "N");
    int sign = (arg_sign == "+") ? 1 : -1;
    std::string sub = ideal_square->parsed()   ? "square"
                      : ideal_principal->parsed() ? "principal"
                                                  : "extend";
    json inputs;
    inputs["subcommand"] = sub;
    inputs["N"] = mpz_json(N);
    inputs["sign"] = arg_sign;
    return run_envelope("ideal", inputs, opts, [&]() {
      json res;
      if (sub == "square") {
        IdealA lhs(1, 4, sign, N);
        IdealA expected(2, 4, -sign, N);
        IdealA prod = ideal_mul(lhs, lhs);
        res["lhs"] = lhs.str() + "^2";
        res["rhs"] = prod.str();
        res["equal"] = (prod == expected);
      } else if (sub == "principal") {
        IdealA ideal(1, 4, sign, N);
        res["ideal"] = ideal.str();
        res["principal"] = is_principal_A(ideal, opts.max_iter);
      } else {
        res["sign"] = arg_sign;
        res["is_2O"] = extension_is_2O(sign, N);
      }
      return res;
    });
  }

  std::cerr << "no command\n";
  return 2;
}
