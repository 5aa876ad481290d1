// SPDX-License-Identifier: Apache-2.0
//
// reslab: point counts, continued-fraction calculus, and cohomology tables
// for the resultant-one family over finite fields.
//
// Exit codes: 0 success, 1 methods disagree, 2 malformed input, 3 budget
// exceeded. The enumeration budget defaults to RESLAB_BUDGET when set.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "reslab/calculus.hpp"
#include "reslab/cohom.hpp"
#include "reslab/count.hpp"
#include "reslab/errors.hpp"
#include "reslab/rational.hpp"
#include "reslab/resultant.hpp"

using namespace reslab;
using nlohmann::json;

namespace {

uint64_t default_budget() {
  const char* s = std::getenv("RESLAB_BUDGET");
  if (!s) return kDefaultBudget;
  try {
    return std::stoull(s);
  } catch (...) {
    throw ParseError("RESLAB_BUDGET is not a nonnegative integer");
  }
}

// Accepts "9", "3^2", or "3,2".
Field parse_field(const std::string& text) {
  uint64_t p = 0;
  uint32_t d = 1;
  try {
    if (auto pos = text.find('^'); pos != std::string::npos) {
      p = std::stoull(text.substr(0, pos));
      d = static_cast<uint32_t>(std::stoul(text.substr(pos + 1)));
    } else if (auto sep = text.find(','); sep != std::string::npos) {
      p = std::stoull(text.substr(0, sep));
      d = static_cast<uint32_t>(std::stoul(text.substr(sep + 1)));
    } else {
      uint64_t q = std::stoull(text);
      if (!factor_prime_power(q, p, d)) throw ParseError("q = " + text + " is not a prime power");
    }
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("cannot parse field size '" + text + "'");
  }
  return Field::make(p, d);
}

std::vector<uint64_t> prime_powers_up_to(uint64_t q_max) {
  std::vector<uint64_t> out;
  uint64_t p;
  uint32_t d;
  for (uint64_t q = 2; q <= q_max; ++q)
    if (factor_prime_power(q, p, d)) out.push_back(q);
  return out;
}

Variety parse_variety(const std::string& name) {
  if (name == "res") return Variety::kRes;
  if (name == "mn") return Variety::kMn;
  if (name == "xn") return Variety::kXn;
  if (name == "fn") return Variety::kFn;
  throw ParseError("unknown variety '" + name + "'");
}

// One (n, q) evaluation: every requested method with its count.
std::vector<std::pair<std::string, BigInt>> evaluate(const Field& field, uint32_t n,
                                                     Variety variety, const std::string& method,
                                                     const std::string& x_arg, uint64_t budget,
                                                     unsigned workers, bool tolerate_budget,
                                                     std::string* note) {
  std::vector<std::pair<std::string, BigInt>> counts;
  uint64_t q = field.q();
  bool all = method == "all";
  bool closed_only = variety == Variety::kMn || variety == Variety::kXn;

  if (!x_arg.empty() && (closed_only || method == "divisor" || method == "convolution" ||
                          method == "structured" || method == "lefschetz"))
    throw std::invalid_argument("--x applies to varieties res/fn with --method value, brute or all");

  if (closed_only) {
    BigInt closed = variety == Variety::kMn ? count_mn(n, q) : count_xn(n, q);
    if (method != "brute") counts.emplace_back("closed", closed);
  } else if (x_arg.empty()) {
    if (all || method == "divisor") counts.emplace_back("divisor", count_divisor_form(n, q));
    if (all || method == "convolution")
      counts.emplace_back("convolution", count_convolution_form(n, q));
    if (all || method == "structured") counts.emplace_back("structured", count_structured(n, q));
    if (method == "lefschetz" || (all && std::gcd(q, uint64_t{n}) == 1))
      counts.emplace_back("lefschetz", lefschetz_count(n, q));
  } else if (all || method == "value") {
    counts.emplace_back("value", count_value_x(n, field, field.parse(x_arg)));
  }

  if (all || method == "brute") {
    CountQuery query{n, field, variety};
    if (!x_arg.empty()) query.target = {Target::kUnit, field.parse(x_arg)};
    try {
      counts.emplace_back("brute", brute_force_count(query, budget, workers));
    } catch (const BudgetError& e) {
      if (!all || !tolerate_budget) throw;
      if (note) *note = "brute force skipped: needs " + e.required + " enumerations";
    }
  }
  if (counts.empty()) throw std::invalid_argument("no applicable method selected");
  return counts;
}

bool all_equal(const std::vector<std::pair<std::string, BigInt>>& counts) {
  for (const auto& [name, value] : counts)
    if (value != counts.front().second) return false;
  return true;
}

int run_count(const std::string& q_arg, uint32_t n, const std::string& variety_name,
              const std::string& method, const std::string& x_arg, const std::string& format,
              uint64_t budget, unsigned workers) {
  Field field = parse_field(q_arg);
  std::string note;
  auto counts = evaluate(field, n, parse_variety(variety_name), method, x_arg, budget, workers,
                         /*tolerate_budget=*/true, &note);
  bool agree = all_equal(counts);
  if (format == "json") {
    json methods = json::object();
    for (const auto& [name, value] : counts) methods[name] = value.str();
    json j{{"variety", variety_name}, {"n", n},         {"q", field.q()},
           {"methods", methods},      {"agree", agree}, {"notes", note}};
    if (!x_arg.empty()) j["x"] = x_arg;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "variety " << variety_name << "  n " << n << "  q " << field.q();
    if (!x_arg.empty()) std::cout << "  x " << x_arg;
    std::cout << "\n";
    for (const auto& [name, value] : counts)
      std::cout << name << "\t" << value.str() << "\n";
    if (counts.size() > 1) std::cout << "agree " << (agree ? "yes" : "no") << "\n";
    if (!note.empty()) std::cout << note << "\n";
  }
  return agree ? 0 : 1;
}

int run_verify(uint32_t n_max, uint64_t q_max, const std::string& format, uint64_t budget,
               unsigned workers) {
  bool all_agree = true;
  size_t points = 0;
  if (format == "csv") std::cout << "n,q,method,count\n";
  for (uint64_t q : prime_powers_up_to(q_max)) {
    Field field = parse_field(std::to_string(q));
    for (uint32_t n = 1; n <= n_max; ++n) {
      VerifyRecord rec = verify_point(n, field, budget, workers);
      ++points;
      all_agree = all_agree && rec.agree;
      if (format == "jsonl") {
        std::cout << to_json_line(rec) << "\n";
      } else if (format == "csv") {
        for (const auto& [name, value] : rec.methods)
          std::cout << rec.n << "," << rec.q << "," << name << "," << value.str() << "\n";
      } else {
        std::cout << "n=" << rec.n << " q=" << rec.q << " agree=" << (rec.agree ? "yes" : "no");
        for (const auto& [name, value] : rec.methods)
          std::cout << " " << name << "=" << value.str();
        if (!rec.notes.empty()) std::cout << "  (" << rec.notes << ")";
        std::cout << "\n";
      }
    }
  }
  if (format == "text")
    std::cout << (all_agree ? "verified " : "DISAGREEMENT across ") << points << " grid points\n";
  return all_agree ? 0 : 1;
}

int run_decompose(const std::string& q_arg, const std::string& num_arg,
                  const std::string& den_arg, const std::string& format) {
  Field field = parse_field(q_arg);
  PointedMap map = make_pointed_map(Poly::parse(field, num_arg), Poly::parse(field, den_arg));
  Decomposition dec = cf_decompose(map);
  std::vector<uint64_t> comp = dec.composition();
  int eps = epsilon_sign(comp);
  Fq res = resultant_from_decomposition(dec);
  if (format == "json") {
    json parts = json::array();
    for (const DecompPart& part : dec.parts)
      parts.push_back({{"p", part.p.format()}, {"a", field.format(part.a)}});
    json j{{"q", field.q()},   {"num", map.num.format()}, {"den", map.den.format()},
           {"parts", parts},   {"composition", comp},     {"epsilon", eps},
           {"resultant", field.format(res)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "decomposition over GF(" << field.q() << ") of " << map.num.format() << " / "
              << map.den.format() << "\n";
    for (size_t i = 0; i < dec.parts.size(); ++i)
      std::cout << "part " << i + 1 << ": p = " << dec.parts[i].p.format()
                << "  a = " << field.format(dec.parts[i].a) << "\n";
    std::cout << "composition ";
    for (size_t i = 0; i < comp.size(); ++i) std::cout << (i ? "," : "") << comp[i];
    std::cout << "\nepsilon " << (eps == 1 ? "+1" : "-1") << "\n";
    std::cout << "resultant " << field.format(res) << "\n";
  }
  return 0;
}

int run_betti(uint64_t n, uint64_t q, const std::string& format) {
  if (q == 0) {  // shape only, no Frobenius data
    CohomTable table = betti_table(n);
    if (format == "json") {
      json rows = json::array();
      for (const CohomRow& r : table.rows)
        rows.push_back({{"degree", r.degree},
                        {"a", r.a},
                        {"rank", r.rank},
                        {"weight", r.weight},
                        {"tate_modulus", r.tate_modulus}});
      std::cout << json{{"n", n}, {"rows", rows}}.dump() << "\n";
    } else {
      std::cout << "cohomology of the resultant-one space, n = " << n << "\n";
      std::cout << "degree  a  rank  weight  tate_modulus\n";
      for (const CohomRow& r : table.rows)
        std::cout << r.degree << "  " << r.a << "  " << r.rank << "  " << r.weight << "  "
                  << r.tate_modulus << "\n";
    }
    return 0;
  }
  std::cout << (format == "json" ? betti_json(n, q) + "\n" : betti_text(n, q));
  return 0;
}

int run_table(uint32_t n_max, uint64_t q_max, const std::string& variety_name,
              const std::string& method, const std::string& format, uint64_t budget,
              unsigned workers) {
  Variety variety = parse_variety(variety_name);
  if (format == "csv") std::cout << "n,q,method,count\n";
  for (uint64_t q : prime_powers_up_to(q_max)) {
    Field field = parse_field(std::to_string(q));
    for (uint32_t n = 1; n <= n_max; ++n) {
      bool coprime = std::gcd(q, uint64_t{n}) == 1;
      if (!coprime && (variety == Variety::kXn || method == "lefschetz")) {
        std::cerr << "note: skipping n=" << n << " q=" << q << " (char divides n)\n";
        continue;
      }
      std::string note;
      std::vector<std::pair<std::string, BigInt>> counts;
      try {
        counts = evaluate(field, n, variety, method, "", budget, workers,
                          /*tolerate_budget=*/true, &note);
      } catch (const BudgetError& e) {
        std::cerr << "note: skipping n=" << n << " q=" << q << " (needs " << e.required
                  << " enumerations)\n";
        continue;
      }
      for (const auto& [name, value] : counts) {
        if (format == "csv")
          std::cout << n << "," << q << "," << name << "," << value.str() << "\n";
        else
          std::cout << "n " << n << "  q " << q << "  " << name << "  " << value.str() << "\n";
      }
      if (!note.empty()) std::cerr << "note: n=" << n << " q=" << q << ": " << note << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point counts and continued-fraction calculus for the resultant-one family"};
  app.require_subcommand(1);

  std::string q_arg, variety_name = "res", method = "all", x_arg, format = "text";
  std::string num_arg, den_arg;
  uint32_t n = 1, n_max = 3;
  uint64_t q_max = 7, betti_n = 1, betti_q = 0;
  uint64_t budget = 0;  // 0: use RESLAB_BUDGET or the built-in default
  unsigned workers = 1;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "enumeration budget (default $RESLAB_BUDGET or 1e8)");
    cmd->add_option("--workers", workers, "worker threads for enumeration");
  };

  CLI::App* count = app.add_subcommand("count", "count points of one variety at (n, q)");
  count->add_option("--n", n, "degree parameter")->required();
  count->add_option("--q", q_arg, "field size: integer, p^d, or p,d")->required();
  count->add_option("--variety", variety_name, "res, mn, xn, or fn")
      ->check(CLI::IsMember({"res", "mn", "xn", "fn"}));
  count->add_option("--method", method,
                    "divisor, convolution, structured, lefschetz, value, brute, closed, or all")
      ->check(CLI::IsMember(
          {"divisor", "convolution", "structured", "lefschetz", "value", "brute", "closed", "all"}));
  count->add_option("--x", x_arg, "count pairs with this resultant value instead of 1");
  count->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_budget(count);

  CLI::App* verify = app.add_subcommand("verify", "cross-validate every method on a grid");
  verify->add_option("--n-max", n_max, "largest degree (default 3)");
  verify->add_option("--q-max", q_max, "largest field size (default 7)");
  verify->add_option("--format", format, "text, jsonl, or csv")
      ->check(CLI::IsMember({"text", "jsonl", "csv"}));
  add_budget(verify);

  CLI::App* decompose =
      app.add_subcommand("decompose", "continued-fraction decomposition of a pointed map");
  decompose->add_option("--q", q_arg, "field size")->required();
  decompose->add_option("--num", num_arg, "monic numerator, ascending coefficients")->required();
  decompose->add_option("--den", den_arg, "denominator, ascending coefficients")->required();
  decompose->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* betti = app.add_subcommand("betti", "cohomology table with Frobenius traces");
  betti->add_option("--n", betti_n, "degree parameter")->required();
  betti->add_option("--q", betti_q, "field size for Frobenius data (omit for the bare table)");
  betti->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* table = app.add_subcommand("table", "sweep counts over a grid");
  table->add_option("--n-max", n_max, "largest degree (default 3)");
  table->add_option("--q-max", q_max, "largest field size (default 7)");
  table->add_option("--variety", variety_name, "res, mn, xn, or fn")
      ->check(CLI::IsMember({"res", "mn", "xn", "fn"}));
  table->add_option("--method", method, "as for count")
      ->check(CLI::IsMember(
          {"divisor", "convolution", "structured", "lefschetz", "value", "brute", "closed", "all"}));
  table->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  add_budget(table);

  try {
    app.parse(argc, argv);
    if (budget == 0) budget = default_budget();
    if (count->parsed())
      return run_count(q_arg, n, variety_name, method, x_arg, format, budget, workers);
    if (verify->parsed()) return run_verify(n_max, q_max, format, budget, workers);
    if (decompose->parsed()) return run_decompose(q_arg, num_arg, den_arg, format);
    if (betti->parsed()) return run_betti(betti_n, betti_q, format);
    if (table->parsed())
      return run_table(n_max, q_max, variety_name, method, format, budget, workers);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: needs " << e.required << " enumerations, budget is " << e.budget
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
