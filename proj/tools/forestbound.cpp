// forestbound: command-line front end for the forestbound library.
//
// Exit codes: 0 ok, 1 failed check, 2 usage or input error, 3 resource guard,
// 4 conjecture counterexample (CRITICAL) with no failures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <forestbound/forestbound.hpp>

namespace fb = forestbound;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

json coefficients_json(const fb::IntPolynomial& p) { return fb::coefficient_strings(p); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw fb::InputError("cannot write '" + out_path + "'");
  out << text << '\n';
}

json row_json(const fb::BoundRow& r, std::size_t sig) {
  return {{"d", r.d},
          {"conjecture", fb::to_significant(r.c_conj, sig)},
          {"matching_bound", fb::to_significant(r.c_match, sig)},
          {"d_minus_half_inv", fb::to_significant(r.c_simple, sig)},
          {"s_integer", r.s_integer.str()}};
}

json report_json(const fb::VerificationReport& report) { return report.to_json(); }

int finish_report(const fb::VerificationReport& report) {
  std::cout << report_json(report).dump(2) << '\n';
  std::cerr << report.summary_line() << '\n';
  return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact forest counting and forest growth bounds for regular graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph-v1 file");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("--out", gen_out, "Write to this file instead of stdout");
  std::size_t gen_a = 0;
  std::size_t gen_b = 0;
  std::uint64_t gen_seed = fb::kDefaultSeed;
  std::string lift_base;
  std::string lift_signs;
  auto* gen_complete = gen->add_subcommand("complete", "Complete graph K_n");
  gen_complete->add_option("n", gen_a)->required();
  auto* gen_cycle = gen->add_subcommand("cycle", "Cycle C_k");
  gen_cycle->add_option("k", gen_a)->required();
  auto* gen_glued = gen->add_subcommand("glued", "r cycles of length k sharing one vertex");
  gen_glued->add_option("k", gen_a)->required();
  gen_glued->add_option("r", gen_b)->required();
  auto* gen_petersen = gen->add_subcommand("petersen", "Petersen graph");
  auto* gen_random = gen->add_subcommand("random-regular", "Uniform simple d-regular graph");
  gen_random->add_option("d", gen_a)->required();
  gen_random->add_option("n", gen_b)->required();
  gen_random->add_option("--seed", gen_seed);
  auto* gen_lift = gen->add_subcommand("lift", "2-lift of a graph by an edge sign vector");
  gen_lift->add_option("base", lift_base)->required();
  gen_lift->add_option("signs", lift_signs)->required();
  for (auto* sub : {gen_complete, gen_cycle, gen_glued, gen_petersen, gen_random, gen_lift})
    sub->add_option("--out", gen_out, "Write to this file instead of stdout");

  // poly
  auto* poly = app.add_subcommand("poly", "Print polynomial coefficients (ascending, decimal strings)");
  std::string poly_kind;
  std::string poly_file;
  poly->add_option("kind", poly_kind)->required()->check(CLI::IsMember({"matching", "forest", "r", "pseudoforest"}));
  poly->add_option("graph", poly_file)->required();

  // count
  auto* count = app.add_subcommand("count", "Print an exact count");
  std::string count_kind;
  std::string count_file;
  count->add_option("kind", count_kind)->required()->check(CLI::IsMember({"forests", "trees", "r-at-2"}));
  count->add_option("graph", count_file)->required();

  // constants
  auto* constants = app.add_subcommand("constants", "Growth constants for one degree");
  std::size_t const_d = 4;
  std::size_t const_digits = 15;
  constants->add_option("--d", const_d)->required();
  constants->add_option("--digits", const_digits, "Significant digits")->check(CLI::Range(1, 30));

  // table1
  auto* table = app.add_subcommand("table1", "Table of growth constants");
  std::size_t t_min = 4;
  std::size_t t_max = 20;
  std::size_t t_digits = 15;
  std::string t_format = "csv";
  table->add_option("--d-min", t_min);
  table->add_option("--d-max", t_max);
  table->add_option("--digits", t_digits, "Significant digits")->check(CLI::Range(1, 30));
  table->add_option("--format", t_format)->check(CLI::IsMember({"csv", "json"}));

  // inequality
  auto* inequality = app.add_subcommand("inequality", "Exact check of S_n < (n-1)^n");
  std::size_t i_min = 5;
  std::size_t i_max = 73;
  inequality->add_option("--n-min", i_min);
  inequality->add_option("--n-max", i_max);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  fb::VerifyOptions vopt;
  std::vector<std::string> suites = fb::suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--samples", vopt.samples);
  verify->add_option("--seed", vopt.seed);
  verify->add_option("--max-vertices", vopt.max_vertices)->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      fb::Multigraph g;
      if (*gen_complete) g = fb::complete_graph(gen_a);
      else if (*gen_cycle) g = fb::cycle_graph(gen_a);
      else if (*gen_glued) g = fb::glued_cycles(gen_a, gen_b);
      else if (*gen_petersen) g = fb::petersen();
      else if (*gen_random) g = fb::random_regular(gen_a, gen_b, gen_seed);
      else g = fb::two_lift(fb::load_graph(lift_base), fb::load_signs(lift_signs));
      emit(fb::graph_to_json(g).dump(), gen_out);
      return 0;
    }
    if (*poly) {
      const fb::Multigraph g = fb::load_graph(poly_file);
      fb::IntPolynomial p;
      if (poly_kind == "matching") p = fb::matching_polynomial(g);
      else if (poly_kind == "forest") p = fb::forest_polynomial(g).poly;
      else if (poly_kind == "r") p = fb::r_polynomial(g);
      else p = fb::pseudo_forest_polynomial(g);
      std::cout << json{{"kind", poly_kind}, {"coefficients", coefficients_json(p)}}.dump() << '\n';
      return 0;
    }
    if (*count) {
      const fb::Multigraph g = fb::load_graph(count_file);
      fb::BigInt value;
      if (count_kind == "forests") {
        value = fb::forest_count(g);
      } else if (count_kind == "trees") {
        value = fb::spanning_tree_count(g);
      } else if (auto d = fb::regular_degree(g)) {
        value = fb::r_at_two_exact(g, *d);
      } else {
        value = fb::r_polynomial(g).evaluate(fb::BigInt(2));
      }
      std::cout << value.str() << '\n';
      return 0;
    }
    if (*constants) {
      const std::size_t work = const_digits + fb::kRootGuardDigits;
      json row{{"d", const_d}, {"conjecture", fb::to_significant(fb::conjecture_constant(const_d, work), const_digits)},
               {"mckay_tree", fb::to_significant(fb::mckay_tree_constant(const_d, work), const_digits)},
               {"d_minus_half_inv", fb::to_significant(fb::simple_bound(const_d), const_digits)}};
      if (const_d >= 4) {
        row["matching_bound"] = fb::to_significant(fb::matching_bound_constant(const_d, work), const_digits);
        row["s_integer"] = fb::matching_bound_integer(const_d + 1).str();
      }
      std::cout << row.dump() << '\n';
      return 0;
    }
    if (*table) {
      const auto rows = fb::table1(t_min, t_max, fb::kMaxTableDigits);
      if (t_format == "csv") {
        std::cout << "d,conjecture,matching_bound,d_minus_half_inv\n";
        for (const auto& r : rows)
          std::cout << r.d << ',' << fb::to_significant(r.c_conj, t_digits) << ','
                    << fb::to_significant(r.c_match, t_digits) << ',' << fb::to_significant(r.c_simple, t_digits)
                    << '\n';
      } else {
        json out = json::array();
        for (const auto& r : rows) out.push_back(row_json(r, t_digits));
        std::cout << out.dump(2) << '\n';
      }
      return 0;
    }
    if (*inequality) return finish_report(fb::verify_key_inequality(i_min, i_max));
    if (*verify) return finish_report(fb::run_suite(suite, vopt));
  } catch (const fb::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const fb::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fb::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fb::GenerationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
