#pragma once

// Verification suites behind `forestbound verify`. Every check is an exact
// integer/rational comparison or a certified interval comparison.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "bigreal.hpp"
#include "bounds.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "forest.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "lifts.hpp"
#include "matching.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "report.hpp"

namespace forestbound {

struct VerifyOptions {
  // Random instances per sampled family. The identity suite draws 4x this
  // many random graphs and the lift suite 2x this many Petersen signings.
  std::size_t samples = 50;
  std::uint64_t seed = kDefaultSeed;
  // Largest vertex count for random regular sweeps.
  std::size_t max_vertices = 12;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "heilmann-lieb", "godsil", "comparison",
                                              "bound-chain", "correlation", "lifts"};
  return names;
}

/// Reference values (d, conjecture, matching bound, d - 1/(2d)),
/// 15 significant digits, for d = 4..20.
struct ReferenceRow {
  std::size_t d;
  const char* conjecture;
  const char* matching;
  const char* simple;
};

inline const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows{
      {4, "3.85714285714286", "3.91947904192452", "3.87500000000000"},
      {5, "4.88706270925576", "4.91723641784679", "4.90000000000000"},
      {6, "5.90737240075614", "5.92330714974640", "5.91666666666667"},
      {7, "6.92165915952326", "6.93081266948571", "6.92857142857143"},
      {8, "7.93218265702205", "7.93782732697178", "7.93750000000000"},
      {9, "8.94023598867791", "8.94392512794576", "8.94444444444444"},
      {10, "9.94659007255980", "9.94911825176517", "9.95000000000000"},
      {11, "10.9517282616543", "10.9535296122445", "10.9545454545455"},
      {12, "11.9559676088814", "11.9572931718296", "11.9583333333333"},
      {13, "12.9595242435679", "12.9605264078823", "12.9615384615385"},
      {14, "13.9625503782448", "13.9633255787092", "13.9642857142857"},
      {15, "14.9651562263964", "14.9657677145412", "14.9666666666667"},
      {16, "15.9674235136022", "15.9679140832706", "15.9687500000000"},
      {17, "16.9694141030687", "16.9698135007115", "16.9705882352941"},
      {18, "17.9711756732928", "17.9715050723952", "17.9722222222222"},
      {19, "18.9727455571083", "18.9730203479578", "18.9736842105263"},
      {20, "19.9741533998487", "19.9743849792194", "19.9750000000000"},
  };
  return rows;
}

/// |value - reference| <= 10^-sig * |reference|, i.e. agreement to `sig`
/// significant digits, certified against the enclosure of `value`.
inline bool agrees_to_significant(const BigReal& value, const std::string& reference, std::size_t sig) {
  const BigRational p = parse_decimal(reference);
  const BigRational tol = (p < 0 ? BigRational(-p) : p) / BigRational(pow10(sig));
  const BigReal diff = abs_diff(value, BigReal::exact(p));
  return diff.upper() <= tol;
}

/// Smallest m/1000 with (m/1000)^2 >= 4(max_degree - 1): a rational cover of
/// the interval (-2 sqrt(D-1), 2 sqrt(D-1)).
inline BigRational heilmann_lieb_cover(std::size_t max_deg) {
  const BigInt target = BigInt(4) * (max_deg - 1) * 1000000;
  BigInt m = iroot_floor(target, 2);
  if (m * m < target) ++m;
  return BigRational(m, 1000);
}

namespace detail {

template <typename T>
std::string poly_text(const Polynomial<T>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p.coefficients()[i].str();
  return s + "]";
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t x = seed ^ 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t v : {a, b, c}) {
    x ^= v + 0x9E3779B97F4A7C15ULL + (x << 6U) + (x >> 2U);
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 31U;
  }
  return x;
}

// Random simple graph with at most 8 vertices and 14 edges.
inline Multigraph small_random_graph(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = rng.between(1, std::max<std::size_t>(1, std::min<std::size_t>(8, max_vertices)));
  const std::size_t max_edges = std::min<std::size_t>(14, n * (n - 1) / 2);
  return random_simple_graph(n, rng.between(0, max_edges), rng);
}

struct RegularInstance {
  std::string name;
  Multigraph graph;
  std::size_t d;
};

// K_{d+1} plus `samples` random d-regular graphs for every admissible n.
inline std::vector<RegularInstance> regular_sweep(std::size_t d, std::size_t max_vertices, std::size_t samples,
                                                  std::uint64_t seed) {
  std::vector<RegularInstance> out;
  out.push_back({"K" + std::to_string(d + 1), complete_graph(d + 1), d});
  for (std::size_t n = d + 1; n <= max_vertices; ++n) {
    if ((n * d) % 2 != 0) continue;
    for (std::size_t i = 0; i < samples; ++i) {
      const std::uint64_t s = mix_seed(seed, d, n, i);
      out.push_back({"random_regular(" + std::to_string(d) + "," + std::to_string(n) + ",seed=" +
                         std::to_string(s) + ")",
                     random_regular(d, n, s), d});
    }
  }
  return out;
}

}  // namespace detail

inline VerificationReport verify_identities(const VerifyOptions& opt) {
  VerificationReport report("identities");
  std::vector<NamedGraph> graphs = catalog();
  Rng rng(detail::mix_seed(opt.seed, 1));
  for (std::size_t i = 0; i < 4 * opt.samples; ++i)
    graphs.push_back({"random#" + std::to_string(i), detail::small_random_graph(rng, opt.max_vertices)});

  for (const auto& [name, g] : graphs) {
    const IntPolynomial shifted = poly_shift(r_polynomial(g));
    const IntPolynomial pf = pseudo_forest_polynomial(g);
    report.check("pseudo-forest-identity", name, shifted == pf, detail::poly_text(pf), detail::poly_text(shifted));

    const ForestPolynomial fp = forest_polynomial(g);
    const ForestPolynomial oracle = forest_polynomial_oracle(g);
    report.check("forest-oracle", name, fp == oracle, detail::poly_text(oracle.poly), detail::poly_text(fp.poly));

    bool dominated = true;
    for (std::size_t i = 0; i <= g.num_vertices(); ++i) dominated = dominated && fp.poly[i] <= pf[i];
    report.check("forest-domination", name, dominated, "F_G(z) <= R_G(z+1) coefficientwise",
                 dominated ? "holds" : "violated");

    if (is_connected(g) && g.num_vertices() > 0) {
      const BigInt trees = spanning_tree_count(g);
      const BigInt top = fp.forests_with_edges(g.num_vertices() - 1);
      report.check("matrix-tree", name, trees == top, top.str(), trees.str());
    }
    if (auto d = regular_degree(g); d && *d > 0) {
      const bool same = r_polynomial(g) == r_polynomial_regular(g, *d);
      report.check("r-regular-route", name, same, "equal", same ? "equal" : "differ");
      const BigInt forests = fp.total();
      const BigInt r2 = r_at_two_exact(g, *d);
      report.check("forests-le-r2", name, forests <= r2, "<= " + r2.str(), forests.str(), BigInt(r2 - forests).str());
    }
  }

  const auto cat = catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i; j < cat.size(); ++j) {
      if (cat[i].graph.num_edges() + cat[j].graph.num_edges() > 20) continue;
      const BigInt joint = forest_count(disjoint_union(cat[i].graph, cat[j].graph));
      const BigInt product = forest_count(cat[i].graph) * forest_count(cat[j].graph);
      report.check("multiplicativity", cat[i].name + "+" + cat[j].name, joint == product, product.str(), joint.str());
    }
  }

  for (std::size_t n = 1; n <= 12; ++n) {
    const auto closed = matching_counts_complete(n);
    const auto counted = matching_counts(complete_graph(n));
    report.check("matching-counts-complete", "n=" + std::to_string(n), closed == counted);
  }
  for (std::size_t n = 5; n <= 12; ++n) {
    const BigInt closed = matching_bound_integer(n);
    const BigInt counted = r_at_two_exact(complete_graph(n), n - 1);
    report.check("matching-bound-two-routes", "n=" + std::to_string(n), closed == counted, closed.str(),
                 counted.str());
  }
  return report;
}

inline VerificationReport verify_heilmann_lieb(const VerifyOptions& opt) {
  VerificationReport report("heilmann-lieb");
  std::vector<NamedGraph> graphs = catalog();
  for (std::size_t d = 3; d <= 5; ++d)
    for (const auto& inst : detail::regular_sweep(d, std::min<std::size_t>(opt.max_vertices, 12),
                                                  std::min<std::size_t>(opt.samples, 5), opt.seed))
      graphs.push_back({inst.name, inst.graph});
  for (const auto& [name, g] : graphs) {
    const std::size_t delta = max_degree(g);
    const IntPolynomial mu = matching_polynomial(g);
    // Cauchy bound: every root lies within 1 + max |coefficient|.
    BigInt cauchy = 0;
    for (const auto& c : mu.coefficients()) cauchy = std::max(cauchy, BigInt(abs(c)));
    const BigRational wide(cauchy + 1);
    const std::size_t real = count_real_roots_with_multiplicity(mu, -wide, wide);
    report.check("matching-real-rooted", name, real == g.num_vertices(), std::to_string(g.num_vertices()),
                 std::to_string(real));
    if (delta < 2) continue;
    const BigRational b = heilmann_lieb_cover(delta);
    const std::size_t inside = count_real_roots_with_multiplicity(mu, -b, b);
    report.check("heilmann-lieb-interval", name + ", B=" + b.str(), inside == g.num_vertices(),
                 std::to_string(g.num_vertices()), std::to_string(inside));
  }
  return report;
}

inline VerificationReport verify_godsil(const VerifyOptions&) {
  VerificationReport report("godsil");
  for (const auto& [name, g] : catalog()) {
    if (g.num_vertices() > 10) continue;
    const auto sums = power_sums(matching_polynomial(g), 8);
    for (std::size_t len = 0; len <= 8; ++len) {
      const BigInt walks = total_tree_like_walks(g, len);
      report.check("godsil-walks", name + ", l=" + std::to_string(len), walks == sums[len], sums[len].str(),
                   walks.str());
    }
  }
  return report;
}

inline VerificationReport verify_comparison(const VerifyOptions& opt) {
  VerificationReport report("comparison");
  std::vector<detail::RegularInstance> graphs;
  for (std::size_t d = 2; d <= 5; ++d)
    for (auto& inst : detail::regular_sweep(d, std::min<std::size_t>(opt.max_vertices, 10),
                                            std::min<std::size_t>(opt.samples, 5), opt.seed))
      graphs.push_back(std::move(inst));
  for (const auto& [name, g] : catalog())
    if (auto d = regular_degree(g); d && *d >= 2) graphs.push_back({name, g, *d});

  for (const auto& inst : graphs) {
    const std::size_t d = inst.d;
    const std::size_t v = inst.graph.num_vertices();
    const IntPolynomial mu = matching_polynomial(inst.graph);
    const IntPolynomial mu_k = matching_polynomial(complete_graph(d + 1));
    const auto ps = power_sums(mu, 10);
    const auto pk = power_sums(mu_k, 10);
    for (std::size_t k = 1; k <= 10; ++k) {
      const BigInt lhs = ps[k] * (d + 1);
      const BigInt rhs = pk[k] * v;
      report.check("walk-comparison", inst.name + ", k=" + std::to_string(k), lhs >= rhs, ">= " + rhs.str(),
                   lhs.str(), BigInt(lhs - rhs).str());
    }
    // Any rational a > 2 sqrt(d-1); a = 3 for d = 3.
    BigRational a = d == 3 ? BigRational(3) : heilmann_lieb_cover(d);
    if (a * a <= BigRational(4 * (d - 1))) a += BigRational(1, 1000);
    const BigRational mg = poly_eval_rational(mu, a);
    const BigRational mk = poly_eval_rational(mu_k, a);
    const BigRational lhs = rpow(mg, d + 1);
    const BigRational rhs = rpow(mk, v);
    report.check("log-mu-comparison", inst.name + ", a=" + a.str(), mg > 0 && lhs <= rhs,
                 "mu_G(a)^(d+1) <= mu_K(a)^v", lhs <= rhs ? "holds" : "violated");
  }
  return report;
}

inline VerificationReport verify_bound_chain(const VerifyOptions& opt) {
  VerificationReport report("bound-chain");
  constexpr std::size_t kDigits = 30;

  for (const auto& ref : reference_table()) {
    const BoundRow row = bound_row(ref.d, kDigits);
    const std::string in = "d=" + std::to_string(ref.d);
    report.check("table-conjecture", in, agrees_to_significant(row.c_conj, ref.conjecture, 12), ref.conjecture,
                 to_significant(row.c_conj, 15));
    report.check("table-matching", in, agrees_to_significant(row.c_match, ref.matching, 12), ref.matching,
                 to_significant(row.c_match, 15));
    report.check("table-simple", in, agrees_to_significant(row.c_simple, ref.simple, 12), ref.simple,
                 to_significant(row.c_simple, 15));
    const bool above = ref.d <= 8;
    const bool ok = above ? certainly_greater(row.c_match, row.c_simple) : certainly_less(row.c_match, row.c_simple);
    report.check("simple-bound-crossover", in, ok, above ? "matching > d-1/(2d)" : "matching < d-1/(2d)",
                 to_significant(row.c_match, 15) + " vs " + to_significant(row.c_simple, 15));
  }

  for (std::size_t d = 4; d <= 100; ++d) {
    const auto conj = [d](std::size_t p) { return conjecture_constant(d, p); };
    const auto match = [d](std::size_t p) { return matching_bound_constant(d, p); };
    const auto dd = [d](std::size_t) { return BigReal::exact(BigRational(BigInt(d))); };
    const bool ok = certified_compare(conj, match) < 0 && certified_compare(match, dd) < 0;
    report.check("constant-order", "d=" + std::to_string(d), ok, "conjecture < matching < d");
  }

  report.merge(verify_key_inequality(5, 200));

  {
    const auto e100 = expansion_check(100, ExpansionKind::kConjecture);
    const auto e200 = expansion_check(200, ExpansionKind::kConjecture);
    const BigRational limit = BigRational(10) / rpow(BigRational(100), 4);
    report.check("expansion-remainder", "d=100", e100.difference.upper() < limit, "< 10/d^4",
                 to_significant(e100.difference, 6));
    const BigReal ratio = e200.difference / e100.difference;
    const bool in_band = ratio.lower() > BigRational(1, 32) && ratio.upper() < BigRational(1, 8);
    report.check("expansion-decay", "d=200 vs d=100", in_band, "ratio ~ 1/16", to_significant(ratio, 6));
  }
  for (std::size_t d = 4; d <= 20; ++d) {
    const auto ks = expansion_check(d, ExpansionKind::kKahaleSchulman);
    report.check("kahale-schulman-improvement", "d=" + std::to_string(d),
                 ks.difference.lower() > BigRational(1, 2), "> 1/2", to_significant(ks.difference, 10));
  }
  for (std::size_t d = 3; d <= 20; ++d) {
    const auto tree = [d](std::size_t p) { return mckay_tree_constant(d, p); };
    const auto conj = [d](std::size_t p) { return conjecture_constant(d, p); };
    report.check("tree-vs-forest-constant", "d=" + std::to_string(d), certified_compare(tree, conj) < 0,
                 "mckay < conjecture");
  }

  // Bound chain on regular graphs: F <= R_G(2), R_G(2)^(d+1) <= S^v, F < d^v.
  for (std::size_t d = 3; d <= 6; ++d) {
    const BigInt s = r_at_two_exact(complete_graph(d + 1), d);
    for (const auto& inst : detail::regular_sweep(d, opt.max_vertices, opt.samples, opt.seed)) {
      const std::size_t v = inst.graph.num_vertices();
      const BigInt forests = forest_count(inst.graph);
      const BigInt r2 = r_at_two_exact(inst.graph, d);
      const BigInt dn = ipow(BigInt(d), v);
      report.check("forests-le-r2", inst.name, forests <= r2, "<= " + r2.str(), forests.str(),
                   BigInt(r2 - forests).str());
      report.check("r2-le-complete", inst.name, ipow(r2, d + 1) <= ipow(s, v), "R^(d+1) <= S^v");
      report.check("forests-lt-d-pow-n", inst.name, forests < dn, "< " + dn.str(), forests.str(),
                   BigInt(dn - forests).str());
      if (d == 3) {
        const BigInt trivial = ipow(BigInt(2), inst.graph.num_edges());
        report.check("trivial-d3", inst.name, forests <= trivial && trivial < dn, "<= 2^e < 3^n", forests.str());
      }
    }
  }
  for (std::size_t n = 3; n <= std::max<std::size_t>(opt.max_vertices, 3); ++n) {
    std::vector<NamedGraph> twos{{"C" + std::to_string(n), cycle_graph(n)}};
    for (std::size_t i = 0; i < std::min<std::size_t>(opt.samples, 5); ++i) {
      const std::uint64_t s = detail::mix_seed(opt.seed, 2, n, i);
      twos.push_back({"random_regular(2," + std::to_string(n) + ",seed=" + std::to_string(s) + ")",
                      random_regular(2, n, s)});
    }
    for (const auto& [name, g] : twos) {
      const BigInt forests = forest_count(g);
      const BigInt trivial = ipow(BigInt(2), g.num_edges());
      report.check("trivial-d2", name, forests <= trivial && forests < ipow(BigInt(2), n), "<= 2^e",
                   forests.str());
    }
  }
  return report;
}

inline VerificationReport verify_correlation(const VerifyOptions&) {
  VerificationReport report("correlation");
  for (const auto& [name, g] : catalog()) {
    std::size_t violations = 0;
    for (const auto& r : correlation_scan(g)) {
      if (r.satisfied) continue;
      ++violations;
      report.add({"edge-negative-correlation", name + ", e=" + std::to_string(r.e) + ", f=" + std::to_string(r.f),
                  "N_ef*N <= N_e*N_f",
                  r.with_both.str() + "*" + r.total.str() + " > " + r.with_e.str() + "*" + r.with_f.str(),
                  CheckStatus::kCritical, "", graph_to_json(g)});
    }
    if (violations == 0)
      report.check("edge-negative-correlation", name, true, "no violations",
                   std::to_string(g.num_edges() * (g.num_edges() - 1) / 2) + " pairs satisfied");
  }
  return report;
}

inline VerificationReport verify_lifts(const VerifyOptions& opt) {
  VerificationReport report("lifts");
  auto record_lift = [&](const std::string& name, const Multigraph& g, const SignAssignment& s) {
    const auto c = lift_forest_comparison(g, s);
    if (c.satisfied) {
      report.check("lift-forests", name, true, "<= " + c.lift.str(), c.base_squared.str(),
                   BigInt(c.lift - c.base_squared).str());
    } else {
      nlohmann::json witness = {{"base", graph_to_json(g)}, {"signs", signs_to_json(s)}};
      report.add({"lift-forests", name, "<= " + c.lift.str(), c.base_squared.str(), CheckStatus::kCritical, "",
                  std::move(witness)});
    }
  };

  for (const auto& [name, g] : catalog()) {
    const auto plus = lift_forest_comparison(g, SignAssignment::all(g.num_edges(), 1));
    report.check("lift-all-plus-equality", name, plus.base_squared == plus.lift, plus.base_squared.str(),
                 plus.lift.str());
    if (g.num_edges() > 8) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_edges()); ++mask)
      record_lift(name + ", signs=" + std::to_string(mask), g, SignAssignment::from_mask(g.num_edges(), mask));
  }
  {
    const Multigraph p = petersen();
    Rng rng(detail::mix_seed(opt.seed, 4));
    for (std::size_t i = 0; i < 2 * opt.samples; ++i) {
      const std::uint64_t mask = rng.below(std::uint64_t{1} << p.num_edges());
      record_lift("Petersen, signs=" + std::to_string(mask), p, SignAssignment::from_mask(p.num_edges(), mask));
    }
  }

  for (const auto& [name, g] : catalog()) {
    const auto b = degree_product_bounds(g);
    report.check("degree-plus-one-bound", name, b.forests <= b.prod_degree_plus, "<= " + b.prod_degree_plus.str(),
                 b.forests.str());
  }
  for (std::size_t k = 3; k <= 5; ++k) {
    for (std::size_t r = 1; r <= 6; ++r) {
      const Multigraph g = glued_cycles(k, r);
      const auto b = degree_product_bounds(g);
      const BigInt formula = ipow(ipow(BigInt(2), k) - 1, r);
      const bool predicted = formula > BigInt(2 * r) * ipow(BigInt(2), r * (k - 1));
      const std::string in = "glued(" + std::to_string(k) + "," + std::to_string(r) + ")";
      report.check("glued-forest-count", in, b.forests == formula, formula.str(), b.forests.str());
      report.check("glued-degree-product", in, (b.forests > b.prod_degree) == predicted,
                   predicted ? "F > prod d_v" : "F <= prod d_v",
                   b.forests.str() + " vs " + b.prod_degree.str());
    }
  }
  {
    const auto b = degree_product_bounds(petersen());
    report.check("min-degree-3-evidence", "Petersen", true, "recorded",
                 b.forests <= b.prod_degree ? "F <= prod d_v" : "F > prod d_v");
  }

  struct Climb {
    std::string name;
    Multigraph base;
    std::size_t target;
    std::size_t rounds;
    std::size_t degree;
  };
  const std::vector<Climb> climbs{{"C3", cycle_graph(3), 12, 2, 2},
                                  {"K4", complete_graph(4), 6, 3, 3},
                                  {"Petersen", petersen(), 6, 1, 3}};
  for (const auto& c : climbs) {
    const auto seq = girth_climbing_lift(c.base, c.target, detail::mix_seed(opt.seed, 5), c.rounds);
    std::string girths;
    std::vector<BigInt> forests;
    for (const auto& h : seq.graphs) {
      girths += (girths.empty() ? "" : ",") + std::to_string(girth(h).value_or(0));
      forests.push_back(forest_count(h));
    }
    report.check("girth-climb", c.name + ", target=" + std::to_string(c.target), seq.reached_target,
                 "reached", girths);
    for (std::size_t i = 0; i + 1 < seq.graphs.size(); ++i) {
      const bool mono = root_growth_le(forests[i], seq.graphs[i].num_vertices(), forests[i + 1],
                                       seq.graphs[i + 1].num_vertices());
      report.check("lift-root-monotone", c.name + ", step " + std::to_string(i), mono,
                   "F^(1/v) nondecreasing", forests[i].str() + " -> " + forests[i + 1].str());
    }
    if (c.degree >= 3) {
      const BigReal limit = conjecture_constant(c.degree, 30) + BigReal::exact(BigRational(1, pow10(9)));
      for (std::size_t i = 0; i < seq.graphs.size(); ++i) {
        const BigReal root = bigreal_nth_root(BigRational(forests[i]), seq.graphs[i].num_vertices(), 30);
        report.check("lift-root-below-conjecture", c.name + ", step " + std::to_string(i),
                     certainly_less(root, limit), "< " + to_significant(limit, 12), to_significant(root, 12));
      }
    }
  }
  return report;
}

inline VerificationReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "identities") return verify_identities(opt);
  if (name == "heilmann-lieb") return verify_heilmann_lieb(opt);
  if (name == "godsil") return verify_godsil(opt);
  if (name == "comparison") return verify_comparison(opt);
  if (name == "bound-chain") return verify_bound_chain(opt);
  if (name == "correlation") return verify_correlation(opt);
  if (name == "lifts") return verify_lifts(opt);
  if (name == "all") {
    VerificationReport all("all");
    for (const auto& s : suite_names()) all.merge(run_suite(s, opt));
    return all;
  }
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace forestbound
