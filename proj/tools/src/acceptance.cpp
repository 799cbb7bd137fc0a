#include "superweyl_cli/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "superweyl/atypical.hpp"
#include "superweyl/error.hpp"
#include "superweyl/numerator.hpp"
#include "superweyl/partitions.hpp"
#include "superweyl/unifac.hpp"
#include "superweyl/weight_expr.hpp"

namespace superweyl::cli {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

RootDatum sl(int m, int n) { return build_datum(AlgebraDescriptor::sl(m, n)); }

const char* const kExampleWeights[4] = {
    "omega[1] + 2*omega[2] + 3*omega[3] + tau",
    "omega[1] + 4*omega[2] + 5*omega[3] + tau",
    "omega[1] + 4*omega[2] + 3*omega[3] + tau",
    "omega[1] + 2*omega[2] + 5*omega[3] + tau",
};

// Σ a_i ω_i + c·τ with a_i in [0, max_coeff] and c in [-3, 3], resampled until typical.
Weight random_typical(const RootDatum& d, Rng& rng, int max_coeff) {
  std::uniform_int_distribution<int> coeff(0, max_coeff), shift(-3, 3);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Weight w = scale(Rational(shift(rng)), d.tau());
    for (std::size_t i = 0; i < d.rank0(); ++i) w = add(w, scale(Rational(coeff(rng)), fundamental_weight(d, i)));
    if (is_typical(d, w) && is_dominant_integral(d, w) != Dominance::No) return w;
  }
  fail(ErrorKind::Internal, "no typical weight found for " + d.name());
}

std::vector<RootDatum> builtin_data() {
  std::vector<RootDatum> out;
  for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {4, 1}, {7, 1}, {3, 2}, {4, 3}, {5, 3}}) out.push_back(sl(m, n));
  for (int n : {2, 3, 6}) out.push_back(build_datum(AlgebraDescriptor::osp1(n)));
  for (int n : {1, 2, 3, 6}) out.push_back(build_datum(AlgebraDescriptor::osp2(n)));
  out.push_back(build_datum(AlgebraDescriptor::g3()));
  out.push_back(build_datum(AlgebraDescriptor::f4()));
  return out;
}

void c1(Outcome& o) {
  const RootDatum d = sl(3, 2);
  const std::string a = "1 - X[a1]^2 - X[a2]^3 + X[a1]^5*X[a2]^3 + X[a1]^2*X[a2]^5 - X[a1]^5*X[a2]^5";
  const std::string b = "1 - X[a1]^2 - X[a2]^5 + X[a1]^7*X[a2]^5 + X[a1]^2*X[a2]^7 - X[a1]^7*X[a2]^7";
  const std::string expected[4][2] = {{a, "1 - X[a3]^4"}, {b, "1 - X[a3]^6"}, {b, "1 - X[a3]^4"}, {a, "1 - X[a3]^6"}};
  const auto names = x_names(d);
  for (int k = 0; k < 4; ++k) {
    const auto f = factor_numerator(d, parse_weight(kExampleWeights[k], d));
    o.check(f.factors.size() == 2, "two factors");
    for (int c = 0; c < 2 && c < static_cast<int>(f.factors.size()); ++c) {
      const std::string got = format_poly(f.factors[c].poly, names);
      o.check(got == expected[k][c], "U_" + std::to_string(c + 1) + " of weight " + std::to_string(k + 1) + " = " + got);
    }
  }
  o.detail << "8 factors compared";
}

void c2(Outcome& o) {
  const RootDatum d = sl(3, 2);
  std::vector<Weight> w;
  for (const char* s : kExampleWeights) w.push_back(parse_weight(s, d));
  const MatchReport r = verify_tensor_isomorphism(d, {w[0], w[1]}, {w[2], w[3]});
  o.check(r.products_equal, "products equal");
  o.check(r.weight_sums_equal, "weight sums equal");
  o.check(!r.sigma_hypothesis_holds, "sigma hypothesis false");
  o.check(r.conclusion == Conclusion::CrossMatchedCounterexample, "conclusion");
  o.detail << "conclusion " << conclusion_name(r.conclusion);
}

void c3(Outcome& o) {
  const RootDatum d = sl(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Rational v = d.inner(d.tau(), sub(d.eps_vectors()[i], d.delta_vectors()[j]));
      o.check(v == 5, "(tau, eps_i - delta_j) = " + to_string(v) + " under the invariant form, expected 5");
    }
  o.detail << "6 pairings";
}

void c4(Outcome& o) {
  std::size_t count = 0;
  for (const RootDatum& d : builtin_data()) {
    for (const Root& b : d.simple_roots()) {
      const Rational lhs = d.inner(d.rho(), b.weight);
      const Rational rhs = d.inner(b.weight, b.weight) / 2;
      o.check(lhs == rhs, d.name() + ": (rho,beta) = " + to_string(lhs) + ", expected " + to_string(rhs));
      if (b.isotropic) o.check(lhs == 0, d.name() + ": isotropic simple root");
      ++count;
    }
  }
  o.detail << count << " simple roots";
}

void c5(Outcome& o, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t count = 0;
  for (const RootDatum& d : {sl(3, 2), build_datum(AlgebraDescriptor::osp2(2))}) {
    for (int t = 0; t < 100; ++t) {
      const Weight w = random_typical(d, rng, 4);
      std::vector<RPoly> parts;
      for (const auto& f : factor_numerator(d, w).factors) parts.push_back(f.poly);
      o.check(numerator(d, w) == product(parts, d.rank0()), d.name() + ": " + format_weight(w, d));
      ++count;
    }
  }
  o.detail << count << " weights";
}

bool connected_subset(const RootDatum& d, const std::vector<std::size_t>& s) {
  // depth-first search on the Gram matrix of the subset
  std::vector<bool> seen(s.size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (!seen[v] && d.inner(d.alpha(s[u]).weight, d.alpha(s[v]).weight) != 0) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == s.size();
}

void c6(Outcome& o) {
  std::size_t count = 0;
  for (const RootDatum& d : builtin_data()) {
    const std::size_t n = d.rank0();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      if (s.size() > 6) continue;
      const Rational k = k_partition_counts(even_graph(d, s)).k_value;
      const Rational expected = connected_subset(d, s) ? 1 : 0;
      o.check(k == expected, d.name() + ": k(G) = " + to_string(k) + " on a subset of size " + std::to_string(s.size()));
      ++count;
    }
  }
  o.detail << count << " induced subgraphs";
}

void c7(Outcome& o, std::uint64_t seed) {
  Rng rng(seed + 7);
  const RootDatum d = sl(3, 2);
  for (int t = 0; t < 25; ++t) {
    const Weight w = random_typical(d, rng, 3);
    const auto f = factor_numerator(d, w);
    for (const Factor& fac : f.factors) {
      const auto& comp = d.components()[fac.component];
      const Monomial xl = x_lambda(d, w, comp);
      const int deg = total_degree(xl);
      const RPoly th = theta(neg_log(fac.poly, deg + 2), comp);
      const auto low = lowest_degree(th);
      o.check(low && *low == deg, "lowest degree of Theta(-log U_i)");
      std::size_t at_low = 0;
      for (const auto& [m, c] : th.terms()) at_low += total_degree(m) == deg;
      o.check(at_low == 1 && th.coefficient(xl) == 1, "lowest term is 1*X^lambda(C_i)");
    }
  }
  o.detail << "25 weights";
}

void c8(Outcome& o) {
  const RootDatum d = sl(3, 2);
  std::vector<RPoly> us;
  std::set<Signature> sigs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        Weight w = d.tau();
        const int coeffs[3] = {a, b, c};
        for (std::size_t i = 0; i < 3; ++i) w = add(w, scale(Rational(coeffs[i]), fundamental_weight(d, i)));
        int k = 1;
        while (!is_typical(d, w) && k < 10) {
          w = add(w, d.tau());
          ++k;
        }
        o.check(is_typical(d, w), "typical grid weight");
        sigs.insert(full_signature(d, w));
        us.push_back(numerator(d, w));
      }
  o.check(sigs.size() == 27, "27 distinct signatures");
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j) o.check(!(us[i] == us[j]), "U distinct on the grid");
  o.detail << us.size() << " numerators pairwise distinct";
}

struct AtypicalCase {
  std::string label;
  AtypicalContext ctx;
};

// One weight per requested type, with ω-coefficients chosen from a fixed list.
std::vector<AtypicalCase> atypical_cases(const std::vector<RootDatum>& data) {
  std::vector<AtypicalCase> out;
  for (const RootDatum& d : data) {
    const Family fam = d.descriptor().family;
    for (std::size_t g = 0; g < d.positive_odd().size(); ++g) {
      if (!d.positive_odd()[g].isotropic) continue;
      if (fam == Family::A && d.descriptor().n > 0) {
        // interior types of sl(m+1,n+1) only
        const Weight& r = d.positive_odd()[g].weight;
        bool interior = false;
        for (std::size_t p = 2; p <= static_cast<std::size_t>(d.descriptor().m); ++p)
          for (std::size_t q = 2; q <= static_cast<std::size_t>(d.descriptor().n); ++q)
            interior = interior || r == sub(d.eps_vectors()[p - 1], d.delta_vectors()[q - 1]);
        if (!interior) continue;
      }
      std::optional<Weight> lambda;
      for (int trial = 0; trial < 64 && !lambda; ++trial) {
        std::vector<Rational> c(d.rank0());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (trial >> i) & 1;
        try {
          lambda = singly_atypical_weight(d, c, g);
        } catch (const Error&) {
        }
      }
      ensure(lambda.has_value(), "no singly atypical weight of type g" + std::to_string(g + 1) + " on " + d.name());
      for (bool special : {false, true}) {
        if (special && fam != Family::G3 && fam != Family::F4) continue;
        out.push_back({d.name() + (special ? " special" : "") + " g" + std::to_string(g + 1),
                       make_atypical_context(d, *lambda, special, 3)});
      }
    }
  }
  return out;
}

std::vector<RootDatum> atypical_data() {
  return {sl(3, 1), sl(4, 1), build_datum(AlgebraDescriptor::osp2(2)), build_datum(AlgebraDescriptor::osp2(3)),
          build_datum(AlgebraDescriptor::g3()), build_datum(AlgebraDescriptor::f4()), sl(4, 3)};
}

void c9_c11(Outcome& o9, Outcome& o11) {
  const auto data = atypical_data();
  const auto cases = atypical_cases(data);
  std::set<std::string> families;
  for (const auto& c : cases) {
    const CoefficientValue oracle = coefficient_oracle(c.ctx);
    const CoefficientValue closed = closed_form_coefficient(c.ctx);
    o9.check(closed.tag != FormTag::Enumeration && closed.tag != FormTag::None, c.label + " uses a closed form");
    o9.check(series_equal_to(oracle.value, closed.value, 3), c.label + ": oracle differs from " + closed.form);
    o11.check(!oracle.value.is_zero(), c.label + ": zero oracle coefficient");
    families.insert(c.ctx.datum->name());
  }
  o9.check(families.size() == data.size(), "every datum has a case");
  o9.detail << cases.size() << " cases at T=3";
  o11.detail << cases.size() << " oracle coefficients";
}

void c10(Outcome& o) {
  std::size_t count = 0;
  auto run = [&](const RootDatum& d, std::size_t p, std::size_t q) {
    const F1Report r = coefficient_f1(d, p, q);
    const std::string where = d.name() + " p=" + std::to_string(p) + " q=" + std::to_string(q);
    o.check(r.by_enumeration == 1, where + ": enumeration gives " + to_string(r.by_enumeration));
    o.check(r.by_tree == 1, where + ": k(G_pq) = " + to_string(r.by_tree));
    std::vector<std::uint64_t> tree = r.tree.counts;
    tree.resize(r.r2.size(), 0);
    o.check(tree == r.r2, where + ": r_k^(2) = c_k(G_pq)");
    ++count;
  };
  const RootDatum a = sl(4, 3), b = sl(5, 3);
  for (std::size_t p : {2, 3}) run(a, p, 2);
  for (std::size_t p : {2, 3, 4}) run(b, p, 2);
  o.detail << count << " (p,q) pairs";
}

void c12(Outcome& o, std::uint64_t seed) {
  Rng rng(seed + 12);
  std::size_t count = 0;
  for (const RootDatum& d : {sl(2, 1), sl(3, 2), build_datum(AlgebraDescriptor::osp2(2))}) {
    for (int t = 0; t < 10; ++t) {
      const Weight w = random_typical(d, rng, 3);
      const RPoly chi = normalized_character(d, w, 6);
      for (const auto& [m, c] : chi.terms()) {
        o.check(is_integer(c) && c > 0, d.name() + ": coefficient " + to_string(c) + " in the character of " + format_weight(w, d));
      }
      ++count;
    }
  }
  o.detail << count << " characters";
}

void c13(Outcome& o) {
  SearchOptions opt;
  opt.bound = 5;
  opt.tau_multiple = 1;
  const auto hits = search_counterexamples(sl(3, 2), opt);
  bool found = false;
  const std::vector<std::vector<int>> example = {{1, 2, 3}, {1, 4, 5}, {1, 4, 3}, {1, 2, 5}};
  for (const auto& h : hits) {
    found = found || h.omega_coefficients == example;
    o.check(h.report.products_equal && h.report.weight_sums_equal && h.report.r_equals_s, "hit re-verification");
  }
  o.check(found, "the swapped-signature example among the hits");
  opt.bound = 4;
  const auto none1 = search_counterexamples(sl(3, 1), opt);
  const auto none2 = search_counterexamples(build_datum(AlgebraDescriptor::g3()), opt);
  o.check(none1.empty() && none2.empty(), "connected Pi_0 gives no hits");
  o.detail << hits.size() << " hits on sl(3,2)";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& out) {
  std::vector<CriterionResult> results;
  Outcome o9, o11;
  auto record = [&](int id, const std::string& name, double budget, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.budget = budget;
    r.pass = o.pass && (budget == 0 || r.seconds < budget);
    r.detail = o.detail.str();
    if (o.pass && !r.pass) r.detail += "; over the time budget";
    char line[64];
    std::snprintf(line, sizeof line, "(%.2fs)", r.seconds);
    out << 'C' << id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << name << ' ' << line << ' ' << r.detail << '\n';
    out.flush();
    results.push_back(r);
  };

  record(1, "example-golden-factors", 1, c1);
  record(2, "example-product-identity", 1, c2);
  record(3, "tau-pairing", 0, c3);
  record(4, "weyl-vector-law", 0, c4);
  record(5, "factorization", 30, [&](Outcome& o) { c5(o, seed); });
  record(6, "graph-invariant", 10, c6);
  record(7, "lowest-term", 60, [&](Outcome& o) { c7(o, seed); });
  record(8, "injectivity-grid", 0, c8);
  record(9, "atypical-closed-forms", 120, [&](Outcome& o) {
    try {
      c9_c11(o9, o11);
    } catch (const std::exception& e) {
      o9.pass = o11.pass = false;
      o9.detail << "exception: " << e.what();
      o11.detail << "exception: " << e.what();
    }
    o.pass = o9.pass;
    o.detail << o9.detail.str();
  });
  record(10, "tree-coefficient", 0, c10);
  record(11, "nonzero-coefficient", 0, [&](Outcome& o) {
    o.pass = o11.pass;
    o.detail << o11.detail.str() << " (computed with C9)";
  });
  record(12, "character-positivity", 60, [&](Outcome& o) { c12(o, seed); });
  record(13, "counterexample-search", 120, c13);
  return results;
}

}  // namespace superweyl::cli
