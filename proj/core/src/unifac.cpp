#include "superweyl/unifac.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "superweyl/error.hpp"

namespace superweyl {

std::string_view conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::UniqueFactorization: return "UniqueFactorization";
    case Conclusion::CrossMatchedCounterexample: return "CrossMatchedCounterexample";
    case Conclusion::CentralShift: return "CentralShift";
    case Conclusion::WeightSumsDiffer: return "WeightSumsDiffer";
    case Conclusion::ProductsUnequal: return "ProductsUnequal";
  }
  return "?";
}

namespace {

Weight weight_sum(const RootDatum& datum, const std::vector<Weight>& ws) {
  Weight s = datum.zero();
  for (const Weight& w : ws) s = add(s, w);
  return s;
}

RPoly side_product(const RootDatum& datum, const std::vector<NumeratorFactors>& side) {
  std::vector<RPoly> polys;
  for (const auto& nf : side)
    for (const auto& f : nf.factors) polys.push_back(f.poly);
  return product(polys, datum.rank0());
}

int degree(const Signature& s) {
  int d = 0;
  for (auto e : s) d += e;
  return d;
}

// Pairs Lhs weights with Rhs weights of equal full signature, preferring
// equivalent weights. Returns nullopt when no such bijection exists.
std::optional<std::vector<std::size_t>> match_weights(const RootDatum& datum, const std::vector<Weight>& lambdas,
                                                      const std::vector<Weight>& mus,
                                                      const std::vector<Signature>& ls,
                                                      const std::vector<Signature>& ms) {
  if (lambdas.size() != mus.size()) return std::nullopt;
  const std::size_t n = lambdas.size();
  std::vector<std::size_t> sigma(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!used[q] && datum.equivalent(lambdas[p], mus[q])) {
        sigma[p] = q;
        used[q] = true;
        break;
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (sigma[p] != n) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (!used[q] && ls[p] == ms[q]) {
        sigma[p] = q;
        used[q] = true;
        break;
      }
    }
    if (sigma[p] == n) return std::nullopt;
  }
  return sigma;
}

}  // namespace

MatchReport match_factors(const RootDatum& datum, const std::vector<Weight>& lambdas, const std::vector<Weight>& mus) {
  for (const Weight& w : lambdas) require_typical_dominant(datum, w);
  for (const Weight& w : mus) require_typical_dominant(datum, w);

  MatchReport rep;
  std::vector<NumeratorFactors> lf, rf;
  for (const Weight& w : lambdas) lf.push_back(factor_numerator(datum, w));
  for (const Weight& w : mus) rf.push_back(factor_numerator(datum, w));

  rep.r_equals_s = lambdas.size() == mus.size();
  rep.weight_sums_equal = datum.equivalent(weight_sum(datum, lambdas), weight_sum(datum, mus));
  rep.products_equal = side_product(datum, lf) == side_product(datum, rf);
  if (!rep.products_equal) {
    rep.conclusion = Conclusion::ProductsUnequal;
    return rep;
  }
  ensure(rep.r_equals_s, "equal numerator products with different numbers of factors");

  const std::size_t ncomp = datum.components().size();
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> order(lambdas.size());
    for (std::size_t p = 0; p < order.size(); ++p) order[p] = p;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return degree(lf[a].factors[c].signature) < degree(lf[b].factors[c].signature);
    });
    for (std::size_t p : order) rep.peeling.push_back({Side::Lhs, p, c});
  }

  std::vector<Signature> ls, ms;
  for (const Weight& w : lambdas) ls.push_back(full_signature(datum, w));
  for (const Weight& w : mus) ms.push_back(full_signature(datum, w));
  const auto sigma = match_weights(datum, lambdas, mus, ls, ms);
  rep.sigma_hypothesis_holds = sigma.has_value();

  for (std::size_t c = 0; c < ncomp; ++c) {
    std::vector<bool> used(mus.size(), false);
    for (std::size_t p = 0; p < lambdas.size(); ++p) {
      std::size_t q = mus.size();
      if (sigma) {
        q = (*sigma)[p];
      } else {
        for (std::size_t k = 0; k < mus.size(); ++k) {
          if (!used[k] && rf[k].factors[c].signature == lf[p].factors[c].signature) {
            q = k;
            break;
          }
        }
      }
      ensure(q < mus.size() && !used[q], "component factors do not match up after equal products");
      ensure(lf[p].factors[c].poly == rf[q].factors[c].poly, "paired factors differ");
      used[q] = true;
      rep.pairing.push_back({{Side::Lhs, p, c}, {Side::Rhs, q, c}});
    }
  }

  if (sigma) {
    rep.sigma = *sigma;
    bool pairwise = true;
    for (std::size_t p = 0; p < lambdas.size(); ++p) pairwise = pairwise && datum.equivalent(lambdas[p], mus[(*sigma)[p]]);
    if (pairwise) {
      rep.conclusion = Conclusion::UniqueFactorization;
    } else if (rep.weight_sums_equal) {
      rep.conclusion = Conclusion::CentralShift;
      rep.notes.push_back("paired weights have equal signatures but differ by a vector orthogonal to Pi_0");
    } else {
      rep.conclusion = Conclusion::WeightSumsDiffer;
    }
  } else {
    rep.conclusion = rep.weight_sums_equal ? Conclusion::CrossMatchedCounterexample : Conclusion::WeightSumsDiffer;
  }
  return rep;
}

MatchReport verify_tensor_isomorphism(const RootDatum& datum, const std::vector<Weight>& lambdas,
                                      const std::vector<Weight>& mus) {
  MatchReport rep = match_factors(datum, lambdas, mus);
  rep.notes.push_back(std::string("sum of highest weights ") + (rep.weight_sums_equal ? "equal" : "differ"));
  if (rep.products_equal && rep.weight_sums_equal) {
    rep.notes.push_back("equal numerator products and equal highest weight sums give equal characters of the tensor products");
  }
  return rep;
}

namespace {

std::vector<std::vector<int>> tuples(std::size_t len, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(len, 0);
  while (true) {
    out.push_back(t);
    std::size_t k = len;
    while (k > 0 && t[k - 1] == bound) t[--k] = 0;
    if (k == 0) break;
    ++t[k - 1];
  }
  return out;
}

}  // namespace

std::vector<SearchHit> search_counterexamples(const RootDatum& datum, const SearchOptions& options) {
  const auto& comps = datum.components();
  if (comps.size() < 2) return {};
  if (options.bound < 0) fail(ErrorKind::IndexOutOfRange, "signature bound must be non-negative");

  std::vector<Weight> omega;
  for (std::size_t i = 0; i < datum.rank0(); ++i) omega.push_back(fundamental_weight(datum, i));
  const auto ta = tuples(comps[0].size(), options.bound);
  const auto tb = tuples(comps[1].size(), options.bound);

  auto build = [&](const std::vector<int>& a, const std::vector<int>& b, int k, std::vector<int>& coeffs) {
    coeffs.assign(datum.rank0(), 0);
    for (std::size_t t = 0; t < a.size(); ++t) coeffs[comps[0][t]] = a[t];
    for (std::size_t t = 0; t < b.size(); ++t) coeffs[comps[1][t]] = b[t];
    Weight w = scale(Rational(k), datum.tau());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i]) w = add(w, scale(Rational(coeffs[i]), omega[i]));
    return w;
  };

  auto candidate = [&](std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) -> std::optional<SearchHit> {
    const std::vector<std::pair<std::size_t, std::size_t>> shape = {{i1, j1}, {i2, j2}, {i2, j1}, {i1, j2}};
    for (int k = options.tau_multiple; k <= options.max_tau_multiple; ++k) {
      SearchHit hit;
      hit.tau_multiple = k;
      bool ok = true;
      std::vector<Weight> ws;
      for (auto [a, b] : shape) {
        std::vector<int> coeffs;
        Weight w = build(ta[a], tb[b], k, coeffs);
        if (is_dominant_integral(datum, w) == Dominance::No || !is_typical(datum, w)) {
          ok = false;
          break;
        }
        ws.push_back(std::move(w));
        hit.omega_coefficients.push_back(std::move(coeffs));
      }
      if (!ok) continue;
      hit.lambdas = {ws[0], ws[1]};
      hit.mus = {ws[2], ws[3]};
      hit.report = verify_tensor_isomorphism(datum, hit.lambdas, hit.mus);
      if (hit.report.conclusion != Conclusion::CrossMatchedCounterexample) return std::nullopt;
      return hit;
    }
    return std::nullopt;
  };

  // one work item per (A_1, A_2) pair, merged in order
  std::vector<std::pair<std::size_t, std::size_t>> outer;
  for (std::size_t i1 = 0; i1 < ta.size(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 < ta.size(); ++i2) outer.push_back({i1, i2});
  std::vector<std::vector<SearchHit>> results(outer.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w = next++; w < outer.size(); w = next++) {
      for (std::size_t j1 = 0; j1 < tb.size(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < tb.size(); ++j2)
          if (auto hit = candidate(outer[w].first, outer[w].second, j1, j2)) results[w].push_back(std::move(*hit));
    }
  };
  unsigned nthreads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(std::max<std::size_t>(outer.size(), 1)));
  generate_group(datum, Component::First);
  generate_group(datum, Component::Second);
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = outer.size();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::vector<SearchHit> hits;
  for (auto& r : results) {
    for (auto& h : r) {
      if (options.limit && hits.size() >= *options.limit) return hits;
      hits.push_back(std::move(h));
    }
  }
  return hits;
}

}  // namespace superweyl
