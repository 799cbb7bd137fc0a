#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superweyl/numerator.hpp"
#include "superweyl/root_datum.hpp"

namespace superweyl {

enum class Side { Lhs, Rhs };

/// U_{component+1} of the index-th weight on one side.
struct FactorRef {
  Side side = Side::Lhs;
  std::size_t index = 0;
  std::size_t component = 0;

  friend bool operator==(const FactorRef&, const FactorRef&) = default;
};

enum class Conclusion {
  UniqueFactorization,
  CrossMatchedCounterexample,
  /// Factors match weight by weight but some weights differ by a vector
  /// orthogonal to Π_0, with equal sums.
  CentralShift,
  /// Products of numerators equal, sums of highest weights differ.
  WeightSumsDiffer,
  ProductsUnequal,
};

struct MatchReport {
  bool products_equal = false;
  bool r_equals_s = false;
  /// Lhs factor ↔ Rhs factor, ordered by component then Lhs index.
  std::vector<std::pair<FactorRef, FactorRef>> pairing;
  /// Lhs factors in the order the minimal-degree peeling removes them.
  std::vector<FactorRef> peeling;
  bool sigma_hypothesis_holds = false;
  /// σ on weights when the hypothesis holds: Lhs index p ↔ Rhs index sigma[p].
  std::vector<std::size_t> sigma;
  bool weight_sums_equal = false;
  Conclusion conclusion = Conclusion::ProductsUnequal;
  std::vector<std::string> notes;
};

std::string_view conclusion_name(Conclusion c);

/// Compares U(λ_1)⋯U(λ_r) with U(μ_1)⋯U(μ_s) and, when equal, pairs the
/// component factors by signature. Throws NotTypical / NotDominant.
MatchReport match_factors(const RootDatum& datum, const std::vector<Weight>& lambdas, const std::vector<Weight>& mus);

/// match_factors plus the notes tying equal characters to equal products.
MatchReport verify_tensor_isomorphism(const RootDatum& datum, const std::vector<Weight>& lambdas,
                                      const std::vector<Weight>& mus);

struct SearchHit {
  std::vector<Weight> lambdas;
  std::vector<Weight> mus;
  /// ω-coefficients of λ_1, λ_2, μ_1, μ_2 and the τ multiple used.
  std::vector<std::vector<int>> omega_coefficients;
  int tau_multiple = 0;
  MatchReport report;
};

struct SearchOptions {
  int bound = 5;
  int tau_multiple = 1;
  int max_tau_multiple = 10;
  std::optional<std::size_t> limit;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Swapped-signature pairs λ = {(A_1,B_1),(A_2,B_2)}, μ = {(A_2,B_1),(A_1,B_2)}
/// with entries in [0, bound], realized as Σ a_i ω_i + kτ. Empty when Π_0
/// is connected.
std::vector<SearchHit> search_counterexamples(const RootDatum& datum, const SearchOptions& options);

}  // namespace superweyl
