#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "superweyl/root_datum.hpp"
#include "superweyl/series.hpp"
#include "superweyl/weyl.hpp"

namespace superweyl {

/// (⟨λ+ρ,α⟩) for α in a subset of Π_0.
using Signature = std::vector<std::int32_t>;

struct Factor {
  std::size_t component = 0;  // 0-based; printed as U_{component+1}
  RPoly poly;
  Signature signature;
};

struct NumeratorFactors {
  std::vector<Factor> factors;
  Dominance dominance = Dominance::Yes;
};

/// X[a1].. for Π_0; with `with_odd`, followed by Y[b1].. for the odd simple roots.
std::vector<std::string> x_names(const RootDatum& datum, bool with_odd = false);

/// Throws NotDominant / NotTypical; returns the dominance verdict.
Dominance require_typical_dominant(const RootDatum& datum, const Weight& lambda);
/// Throws NotDominant only.
Dominance require_dominant(const RootDatum& datum, const Weight& lambda);

/// X(w,λ) = e^{w(η)−η} as an exponent vector over Π_0, η = λ+ρ.
Monomial weyl_term(const RootDatum& datum, const WeylElement& w, const Weight& eta);

RPoly numerator(const RootDatum& datum, const Weight& lambda);
NumeratorFactors factor_numerator(const RootDatum& datum, const Weight& lambda);

/// Signature of λ on the given Π_0 indices; throws NonIntegralExponent.
Signature signature(const RootDatum& datum, const Weight& lambda, const std::vector<std::size_t>& subset);
/// Signature over all of Π_0.
Signature full_signature(const RootDatum& datum, const Weight& lambda);
Monomial x_lambda(const RootDatum& datum, const Weight& lambda, const std::vector<std::size_t>& subset);

/// χ_λ = D·U(λ) over the variables of Π, truncated at total degree `bound`.
RPoly normalized_character(const RootDatum& datum, const Weight& lambda, int bound);

RPoly product(const std::vector<RPoly>& polys, std::size_t nvars);

}  // namespace superweyl
