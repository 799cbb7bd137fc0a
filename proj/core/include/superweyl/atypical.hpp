#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "superweyl/partitions.hpp"
#include "superweyl/root_datum.hpp"
#include "superweyl/series.hpp"
#include "superweyl/unifac.hpp"

namespace superweyl {

constexpr int kDefaultZTruncation = 3;

/// A singly atypical weight together with its type. Z symbols are indexed by
/// positive_odd() of the datum.
struct AtypicalContext {
  const RootDatum* datum = nullptr;
  Weight lambda;
  std::size_t gamma = 0;  // index into positive_odd()
  bool special = false;
  int z_truncation = kDefaultZTruncation;
  Dominance dominance = Dominance::Yes;
};

/// Checks family, single atypicality and dominance. Throws WrongFamily,
/// NotSinglyAtypical, NotDominant.
AtypicalContext make_atypical_context(const RootDatum& datum, const Weight& lambda, bool special = false,
                                      int z_truncation = kDefaultZTruncation);

/// Σ a_i ω_i + c·z with z orthogonal to Π_0 and c fixed by (λ+ρ, γ) = 0.
/// Throws NotSinglyAtypical when another isotropic pairing also vanishes.
Weight singly_atypical_weight(const RootDatum& datum, const std::vector<Rational>& omega_coefficients,
                              std::size_t gamma);

enum class FormTag { None, Enumeration, KRatio, MForm, ASum };

std::string_view form_tag_name(FormTag t);

struct CoefficientValue {
  ZSeries value;
  FormTag tag = FormTag::None;
  /// Human-readable form, e.g. "K(1+Z[g1])/(1+Z[g2]), K=1".
  std::string form;
};

/// Σ_w (−1)^{ℓ(w)} c(w) X(λ,w) with c(w) = 1/(1+Z_{wβ}), or
/// ½(2+Z_{wβ})/(1+Z_{wβ}) for special weights.
ZPoly atypical_numerator(const AtypicalContext& ctx);

/// Coefficient of X^λ in −log of the normalized numerator, by direct expansion.
CoefficientValue coefficient_oracle(const AtypicalContext& ctx);

/// Sum over ordered partitions of Π_0 into totally disconnected blocks.
CoefficientValue coefficient_by_partitions(const AtypicalContext& ctx);

/// The closed forms for sl(m,1), osp(2,2n), G(3), F(4) and the A-sum for
/// sl(m+1,n+1) at interior (p,q). Other cases fall back to
/// coefficient_by_partitions and are tagged Enumeration.
CoefficientValue closed_form_coefficient(const AtypicalContext& ctx);

/// Throws TruncationTooSmall when t exceeds either operand's truncation.
bool series_equal_to(const ZSeries& a, const ZSeries& b, int t);

struct F1Report {
  std::vector<std::uint64_t> r2;  // r2[k-1] = r_k^{(2)}
  Rational by_enumeration;
  PartitionReport tree;
  Rational by_tree;
};

/// Coefficient of f_1 in the A-sum, by counting partitions of Π_0 and by
/// k(G_{p,q}). Throws IndexNotInterior.
F1Report coefficient_f1(const RootDatum& datum, std::size_t p, std::size_t q);

/// f_1, f_2, g_1..g_4, h_1 for type γ_{pq} on sl(m+1,n+1).
std::array<ZSeries, 7> table_functions(const RootDatum& datum, std::size_t p, std::size_t q, int z_truncation);

/// Products of atypical numerators compared at z_truncation; factors matched
/// by X^ν. Throws MixedAtypicalityTypes, NotSinglyAtypical.
MatchReport atypical_match(const RootDatum& datum, const std::vector<Weight>& nus, const std::vector<Weight>& mus,
                           int z_truncation = kDefaultZTruncation);

/// Z[g1].. labels with the roots they stand for, e.g. "eps1-delta1".
std::vector<std::string> odd_root_labels(const RootDatum& datum);

}  // namespace superweyl
