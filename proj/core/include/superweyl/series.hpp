#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superweyl/rational.hpp"

namespace superweyl {

/// Dense exponent vector; index k is the k-th variable of the ring.
using Monomial = std::vector<std::int32_t>;

int total_degree(const Monomial& m);
bool is_unit(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
/// Sorted indices of nonzero exponents.
std::vector<std::size_t> mono_support(const Monomial& m);

/// Ordering used for all printed output: exponents compared from the last
/// variable down to the first.
struct ColexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Truncated power series in independent commuting symbols Z_0..Z_{n-1}.
/// Terms of total degree above the truncation are dropped.
class ZSeries {
 public:
  ZSeries() = default;
  ZSeries(std::size_t nsyms, int truncation) : nsyms_(nsyms), trunc_(truncation) {}

  static ZSeries constant(std::size_t nsyms, int truncation, const Rational& c);
  /// c·Z_k
  static ZSeries symbol(std::size_t nsyms, int truncation, std::size_t k, const Rational& c = 1);

  std::size_t nsyms() const { return nsyms_; }
  int truncation() const { return trunc_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Multiplicative inverse; throws ConstantTermNotOne when the constant term is 0.
  ZSeries inverse() const;
  ZSeries scaled(const Rational& c) const;
  /// Copy with terms re-truncated at min(truncation, t).
  ZSeries truncated(int t) const;
  /// Substitutes Z_k -> 0 for every k.
  Rational at_zero() const { return constant_term(); }

  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator-(const ZSeries& a) { return a.scaled(-1); }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.terms_ == b.terms_; }

 private:
  void check_ring(const ZSeries& o) const;

  std::size_t nsyms_ = 0;
  int trunc_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// (1 + Z_k) and its inverse as truncated series.
ZSeries one_plus(std::size_t nsyms, int truncation, std::size_t k, const Rational& c = 1);

inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const ZSeries& c) { return c.is_zero(); }

/// Optional total-degree bound plus optional per-variable exponent caps.
struct Truncation {
  std::optional<int> total;
  std::vector<std::int32_t> caps;

  bool admits(const Monomial& m) const;
  static Truncation combine(const Truncation& a, const Truncation& b);
};

/// Sparse polynomial / truncated power series in X variables with
/// coefficients in Rational or ZSeries.
template <class C>
class Poly {
 public:
  Poly() = default;
  Poly(std::size_t nvars, C zero, Truncation trunc = {})
      : nvars_(nvars), zero_(std::move(zero)), trunc_(std::move(trunc)) {}

  static Poly constant(std::size_t nvars, const C& zero, const C& c, Truncation trunc = {});
  /// Monomial with coefficient c.
  static Poly term(const Monomial& m, const C& zero, const C& c, Truncation trunc = {});

  std::size_t nvars() const { return nvars_; }
  const C& zero() const { return zero_; }
  const Truncation& truncation() const { return trunc_; }
  const std::map<Monomial, C>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  C coefficient(const Monomial& m) const;
  C constant_term() const;
  void add_term(const Monomial& m, const C& c);
  Poly with_truncation(Truncation t) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t nvars_ = 0;
  C zero_{};
  Truncation trunc_;
  std::map<Monomial, C> terms_;
};

using RPoly = Poly<Rational>;
using ZPoly = Poly<ZSeries>;

template <class C>
Poly<C> poly_add(const Poly<C>& a, const Poly<C>& b);
template <class C>
Poly<C> poly_sub(const Poly<C>& a, const Poly<C>& b);
template <class C>
Poly<C> poly_scale(const Poly<C>& a, const C& c);
/// Exact product, truncated by the combined truncation of the operands.
/// Throws RingMismatch for different variable counts or coefficient rings.
template <class C>
Poly<C> poly_mul(const Poly<C>& a, const Poly<C>& b);

/// −log p = Σ_{k≥1} (1−p)^k / k with total X-degree ≤ bound (and per-variable
/// caps when given). Throws ConstantTermNotOne.
template <class C>
Poly<C> neg_log(const Poly<C>& p, int bound, const std::vector<std::int32_t>& caps = {});

/// Terms whose support is exactly `vars` (sorted variable indices).
template <class C>
Poly<C> theta(const Poly<C>& p, const std::vector<std::size_t>& vars);

template <class C>
C coefficient_of(const Poly<C>& p, const Monomial& m) { return p.coefficient(m); }

/// Lowest total degree among the terms; nullopt for the zero polynomial.
template <class C>
std::optional<int> lowest_degree(const Poly<C>& p);

/// Replaces every Z_k by the X-monomial z_images[k] over `target_vars`
/// variables; X variable i maps to target variable i.
RPoly collapse(const ZPoly& p, std::size_t target_vars, const std::vector<Monomial>& z_images);

/// Rank over Q of a family of series, as vectors of coefficients.
std::size_t series_rank(const std::vector<ZSeries>& family);

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count, std::size_t first = 1);
std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);
std::string format_series(const ZSeries& s, const std::vector<std::string>& names);
std::string format_series(const ZSeries& s);
std::string format_poly(const RPoly& p, const std::vector<std::string>& names);
std::string format_poly(const ZPoly& p, const std::vector<std::string>& x_names, const std::vector<std::string>& z_names);

}  // namespace superweyl
