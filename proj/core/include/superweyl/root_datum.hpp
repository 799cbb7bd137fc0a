#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superweyl/matrix.hpp"
#include "superweyl/rational.hpp"

namespace superweyl {

/// Coordinates over the ambient ε/δ basis of a datum.
using Weight = std::vector<Rational>;

enum class Parity { Even, Odd };

struct Root {
  Weight weight;
  Parity parity = Parity::Even;
  bool isotropic = false;
  bool positive = true;
};

enum class Family { A, B0, C, G3, F4, Custom };

struct AlgebraDescriptor {
  Family family = Family::A;
  // A(m,n) is sl(m+1,n+1); B(0,n) is osp(1,2n); C(n+1) is osp(2,2n).
  int m = 0;
  int n = 0;
  std::string source = "built-in";

  static AlgebraDescriptor sl(int rows, int cols);
  static AlgebraDescriptor osp1(int n);
  static AlgebraDescriptor osp2(int n);
  static AlgebraDescriptor g3();
  static AlgebraDescriptor f4();

  /// "sl(3,2)", "osp(1,4)", "osp(2,4)", "G(3)", "F(4)"; custom data use their file's name.
  std::string name() const;
};

enum class Dominance { Yes, NecessaryOnly, No };

struct Atypicality {
  std::size_t count = 0;
  /// Index into positive_odd() when count == 1.
  std::optional<std::size_t> odd_root;
};

namespace detail {
struct DatumCache {
  std::mutex mutex;
  std::shared_ptr<const void> groups[3];
};
struct DatumData;
}  // namespace detail

/// Immutable root datum. Simple roots are stored in the order of the
/// distinguished Dynkin diagram; the even ones, in that order, are Π_0 and are
/// what `X[aK]` refers to.
class RootDatum {
 public:
  const AlgebraDescriptor& descriptor() const { return descriptor_; }
  const std::string& name() const { return name_; }
  bool type_one() const { return type_one_; }
  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }

  const std::vector<Root>& simple_roots() const { return simple_; }
  const std::vector<std::size_t>& even_simple() const { return even_simple_; }
  const std::vector<std::size_t>& odd_simple() const { return odd_simple_; }
  /// α_{i+1}, the i-th root of Π_0.
  const Root& alpha(std::size_t i) const { return simple_[even_simple_.at(i)]; }
  std::size_t rank0() const { return even_simple_.size(); }

  const std::vector<Root>& positive_even() const { return positive_even_; }
  const std::vector<Root>& positive_odd() const { return positive_odd_; }
  const Weight& rho() const { return rho_; }
  const Weight& tau() const { return tau_; }

  /// Connected components of Π_0 as sorted Π_0 indices, ordered by smallest index.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  std::size_t component_of(std::size_t i) const { return component_of_.at(i); }

  /// eps[i] and delta[j] atoms of the weight grammar (1-based in the grammar).
  const std::vector<Weight>& eps_vectors() const { return eps_; }
  const std::vector<Weight>& delta_vectors() const { return delta_; }

  Weight zero() const { return Weight(dim()); }

  Rational inner(const Weight& u, const Weight& v) const;
  /// 2(λ,α)/(α,α); throws IsotropicRoot.
  Rational pairing(const Weight& lambda, const Weight& alpha) const;

  /// Coefficients over Π in variable order (Π_0 first, then the odd simple
  /// roots), or nullopt when v is outside the span.
  std::optional<std::vector<Rational>> pi_coordinates(const Weight& v) const;
  /// Coefficients over Π_0, or nullopt when v is outside its span.
  std::optional<std::vector<Rational>> even_coordinates(const Weight& v) const;

  std::optional<std::size_t> odd_root_index(const Weight& v) const;
  std::optional<std::size_t> even_root_index(const Weight& v) const;

  /// Equal as functionals on the roots: a−b is orthogonal to every simple
  /// root. For sl(m+1,n+1) this identifies weights differing by Σε−Σδ.
  bool equivalent(const Weight& a, const Weight& b) const;

  void check_weight(const Weight& v) const;

  detail::DatumCache& cache() const { return *cache_; }

 private:
  friend RootDatum finalize_datum(detail::DatumData data);

  AlgebraDescriptor descriptor_;
  std::string name_;
  bool type_one_ = false;
  Matrix gram_;
  std::vector<std::string> basis_labels_;
  std::vector<Root> simple_;
  std::vector<std::size_t> even_simple_;
  std::vector<std::size_t> odd_simple_;
  std::vector<Root> positive_even_;
  std::vector<Root> positive_odd_;
  Weight rho_;
  Weight tau_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_of_;
  std::vector<Weight> eps_;
  std::vector<Weight> delta_;
  Matrix pi_columns_;
  Matrix pi_left_inverse_;
  Matrix even_columns_;
  Matrix even_left_inverse_;
  std::shared_ptr<detail::DatumCache> cache_;
};

namespace detail {
struct DatumData {
  AlgebraDescriptor descriptor;
  std::string name;
  bool type_one = false;
  Matrix gram;
  std::vector<std::string> basis_labels;
  std::vector<Root> simple;
  std::vector<Root> positive_even;
  std::vector<Root> positive_odd;
  std::vector<Weight> eps;
  std::vector<Weight> delta;
  // Line numbers for error messages from datum files (0 = built-in).
  int line = 0;
};
}  // namespace detail

/// Validates the data and fills in ρ, τ, components and solver caches.
RootDatum finalize_datum(detail::DatumData data);

RootDatum build_datum(const AlgebraDescriptor& descriptor);

Rational inner(const RootDatum& datum, const Weight& u, const Weight& v);
Rational pairing(const RootDatum& datum, const Weight& lambda, const Root& alpha);
Weight weyl_vector(const RootDatum& datum);
Weight sum_positive_odd(const RootDatum& datum);

bool is_typical(const RootDatum& datum, const Weight& lambda);
Atypicality atypicality_type(const RootDatum& datum, const Weight& lambda);
Dominance is_dominant_integral(const RootDatum& datum, const Weight& lambda);

/// ω_{i+1} for the i-th root of Π_0, lying in the span of Π_0.
Weight fundamental_weight(const RootDatum& datum, std::size_t i);

/// Datum file format: `key: value` lines, `#` comments. See README.
RootDatum parse_datum(std::string_view text, const std::string& source = "<string>");
RootDatum load_datum_file(const std::string& path);
std::string emit_datum(const RootDatum& datum);

std::string_view dominance_name(Dominance d);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight scale(const Rational& c, const Weight& v);

}  // namespace superweyl
