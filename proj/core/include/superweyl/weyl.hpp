#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superweyl/matrix.hpp"
#include "superweyl/root_datum.hpp"

namespace superweyl {

/// Element of the group generated by reflections in Π_0. `word` holds Π_0
/// indices (0-based) of a reduced expression; `matrix` is the action on the
/// ambient coordinates.
struct WeylElement {
  std::vector<std::size_t> word;
  Matrix matrix;

  std::size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }
};

enum class Component { All, First, Second };

using WeylGroup = std::vector<WeylElement>;

/// Element cap from SUPERWEYL_MAX_GROUP, default 1000000.
std::size_t default_group_cap();

/// Breadth-first enumeration ordered by (length, lexicographic word); each
/// word is the lexicographically least reduced expression. Results for the
/// default cap are cached on the datum.
std::shared_ptr<const WeylGroup> generate_group(const RootDatum& datum, Component component = Component::All,
                                                std::optional<std::size_t> cap = std::nullopt);

Matrix reflection_matrix(const RootDatum& datum, std::size_t i);
WeylElement element_from_word(const RootDatum& datum, const std::vector<std::size_t>& word);

Weight act(const WeylElement& w, const Weight& v);
Weight act(const Matrix& w, const Weight& v);

/// I(w): the distinct letters of the reduced word, sorted.
std::vector<std::size_t> support(const WeylElement& w);

/// w = u·v with u in the first component's group and v in the second's.
std::pair<WeylElement, WeylElement> component_split(const RootDatum& datum, const WeylElement& w);

/// c_α(w) over Π_0 with η − wη = Σ c_α α.
std::vector<Rational> descent_coefficients(const RootDatum& datum, const WeylElement& w, const Weight& eta);

/// Number of positive even roots sent to negative roots.
std::size_t inversion_count(const RootDatum& datum, const Matrix& w);

/// "1" for the identity, otherwise e.g. "s1s2s1" (1-based letters).
std::string word_string(const WeylElement& w);

}  // namespace superweyl
