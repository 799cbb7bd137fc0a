#include "superweyl/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "superweyl/error.hpp"

namespace superweyl {

std::size_t default_group_cap() {
  if (const char* env = std::getenv("SUPERWEYL_MAX_GROUP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

Matrix reflection_matrix(const RootDatum& datum, std::size_t i) {
  const Weight& a = datum.alpha(i).weight;
  const std::size_t n = datum.dim();
  const Rational c = 2 / datum.inner(a, a);
  // s(v) = v − c(v,α)α, so S = I − c·α·(Gα)ᵀ
  const Weight ga = datum.gram().apply(a);
  Matrix s = Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) s(r, k) -= c * a[r] * ga[k];
  }
  return s;
}

WeylElement element_from_word(const RootDatum& datum, const std::vector<std::size_t>& word) {
  WeylElement w{word, Matrix::identity(datum.dim())};
  for (std::size_t g : word) {
    if (g >= datum.rank0()) fail(ErrorKind::IndexOutOfRange, "reflection index out of range");
    w.matrix = w.matrix * reflection_matrix(datum, g);
  }
  return w;
}

namespace {

std::vector<std::size_t> generators_of(const RootDatum& datum, Component component) {
  if (component == Component::All) {
    std::vector<std::size_t> all(datum.rank0());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  const std::size_t idx = component == Component::First ? 0 : 1;
  if (idx >= datum.components().size()) {
    fail(ErrorKind::NoSecondComponent, datum.name() + " has a connected set of even simple roots");
  }
  return datum.components()[idx];
}

std::shared_ptr<const WeylGroup> enumerate(const RootDatum& datum, Component component, std::size_t cap) {
  const auto gens = generators_of(datum, component);
  std::vector<Matrix> refl;
  for (std::size_t g : gens) refl.push_back(reflection_matrix(datum, g));

  auto group = std::make_shared<WeylGroup>();
  std::map<std::vector<Rational>, std::size_t> seen;
  group->push_back(WeylElement{{}, Matrix::identity(datum.dim())});
  seen.emplace(group->back().matrix.data(), 0);
  std::size_t layer_begin = 0;
  while (layer_begin < group->size()) {
    const std::size_t layer_end = group->size();
    for (std::size_t e = layer_begin; e < layer_end; ++e) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Matrix m = (*group)[e].matrix * refl[k];
        if (seen.count(m.data())) continue;
        if (group->size() >= cap) {
          fail(ErrorKind::GroupTooLarge, "Weyl group of " + datum.name() + " exceeds " + std::to_string(cap) + " elements");
        }
        std::vector<std::size_t> word = (*group)[e].word;
        word.push_back(gens[k]);
        seen.emplace(m.data(), group->size());
        group->push_back(WeylElement{std::move(word), std::move(m)});
      }
    }
    layer_begin = layer_end;
  }
  return group;
}

}  // namespace

std::shared_ptr<const WeylGroup> generate_group(const RootDatum& datum, Component component,
                                                std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(default_group_cap());
  if (cap) return enumerate(datum, component, limit);
  auto& cache = datum.cache();
  const auto slot = static_cast<std::size_t>(component);
  std::lock_guard<std::mutex> lock(cache.mutex);
  if (!cache.groups[slot]) cache.groups[slot] = enumerate(datum, component, limit);
  return std::static_pointer_cast<const WeylGroup>(cache.groups[slot]);
}

Weight act(const Matrix& w, const Weight& v) {
  if (v.size() != w.cols()) fail(ErrorKind::DimensionMismatch, "weight and group element have different dimensions");
  return w.apply(v);
}

Weight act(const WeylElement& w, const Weight& v) { return act(w.matrix, v); }

std::vector<std::size_t> support(const WeylElement& w) {
  std::vector<std::size_t> s = w.word;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::pair<WeylElement, WeylElement> component_split(const RootDatum& datum, const WeylElement& w) {
  if (datum.components().size() < 2) {
    fail(ErrorKind::NoSecondComponent, datum.name() + " has a connected set of even simple roots");
  }
  std::vector<std::size_t> first, second;
  for (std::size_t g : w.word) (datum.component_of(g) == 0 ? first : second).push_back(g);
  auto canonical = [&](const std::vector<std::size_t>& word, Component c) {
    const Matrix m = element_from_word(datum, word).matrix;
    for (const WeylElement& e : *generate_group(datum, c)) {
      if (e.matrix == m) return e;
    }
    fail(ErrorKind::Internal, "component factor not found in its group");
  };
  return {canonical(first, Component::First), canonical(second, Component::Second)};
}

std::vector<Rational> descent_coefficients(const RootDatum& datum, const WeylElement& w, const Weight& eta) {
  const auto c = datum.even_coordinates(sub(eta, act(w, eta)));
  ensure(c.has_value(), "eta - w(eta) left the span of the even simple roots");
  return *c;
}

std::size_t inversion_count(const RootDatum& datum, const Matrix& w) {
  std::size_t count = 0;
  for (const Root& r : datum.positive_even()) {
    const Weight img = act(w, r.weight);
    if (!datum.even_root_index(img)) ++count;
  }
  return count;
}

std::string word_string(const WeylElement& w) {
  if (w.word.empty()) return "1";
  std::string s;
  for (std::size_t g : w.word) s += "s" + std::to_string(g + 1);
  return s;
}

}  // namespace superweyl
