#include "superweyl/numerator.hpp"

#include "superweyl/error.hpp"

namespace superweyl {

std::vector<std::string> x_names(const RootDatum& datum, bool with_odd) {
  auto names = indexed_names("X[a", datum.rank0());
  if (with_odd) {
    for (const auto& y : indexed_names("Y[b", datum.odd_simple().size())) names.push_back(y);
  }
  return names;
}

Dominance require_dominant(const RootDatum& datum, const Weight& lambda) {
  const Dominance d = is_dominant_integral(datum, lambda);
  if (d == Dominance::No) fail(ErrorKind::NotDominant, "weight is not dominant integral for " + datum.name());
  return d;
}

Dominance require_typical_dominant(const RootDatum& datum, const Weight& lambda) {
  const Dominance d = require_dominant(datum, lambda);
  if (!is_typical(datum, lambda)) fail(ErrorKind::NotTypical, "weight is atypical for " + datum.name());
  return d;
}

Monomial weyl_term(const RootDatum& datum, const WeylElement& w, const Weight& eta) {
  const auto c = descent_coefficients(datum, w, eta);
  Monomial m(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_integer(c[i]) || c[i] < 0) {
      fail(ErrorKind::NonIntegralExponent, "Weyl term exponent " + to_string(c[i]) + " is not a non-negative integer");
    }
    m[i] = static_cast<std::int32_t>(c[i].get_num().get_si());
  }
  return m;
}

namespace {

RPoly weyl_sum(const RootDatum& datum, const Weight& eta, const WeylGroup& group) {
  RPoly u(datum.rank0(), Rational(0));
  for (const WeylElement& w : group) {
    u.add_term(weyl_term(datum, w, eta), Rational(w.length() % 2 ? -1 : 1));
  }
  return u;
}

}  // namespace

RPoly numerator(const RootDatum& datum, const Weight& lambda) {
  require_typical_dominant(datum, lambda);
  return weyl_sum(datum, add(lambda, datum.rho()), *generate_group(datum));
}

NumeratorFactors factor_numerator(const RootDatum& datum, const Weight& lambda) {
  NumeratorFactors out;
  out.dominance = require_typical_dominant(datum, lambda);
  const Weight eta = add(lambda, datum.rho());
  const auto& comps = datum.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Component which = comps.size() == 1 ? Component::All : (c == 0 ? Component::First : Component::Second);
    out.factors.push_back(Factor{c, weyl_sum(datum, eta, *generate_group(datum, which)), signature(datum, lambda, comps[c])});
  }
  return out;
}

Signature signature(const RootDatum& datum, const Weight& lambda, const std::vector<std::size_t>& subset) {
  const Weight eta = add(lambda, datum.rho());
  Signature s;
  for (std::size_t i : subset) {
    if (i >= datum.rank0()) fail(ErrorKind::IndexOutOfRange, "even simple root index out of range");
    const Rational p = datum.pairing(eta, datum.alpha(i).weight);
    if (!is_integer(p)) fail(ErrorKind::NonIntegralExponent, "<lambda+rho, alpha> = " + to_string(p) + " is not an integer");
    s.push_back(static_cast<std::int32_t>(p.get_num().get_si()));
  }
  return s;
}

Signature full_signature(const RootDatum& datum, const Weight& lambda) {
  std::vector<std::size_t> all(datum.rank0());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return signature(datum, lambda, all);
}

Monomial x_lambda(const RootDatum& datum, const Weight& lambda, const std::vector<std::size_t>& subset) {
  const Signature s = signature(datum, lambda, subset);
  Monomial m(datum.rank0());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (s[k] <= 0) fail(ErrorKind::NonIntegralExponent, "<lambda+rho, alpha> must be a positive integer");
    m[subset[k]] = s[k];
  }
  return m;
}

RPoly product(const std::vector<RPoly>& polys, std::size_t nvars) {
  RPoly acc = RPoly::constant(nvars, Rational(0), Rational(1));
  for (const RPoly& p : polys) acc = poly_mul(acc, p);
  return acc;
}

RPoly normalized_character(const RootDatum& datum, const Weight& lambda, int bound) {
  const RPoly u = numerator(datum, lambda);
  const std::size_t nv = datum.rank0() + datum.odd_simple().size();
  Truncation t;
  t.total = bound;
  auto image = [&](const Weight& root) {
    const auto c = datum.pi_coordinates(root);
    ensure(c.has_value(), "positive root outside the span of the simple roots");
    Monomial m(nv);
    for (std::size_t i = 0; i < nv; ++i) m[i] = static_cast<std::int32_t>((*c)[i].get_num().get_si());
    return m;
  };

  RPoly chi(nv, Rational(0), t);
  for (const auto& [m, c] : u.terms()) {
    Monomial big(nv);
    for (std::size_t i = 0; i < m.size(); ++i) big[i] = m[i];
    chi.add_term(big, c);
  }
  for (const Root& g : datum.positive_odd()) {
    RPoly f = RPoly::constant(nv, Rational(0), Rational(1), t);
    f.add_term(image(g.weight), Rational(1));
    chi = poly_mul(chi, f);
  }
  for (const Root& a : datum.positive_even()) {
    const Monomial step = image(a.weight);
    RPoly geo(nv, Rational(0), t);
    Monomial m(nv);
    while (t.admits(m)) {
      geo.add_term(m, Rational(1));
      m = mono_mul(m, step);
    }
    chi = poly_mul(chi, geo);
  }
  return chi;
}

}  // namespace superweyl
