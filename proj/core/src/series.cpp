#include "superweyl/series.hpp"

#include <algorithm>
#include <numeric>

#include "superweyl/error.hpp"
#include "superweyl/matrix.hpp"

namespace superweyl {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool is_unit(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](std::int32_t e) { return e == 0; });
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) fail(ErrorKind::RingMismatch, "monomials over different variable sets");
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<std::size_t> mono_support(const Monomial& m) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) s.push_back(i);
  return s;
}

bool ColexLess::operator()(const Monomial& a, const Monomial& b) const {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// ZSeries

ZSeries ZSeries::constant(std::size_t nsyms, int truncation, const Rational& c) {
  ZSeries s(nsyms, truncation);
  s.add_term(Monomial(nsyms), c);
  return s;
}

ZSeries ZSeries::symbol(std::size_t nsyms, int truncation, std::size_t k, const Rational& c) {
  if (k >= nsyms) fail(ErrorKind::IndexOutOfRange, "series symbol index out of range");
  ZSeries s(nsyms, truncation);
  Monomial m(nsyms);
  m[k] = 1;
  s.add_term(m, c);
  return s;
}

ZSeries one_plus(std::size_t nsyms, int truncation, std::size_t k, const Rational& c) {
  return ZSeries::constant(nsyms, truncation, 1) + ZSeries::symbol(nsyms, truncation, k, c);
}

Rational ZSeries::constant_term() const { return coefficient(Monomial(nsyms_)); }

Rational ZSeries::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ZSeries::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nsyms_) fail(ErrorKind::RingMismatch, "series term has the wrong number of symbols");
  if (c == 0 || total_degree(m) > trunc_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ZSeries::check_ring(const ZSeries& o) const {
  if (nsyms_ != o.nsyms_) fail(ErrorKind::RingMismatch, "series over different symbol sets");
}

ZSeries ZSeries::truncated(int t) const {
  ZSeries out(nsyms_, std::min(trunc_, t));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  check_ring(o);
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
  check_ring(o);
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZSeries ZSeries::scaled(const Rational& c) const {
  ZSeries out(nsyms_, trunc_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  a.check_ring(b);
  ZSeries out(a.nsyms_, std::min(a.trunc_, b.trunc_));
  for (const auto& [ma, ca] : a.terms_) {
    const int da = total_degree(ma);
    for (const auto& [mb, cb] : b.terms_) {
      if (da + total_degree(mb) > out.trunc_) continue;
      out.add_term(mono_mul(ma, mb), ca * cb);
    }
  }
  return out;
}

ZSeries ZSeries::inverse() const {
  const Rational c0 = constant_term();
  if (c0 == 0) fail(ErrorKind::ConstantTermNotOne, "series with zero constant term is not invertible");
  // a = c0(1 + r)  =>  a⁻¹ = c0⁻¹ Σ (−r)^k
  ZSeries r = scaled(1 / c0);
  r.add_term(Monomial(nsyms_), -1);
  const ZSeries minus_r = -r;
  ZSeries sum = constant(nsyms_, trunc_, 1);
  ZSeries power = constant(nsyms_, trunc_, 1);
  for (int k = 1; k <= trunc_; ++k) {
    power = power * minus_r;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum.scaled(1 / c0);
}

// ---------------------------------------------------------------------------
// Truncation and Poly

bool Truncation::admits(const Monomial& m) const {
  if (total && total_degree(m) > *total) return false;
  if (!caps.empty()) {
    for (std::size_t i = 0; i < m.size() && i < caps.size(); ++i)
      if (m[i] > caps[i]) return false;
  }
  return true;
}

Truncation Truncation::combine(const Truncation& a, const Truncation& b) {
  Truncation t;
  if (a.total && b.total) t.total = std::min(*a.total, *b.total);
  else t.total = a.total ? a.total : b.total;
  if (a.caps.empty()) t.caps = b.caps;
  else if (b.caps.empty()) t.caps = a.caps;
  else {
    t.caps.resize(std::max(a.caps.size(), b.caps.size()));
    for (std::size_t i = 0; i < t.caps.size(); ++i) {
      if (i >= a.caps.size()) t.caps[i] = b.caps[i];
      else if (i >= b.caps.size()) t.caps[i] = a.caps[i];
      else t.caps[i] = std::min(a.caps[i], b.caps[i]);
    }
  }
  return t;
}

namespace {

void check_same(const Rational&, const Rational&) {}
void check_same(const ZSeries& a, const ZSeries& b) {
  if (a.nsyms() != b.nsyms()) fail(ErrorKind::RingMismatch, "coefficient series over different symbol sets");
}

Rational common_zero(const Rational&, const Rational&) { return 0; }
ZSeries common_zero(const ZSeries& a, const ZSeries& b) {
  check_same(a, b);
  return ZSeries(a.nsyms(), std::min(a.truncation(), b.truncation()));
}

Rational scale_coeff(const Rational& c, const Rational& s) { return c * s; }
ZSeries scale_coeff(const ZSeries& c, const Rational& s) { return c.scaled(s); }

bool is_one(const Rational& c) { return c == 1; }
bool is_one(const ZSeries& c) {
  return c.terms().size() == 1 && c.constant_term() == 1;
}

template <class C>
void check_poly_ring(const Poly<C>& a, const Poly<C>& b) {
  if (a.nvars() != b.nvars()) fail(ErrorKind::RingMismatch, "polynomials over different variable sets");
  check_same(a.zero(), b.zero());
}

}  // namespace

template <class C>
Poly<C> Poly<C>::constant(std::size_t nvars, const C& zero, const C& c, Truncation trunc) {
  Poly p(nvars, zero, std::move(trunc));
  p.add_term(Monomial(nvars), c);
  return p;
}

template <class C>
Poly<C> Poly<C>::term(const Monomial& m, const C& zero, const C& c, Truncation trunc) {
  Poly p(m.size(), zero, std::move(trunc));
  p.add_term(m, c);
  return p;
}

template <class C>
C Poly<C>::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? zero_ : it->second;
}

template <class C>
C Poly<C>::constant_term() const {
  return coefficient(Monomial(nvars_));
}

template <class C>
void Poly<C>::add_term(const Monomial& m, const C& c) {
  if (m.size() != nvars_) fail(ErrorKind::RingMismatch, "term has the wrong number of variables");
  if (superweyl::is_zero(c) || !trunc_.admits(m)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (superweyl::is_zero(it->second)) terms_.erase(it);
}

template <class C>
Poly<C> Poly<C>::with_truncation(Truncation t) const {
  Poly out(nvars_, zero_, std::move(t));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

template <class C>
Poly<C> poly_add(const Poly<C>& a, const Poly<C>& b) {
  check_poly_ring(a, b);
  Poly<C> out(a.nvars(), common_zero(a.zero(), b.zero()), Truncation::combine(a.truncation(), b.truncation()));
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

template <class C>
Poly<C> poly_sub(const Poly<C>& a, const Poly<C>& b) {
  check_poly_ring(a, b);
  Poly<C> out(a.nvars(), common_zero(a.zero(), b.zero()), Truncation::combine(a.truncation(), b.truncation()));
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, scale_coeff(c, Rational(-1)));
  return out;
}

template <class C>
Poly<C> poly_scale(const Poly<C>& a, const C& c) {
  Poly<C> out(a.nvars(), a.zero(), a.truncation());
  for (const auto& [m, v] : a.terms()) out.add_term(m, v * c);
  return out;
}

template <class C>
Poly<C> poly_mul(const Poly<C>& a, const Poly<C>& b) {
  check_poly_ring(a, b);
  Poly<C> out(a.nvars(), common_zero(a.zero(), b.zero()), Truncation::combine(a.truncation(), b.truncation()));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = mono_mul(ma, mb);
      if (!out.truncation().admits(m)) continue;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

template <class C>
Poly<C> neg_log(const Poly<C>& p, int bound, const std::vector<std::int32_t>& caps) {
  if (!is_one(p.constant_term())) fail(ErrorKind::ConstantTermNotOne, "negative logarithm needs constant term 1");
  Truncation t;
  t.total = bound;
  t.caps = caps;
  t = Truncation::combine(t, p.truncation());
  // q = 1 − p has no constant term, so q^k starts in degree k
  Poly<C> q(p.nvars(), p.zero(), t);
  for (const auto& [m, c] : p.terms()) {
    if (!is_unit(m)) q.add_term(m, scale_coeff(c, Rational(-1)));
  }
  Poly<C> result(p.nvars(), p.zero(), t);
  Poly<C> power = q;
  for (int k = 1; !power.is_zero(); ++k) {
    for (const auto& [m, c] : power.terms()) result.add_term(m, scale_coeff(c, Rational(1, k)));
    power = poly_mul(power, q);
  }
  return result;
}

template <class C>
Poly<C> theta(const Poly<C>& p, const std::vector<std::size_t>& vars) {
  Poly<C> out(p.nvars(), p.zero(), p.truncation());
  for (const auto& [m, c] : p.terms()) {
    if (mono_support(m) == vars) out.add_term(m, c);
  }
  return out;
}

template <class C>
std::optional<int> lowest_degree(const Poly<C>& p) {
  std::optional<int> best;
  for (const auto& [m, c] : p.terms()) {
    const int d = total_degree(m);
    if (!best || d < *best) best = d;
  }
  return best;
}

#define SUPERWEYL_INSTANTIATE(C)                                                                  \
  template class Poly<C>;                                                                         \
  template Poly<C> poly_add(const Poly<C>&, const Poly<C>&);                                      \
  template Poly<C> poly_sub(const Poly<C>&, const Poly<C>&);                                      \
  template Poly<C> poly_scale(const Poly<C>&, const C&);                                          \
  template Poly<C> poly_mul(const Poly<C>&, const Poly<C>&);                                      \
  template Poly<C> neg_log(const Poly<C>&, int, const std::vector<std::int32_t>&);                \
  template Poly<C> theta(const Poly<C>&, const std::vector<std::size_t>&);                        \
  template std::optional<int> lowest_degree(const Poly<C>&);

SUPERWEYL_INSTANTIATE(Rational)
SUPERWEYL_INSTANTIATE(ZSeries)

#undef SUPERWEYL_INSTANTIATE

RPoly collapse(const ZPoly& p, std::size_t target_vars, const std::vector<Monomial>& z_images) {
  if (p.nvars() > target_vars) fail(ErrorKind::RingMismatch, "collapse target has fewer variables");
  if (z_images.size() != p.zero().nsyms()) fail(ErrorKind::RingMismatch, "collapse needs one image per symbol");
  RPoly out(target_vars, Rational(0));
  for (const auto& [xm, zs] : p.terms()) {
    Monomial base(target_vars);
    for (std::size_t i = 0; i < xm.size(); ++i) base[i] = xm[i];
    for (const auto& [zm, c] : zs.terms()) {
      Monomial m = base;
      for (std::size_t k = 0; k < zm.size(); ++k) {
        if (zm[k] == 0) continue;
        if (z_images[k].size() != target_vars) fail(ErrorKind::RingMismatch, "collapse image has the wrong size");
        for (std::size_t v = 0; v < target_vars; ++v) m[v] += zm[k] * z_images[k][v];
      }
      if (std::any_of(m.begin(), m.end(), [](std::int32_t e) { return e < 0; })) {
        fail(ErrorKind::NegativeExponentAfterCollapse, "collapsed monomial has a negative exponent");
      }
      out.add_term(m, c);
    }
  }
  return out;
}

std::size_t series_rank(const std::vector<ZSeries>& family) {
  std::map<Monomial, std::size_t> columns;
  for (const ZSeries& s : family)
    for (const auto& [m, c] : s.terms()) columns.emplace(m, columns.size());
  Matrix mat(family.size(), columns.size());
  for (std::size_t r = 0; r < family.size(); ++r)
    for (const auto& [m, c] : family[r].terms()) mat(r, columns.at(m)) = c;
  return mat.rank();
}

// ---------------------------------------------------------------------------
// Text form

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(first + i) + "]");
  return names;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += i < names.size() ? names[i] : "v" + std::to_string(i + 1);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

namespace {

template <class Map>
std::vector<const typename Map::value_type*> colex_sorted(const Map& terms) {
  std::vector<const typename Map::value_type*> v;
  for (const auto& t : terms) v.push_back(&t);
  std::sort(v.begin(), v.end(), [](auto* a, auto* b) { return ColexLess{}(a->first, b->first); });
  return v;
}

std::string format_rational_terms(const std::map<Monomial, Rational>& terms, const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto* t : colex_sorted(terms)) {
    const Rational& c = t->second;
    const std::string mono = format_monomial(t->first, names);
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace

std::string format_series(const ZSeries& s, const std::vector<std::string>& names) {
  return format_rational_terms(s.terms(), names);
}

std::string format_series(const ZSeries& s) { return format_series(s, indexed_names("Z[g", s.nsyms())); }

std::string format_poly(const RPoly& p, const std::vector<std::string>& names) {
  return format_rational_terms(p.terms(), names);
}

std::string format_poly(const ZPoly& p, const std::vector<std::string>& x_names, const std::vector<std::string>& z_names) {
  if (p.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto* t : colex_sorted(p.terms())) {
    if (!first) out += " + ";
    first = false;
    out += "(" + format_series(t->second, z_names) + ")";
    const std::string mono = format_monomial(t->first, x_names);
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

}  // namespace superweyl
