#include "superweyl/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "superweyl/error.hpp"

namespace superweyl {

Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "weight lengths differ");
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "weight lengths differ");
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Weight scale(const Rational& c, const Weight& v) {
  Weight out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

AlgebraDescriptor AlgebraDescriptor::sl(int rows, int cols) { return {Family::A, rows - 1, cols - 1, "built-in"}; }
AlgebraDescriptor AlgebraDescriptor::osp1(int n) { return {Family::B0, 0, n, "built-in"}; }
AlgebraDescriptor AlgebraDescriptor::osp2(int n) { return {Family::C, 0, n, "built-in"}; }
AlgebraDescriptor AlgebraDescriptor::g3() { return {Family::G3, 0, 0, "built-in"}; }
AlgebraDescriptor AlgebraDescriptor::f4() { return {Family::F4, 0, 0, "built-in"}; }

std::string AlgebraDescriptor::name() const {
  switch (family) {
    case Family::A: return "sl(" + std::to_string(m + 1) + "," + std::to_string(n + 1) + ")";
    case Family::B0: return "osp(1," + std::to_string(2 * n) + ")";
    case Family::C: return "osp(2," + std::to_string(2 * n) + ")";
    case Family::G3: return "G(3)";
    case Family::F4: return "F(4)";
    case Family::Custom: return "custom:" + source;
  }
  return "?";
}

std::string_view dominance_name(Dominance d) {
  switch (d) {
    case Dominance::Yes: return "Yes";
    case Dominance::NecessaryOnly: return "NecessaryOnly";
    case Dominance::No: return "No";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// RootDatum members

Rational RootDatum::inner(const Weight& u, const Weight& v) const {
  check_weight(u);
  check_weight(v);
  Rational acc = 0;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] != 0 && gram_(i, j) != 0) acc += u[i] * gram_(i, j) * v[j];
    }
  }
  return acc;
}

Rational RootDatum::pairing(const Weight& lambda, const Weight& alpha) const {
  const Rational norm = inner(alpha, alpha);
  if (norm == 0) fail(ErrorKind::IsotropicRoot, "pairing with an isotropic root");
  return 2 * inner(lambda, alpha) / norm;
}

void RootDatum::check_weight(const Weight& v) const {
  if (v.size() != dim()) {
    fail(ErrorKind::DimensionMismatch,
         "weight has " + std::to_string(v.size()) + " coordinates, datum " + name_ + " needs " + std::to_string(dim()));
  }
}

namespace {

std::optional<std::vector<Rational>> solve_in_span(const Matrix& columns, const Matrix& left_inv, const Weight& v) {
  std::vector<Rational> c = left_inv.apply(v);
  if (columns.apply(c) != v) return std::nullopt;
  return c;
}

}  // namespace

std::optional<std::vector<Rational>> RootDatum::pi_coordinates(const Weight& v) const {
  check_weight(v);
  return solve_in_span(pi_columns_, pi_left_inverse_, v);
}

std::optional<std::vector<Rational>> RootDatum::even_coordinates(const Weight& v) const {
  check_weight(v);
  return solve_in_span(even_columns_, even_left_inverse_, v);
}

std::optional<std::size_t> RootDatum::odd_root_index(const Weight& v) const {
  for (std::size_t i = 0; i < positive_odd_.size(); ++i) {
    if (positive_odd_[i].weight == v) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> RootDatum::even_root_index(const Weight& v) const {
  for (std::size_t i = 0; i < positive_even_.size(); ++i) {
    if (positive_even_[i].weight == v) return i;
  }
  return std::nullopt;
}

bool RootDatum::equivalent(const Weight& a, const Weight& b) const {
  const Weight d = sub(a, b);
  return std::all_of(simple_.begin(), simple_.end(), [&](const Root& r) { return inner(d, r.weight) == 0; });
}

// ---------------------------------------------------------------------------
// Built-in families

namespace {

Weight unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  Weight w(dim);
  w[i] = c;
  return w;
}

Root make_root(Weight w, Parity p) { return Root{std::move(w), p, false, true}; }

detail::DatumData sl_data(int m, int n) {
  const int M = m + 1;
  const int N = n + 1;
  if (M < 1 || N < 1) fail(ErrorKind::UnsupportedFamily, "sl(M,N) needs M, N >= 1");
  if (M == N && M <= 2) {
    fail(ErrorKind::UnsupportedFamily, "sl(" + std::to_string(M) + "," + std::to_string(N) + ") is not supported");
  }
  if (M + N < 3) fail(ErrorKind::UnsupportedFamily, "sl(M,N) needs an even simple root");
  const std::size_t dim = static_cast<std::size_t>(M + N);
  detail::DatumData d;
  d.descriptor = AlgebraDescriptor::sl(M, N);
  d.name = d.descriptor.name();
  d.type_one = true;
  d.gram = Matrix(dim, dim);
  for (int i = 0; i < M; ++i) {
    d.gram(i, i) = 1;
    d.basis_labels.push_back("eps" + std::to_string(i + 1));
    d.eps.push_back(unit(dim, i));
  }
  for (int j = 0; j < N; ++j) {
    d.gram(M + j, M + j) = -1;
    d.basis_labels.push_back("delta" + std::to_string(j + 1));
    d.delta.push_back(unit(dim, M + j));
  }
  auto eps = [&](int i) { return d.eps[i]; };
  auto del = [&](int j) { return d.delta[j]; };
  for (int i = 0; i + 1 < M; ++i) d.simple.push_back(make_root(sub(eps(i), eps(i + 1)), Parity::Even));
  d.simple.push_back(make_root(sub(eps(M - 1), del(0)), Parity::Odd));
  for (int j = 0; j + 1 < N; ++j) d.simple.push_back(make_root(sub(del(j), del(j + 1)), Parity::Even));
  for (int i = 0; i < M; ++i)
    for (int k = i + 1; k < M; ++k) d.positive_even.push_back(make_root(sub(eps(i), eps(k)), Parity::Even));
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k) d.positive_even.push_back(make_root(sub(del(j), del(k)), Parity::Even));
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < N; ++j) d.positive_odd.push_back(make_root(sub(eps(i), del(j)), Parity::Odd));
  return d;
}

detail::DatumData osp1_data(int n) {
  if (n < 2) fail(ErrorKind::UnsupportedFamily, "osp(1,2n) needs n >= 2");
  const std::size_t dim = static_cast<std::size_t>(n);
  detail::DatumData d;
  d.descriptor = AlgebraDescriptor::osp1(n);
  d.name = d.descriptor.name();
  d.gram = Matrix(dim, dim);
  for (int j = 0; j < n; ++j) {
    d.gram(j, j) = -1;
    d.basis_labels.push_back("delta" + std::to_string(j + 1));
    d.delta.push_back(unit(dim, j));
  }
  const auto& del = d.delta;
  for (int j = 0; j + 1 < n; ++j) d.simple.push_back(make_root(sub(del[j], del[j + 1]), Parity::Even));
  d.simple.push_back(make_root(del[n - 1], Parity::Odd));
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      d.positive_even.push_back(make_root(sub(del[j], del[k]), Parity::Even));
      d.positive_even.push_back(make_root(add(del[j], del[k]), Parity::Even));
    }
    d.positive_even.push_back(make_root(scale(2, del[j]), Parity::Even));
  }
  for (int j = 0; j < n; ++j) d.positive_odd.push_back(make_root(del[j], Parity::Odd));
  return d;
}

detail::DatumData osp2_data(int n) {
  if (n < 1) fail(ErrorKind::UnsupportedFamily, "osp(2,2n) needs n >= 1");
  const std::size_t dim = static_cast<std::size_t>(n + 1);
  detail::DatumData d;
  d.descriptor = AlgebraDescriptor::osp2(n);
  d.name = d.descriptor.name();
  d.type_one = true;
  d.gram = Matrix(dim, dim);
  d.gram(0, 0) = 1;
  d.basis_labels.push_back("eps1");
  d.eps.push_back(unit(dim, 0));
  for (int j = 0; j < n; ++j) {
    d.gram(j + 1, j + 1) = -1;
    d.basis_labels.push_back("delta" + std::to_string(j + 1));
    d.delta.push_back(unit(dim, j + 1));
  }
  const auto& del = d.delta;
  const Weight& e1 = d.eps[0];
  for (int j = 0; j + 1 < n; ++j) d.simple.push_back(make_root(sub(del[j], del[j + 1]), Parity::Even));
  d.simple.push_back(make_root(scale(2, del[n - 1]), Parity::Even));
  d.simple.push_back(make_root(sub(e1, del[0]), Parity::Odd));
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      d.positive_even.push_back(make_root(sub(del[j], del[k]), Parity::Even));
      d.positive_even.push_back(make_root(add(del[j], del[k]), Parity::Even));
    }
    d.positive_even.push_back(make_root(scale(2, del[j]), Parity::Even));
  }
  // γ_p = ε_1+δ_p first, then γ'_p = ε_1−δ_p
  for (int j = 0; j < n; ++j) d.positive_odd.push_back(make_root(add(e1, del[j]), Parity::Odd));
  for (int j = 0; j < n; ++j) d.positive_odd.push_back(make_root(sub(e1, del[j]), Parity::Odd));
  return d;
}

detail::DatumData g3_data() {
  detail::DatumData d;
  d.descriptor = AlgebraDescriptor::g3();
  d.name = d.descriptor.name();
  d.gram = Matrix(3, 3);
  d.gram(0, 0) = 2;
  d.gram(1, 1) = 2;
  d.gram(0, 1) = -1;
  d.gram(1, 0) = -1;
  d.gram(2, 2) = -2;
  d.basis_labels = {"eps1", "eps2", "delta"};
  const Weight e1{1, 0, 0}, e2{0, 1, 0}, e3{-1, -1, 0}, dl{0, 0, 1};
  d.eps = {e1, e2, e3};
  d.delta = {dl};
  d.simple = {make_root(e1, Parity::Even), make_root(sub(e2, e1), Parity::Even), make_root(add(e3, dl), Parity::Odd)};
  d.positive_even = {make_root(e1, Parity::Even),
                     make_root(sub(e2, e1), Parity::Even),
                     make_root(e2, Parity::Even),
                     make_root(add(e1, e2), Parity::Even),
                     make_root(sub(e1, e3), Parity::Even),
                     make_root(sub(e2, e3), Parity::Even),
                     make_root(scale(2, dl), Parity::Even)};
  d.positive_odd = {make_root(dl, Parity::Odd)};
  for (const Weight& e : {e1, e2, e3}) {
    d.positive_odd.push_back(make_root(add(e, dl), Parity::Odd));
    d.positive_odd.push_back(make_root(sub(dl, e), Parity::Odd));
  }
  return d;
}

detail::DatumData f4_data() {
  detail::DatumData d;
  d.descriptor = AlgebraDescriptor::f4();
  d.name = d.descriptor.name();
  d.gram = Matrix(4, 4);
  for (int i = 0; i < 3; ++i) d.gram(i, i) = 1;
  d.gram(3, 3) = -3;
  d.basis_labels = {"eps1", "eps2", "eps3", "delta"};
  for (int i = 0; i < 3; ++i) d.eps.push_back(unit(4, i));
  d.delta = {unit(4, 3)};
  const auto& e = d.eps;
  const Weight& dl = d.delta[0];
  const Rational half(1, 2);
  d.simple = {make_root(sub(e[0], e[1]), Parity::Even), make_root(sub(e[1], e[2]), Parity::Even),
              make_root(e[2], Parity::Even), make_root(Weight{-half, -half, -half, half}, Parity::Odd)};
  for (int i = 0; i < 3; ++i) {
    for (int k = i + 1; k < 3; ++k) {
      d.positive_even.push_back(make_root(sub(e[i], e[k]), Parity::Even));
      d.positive_even.push_back(make_root(add(e[i], e[k]), Parity::Even));
    }
    d.positive_even.push_back(make_root(e[i], Parity::Even));
  }
  d.positive_even.push_back(make_root(dl, Parity::Even));
  for (int s = 0; s < 8; ++s) {
    Weight w{(s & 4) ? -half : half, (s & 2) ? -half : half, (s & 1) ? -half : half, half};
    d.positive_odd.push_back(make_root(std::move(w), Parity::Odd));
  }
  return d;
}

[[noreturn]] void reject(const detail::DatumData& d, const std::string& msg) {
  if (d.descriptor.family == Family::Custom) {
    fail(ErrorKind::MalformedDatumFile, d.descriptor.source + ": " + msg);
  }
  fail(ErrorKind::Internal, d.name + ": " + msg);
}

std::string root_text(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

}  // namespace

RootDatum finalize_datum(detail::DatumData d) {
  const std::size_t dim = d.gram.rows();
  if (dim == 0 || d.gram.cols() != dim) reject(d, "gram matrix must be square and nonempty");
  if (d.gram.transposed() != d.gram) reject(d, "gram matrix is not symmetric");
  if (!d.gram.inverse()) reject(d, "invariant form is degenerate");
  if (d.basis_labels.size() != dim) reject(d, "basis has the wrong number of labels");

  auto check_root = [&](Root& r, const char* what) {
    if (r.weight.size() != dim) reject(d, std::string(what) + " root '" + root_text(r.weight) + "' has wrong length");
    Rational norm = 0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) norm += r.weight[i] * d.gram(i, j) * r.weight[j];
    r.isotropic = norm == 0;
    if (r.parity == Parity::Even && r.isotropic) reject(d, "even root '" + root_text(r.weight) + "' is isotropic");
    if (std::all_of(r.weight.begin(), r.weight.end(), [](const Rational& x) { return x == 0; })) {
      reject(d, std::string(what) + " root is zero");
    }
  };
  for (Root& r : d.simple) check_root(r, "simple");
  for (Root& r : d.positive_even) {
    r.parity = Parity::Even;
    check_root(r, "positive even");
  }
  for (Root& r : d.positive_odd) {
    r.parity = Parity::Odd;
    check_root(r, "positive odd");
  }

  RootDatum out;
  out.descriptor_ = d.descriptor;
  out.name_ = d.name;
  out.type_one_ = d.type_one;
  out.gram_ = d.gram;
  out.basis_labels_ = d.basis_labels;
  out.simple_ = d.simple;
  out.positive_even_ = d.positive_even;
  out.positive_odd_ = d.positive_odd;
  out.eps_ = d.eps;
  out.delta_ = d.delta;
  out.cache_ = std::make_shared<detail::DatumCache>();

  std::size_t isotropic_simple = 0;
  for (std::size_t i = 0; i < out.simple_.size(); ++i) {
    const Root& r = out.simple_[i];
    (r.parity == Parity::Even ? out.even_simple_ : out.odd_simple_).push_back(i);
    if (r.isotropic) ++isotropic_simple;
    const auto& pool = r.parity == Parity::Even ? out.positive_even_ : out.positive_odd_;
    if (std::none_of(pool.begin(), pool.end(), [&](const Root& p) { return p.weight == r.weight; })) {
      reject(d, "simple root '" + root_text(r.weight) + "' is missing from its positive list");
    }
  }
  if (isotropic_simple > 1) reject(d, "more than one isotropic simple root");
  if (out.even_simple_.empty()) reject(d, "no even simple roots");

  auto duplicates = [](const std::vector<Root>& roots) {
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (roots[i].weight == roots[j].weight) return true;
    return false;
  };
  if (duplicates(out.positive_even_) || duplicates(out.positive_odd_)) reject(d, "duplicate positive root");

  std::vector<Weight> pi_cols;
  for (std::size_t i : out.even_simple_) pi_cols.push_back(out.simple_[i].weight);
  std::vector<Weight> even_cols = pi_cols;
  for (std::size_t i : out.odd_simple_) pi_cols.push_back(out.simple_[i].weight);
  out.pi_columns_ = Matrix::from_columns(pi_cols);
  out.even_columns_ = Matrix::from_columns(even_cols);
  auto pl = left_inverse(out.pi_columns_);
  auto el = left_inverse(out.even_columns_);
  if (!pl || !el) reject(d, "simple roots are linearly dependent");
  out.pi_left_inverse_ = *pl;
  out.even_left_inverse_ = *el;

  for (const auto* pool : {&out.positive_even_, &out.positive_odd_}) {
    for (const Root& r : *pool) {
      auto c = out.pi_coordinates(r.weight);
      if (!c) reject(d, "positive root '" + root_text(r.weight) + "' is outside the span of the simple roots");
      for (const Rational& x : *c) {
        if (!is_integer(x) || x < 0) {
          reject(d, "positive root '" + root_text(r.weight) + "' is not a non-negative integer combination of simple roots");
        }
      }
    }
  }

  out.rho_ = out.zero();
  out.tau_ = out.zero();
  const Rational half(1, 2);
  for (const Root& r : out.positive_even_) out.rho_ = add(out.rho_, scale(half, r.weight));
  for (const Root& r : out.positive_odd_) {
    out.rho_ = sub(out.rho_, scale(half, r.weight));
    out.tau_ = add(out.tau_, r.weight);
  }
  for (const Root& r : out.simple_) {
    if (out.inner(out.rho_, r.weight) != half * out.inner(r.weight, r.weight)) {
      reject(d, "Weyl vector law fails on simple root '" + root_text(r.weight) + "'");
    }
  }

  // components of Π_0
  const std::size_t r0 = out.even_simple_.size();
  out.component_of_.assign(r0, r0);
  for (std::size_t start = 0; start < r0; ++start) {
    if (out.component_of_[start] != r0) continue;
    const std::size_t id = out.components_.size();
    std::vector<std::size_t> comp{start};
    out.component_of_[start] = id;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t j = 0; j < r0; ++j) {
        if (out.component_of_[j] == r0 && out.inner(out.alpha(comp[k]).weight, out.alpha(j).weight) != 0) {
          out.component_of_[j] = id;
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.components_.push_back(std::move(comp));
  }
  if (out.components_.size() > 2) reject(d, "even simple roots form more than two components");
  return out;
}

RootDatum build_datum(const AlgebraDescriptor& desc) {
  switch (desc.family) {
    case Family::A: return finalize_datum(sl_data(desc.m, desc.n));
    case Family::B0: return finalize_datum(osp1_data(desc.n));
    case Family::C: return finalize_datum(osp2_data(desc.n));
    case Family::G3: return finalize_datum(g3_data());
    case Family::F4: return finalize_datum(f4_data());
    case Family::Custom:
      if (desc.source.empty() || desc.source == "built-in") {
        fail(ErrorKind::MalformedDatumFile, "custom datum needs a file path");
      }
      return load_datum_file(desc.source);
  }
  fail(ErrorKind::UnsupportedFamily, "unknown family");
}

// ---------------------------------------------------------------------------
// Free-function API

Rational inner(const RootDatum& datum, const Weight& u, const Weight& v) { return datum.inner(u, v); }

Rational pairing(const RootDatum& datum, const Weight& lambda, const Root& alpha) {
  if (alpha.isotropic) fail(ErrorKind::IsotropicRoot, "pairing with an isotropic root");
  return datum.pairing(lambda, alpha.weight);
}

Weight weyl_vector(const RootDatum& datum) { return datum.rho(); }
Weight sum_positive_odd(const RootDatum& datum) { return datum.tau(); }

Atypicality atypicality_type(const RootDatum& datum, const Weight& lambda) {
  const Weight eta = add(lambda, datum.rho());
  Atypicality out;
  for (std::size_t i = 0; i < datum.positive_odd().size(); ++i) {
    const Root& g = datum.positive_odd()[i];
    if (g.isotropic && datum.inner(eta, g.weight) == 0) {
      ++out.count;
      out.odd_root = i;
    }
  }
  if (out.count != 1) out.odd_root.reset();
  return out;
}

bool is_typical(const RootDatum& datum, const Weight& lambda) { return atypicality_type(datum, lambda).count == 0; }

Dominance is_dominant_integral(const RootDatum& datum, const Weight& lambda) {
  datum.check_weight(lambda);
  for (std::size_t i = 0; i < datum.rank0(); ++i) {
    const Rational p = datum.pairing(lambda, datum.alpha(i).weight);
    if (!is_integer(p) || p < 0) return Dominance::No;
  }
  return datum.type_one() ? Dominance::Yes : Dominance::NecessaryOnly;
}

Weight fundamental_weight(const RootDatum& datum, std::size_t i) {
  const std::size_t r = datum.rank0();
  if (i >= r) {
    fail(ErrorKind::IndexOutOfRange, "omega[" + std::to_string(i + 1) + "] needs an index in 1.." + std::to_string(r));
  }
  // ω = Σ c_k α_k with ⟨ω, α_j⟩ = δ_ij
  Matrix cartan(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) cartan(j, k) = datum.pairing(datum.alpha(k).weight, datum.alpha(j).weight);
  const auto inv = cartan.inverse();
  ensure(inv.has_value(), "Cartan matrix of the even simple roots is singular");
  Weight w = datum.zero();
  for (std::size_t k = 0; k < r; ++k) w = add(w, scale((*inv)(k, i), datum.alpha(k).weight));
  return w;
}

// ---------------------------------------------------------------------------
// Datum files

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

RootDatum parse_datum(std::string_view text, const std::string& source) {
  detail::DatumData d;
  d.descriptor = AlgebraDescriptor{Family::Custom, 0, 0, source};
  std::vector<std::vector<Rational>> gram_rows;
  std::vector<std::string> basis;
  std::optional<std::size_t> ambient_dim;
  int line_no = 0;

  auto bad = [&](const std::string& msg) -> void {
    fail(ErrorKind::MalformedDatumFile, source + ":" + std::to_string(line_no) + ": " + msg);
  };
  auto numbers = [&](std::string_view s) {
    std::vector<Rational> v;
    for (const std::string& tok : split_ws(s)) {
      try {
        v.push_back(parse_rational(tok));
      } catch (const Error&) {
        bad("not a rational number: '" + tok + "'");
      }
    }
    return v;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) bad("expected 'key: value'");
    const std::string key(trim(line.substr(0, colon)));
    const std::string_view value = trim(line.substr(colon + 1));
    if (key == "family") {
      d.name = std::string(value);
    } else if (key == "type_one") {
      if (value == "true") d.type_one = true;
      else if (value == "false") d.type_one = false;
      else bad("type_one must be true or false");
    } else if (key == "ambient_dim") {
      const auto v = numbers(value);
      if (v.size() != 1 || !is_integer(v[0]) || v[0] <= 0) bad("ambient_dim must be a positive integer");
      ambient_dim = static_cast<std::size_t>(v[0].get_num().get_ui());
    } else if (key == "basis") {
      basis = split_ws(value);
      for (const auto& b : basis)
        if (b != "eps" && b != "delta") bad("basis entries must be 'eps' or 'delta', got '" + b + "'");
    } else if (key == "gram") {
      gram_rows.push_back(numbers(value));
    } else if (key == "simple") {
      const auto semi = value.find(';');
      if (semi == std::string_view::npos) bad("simple root needs '; even' or '; odd'");
      const std::string_view parity = trim(value.substr(semi + 1));
      Parity p = Parity::Even;
      if (parity == "even") p = Parity::Even;
      else if (parity == "odd") p = Parity::Odd;
      else bad("parity must be 'even' or 'odd'");
      d.simple.push_back(Root{numbers(value.substr(0, semi)), p, false, true});
    } else if (key == "positive_even") {
      d.positive_even.push_back(Root{numbers(value), Parity::Even, false, true});
    } else if (key == "positive_odd") {
      d.positive_odd.push_back(Root{numbers(value), Parity::Odd, false, true});
    } else {
      bad("unknown key '" + key + "'");
    }
  }
  line_no = 0;
  if (d.name.empty()) bad("missing 'family'");
  if (gram_rows.empty()) bad("missing 'gram'");
  const std::size_t dim = gram_rows.size();
  if (ambient_dim && *ambient_dim != dim) bad("ambient_dim disagrees with the number of gram rows");
  if (basis.empty()) basis.assign(dim, "eps");
  if (basis.size() != dim) bad("basis has " + std::to_string(basis.size()) + " entries, expected " + std::to_string(dim));
  d.gram = Matrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (gram_rows[i].size() != dim) bad("gram row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < dim; ++j) d.gram(i, j) = gram_rows[i][j];
  }
  std::size_t ne = 0, nd = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    Weight u(dim);
    u[i] = 1;
    if (basis[i] == "eps") {
      d.basis_labels.push_back("eps" + std::to_string(++ne));
      d.eps.push_back(u);
    } else {
      d.basis_labels.push_back("delta" + std::to_string(++nd));
      d.delta.push_back(u);
    }
  }
  return finalize_datum(std::move(d));
}

RootDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::MalformedDatumFile, "cannot read datum file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str(), path);
}

std::string emit_datum(const RootDatum& datum) {
  std::ostringstream out;
  out << "family: " << datum.name() << '\n';
  out << "type_one: " << (datum.type_one() ? "true" : "false") << '\n';
  out << "ambient_dim: " << datum.dim() << '\n';
  out << "basis:";
  for (const auto& label : datum.basis_labels()) out << ' ' << (label.rfind("eps", 0) == 0 ? "eps" : "delta");
  out << '\n';
  for (std::size_t i = 0; i < datum.dim(); ++i) {
    out << "gram:";
    for (std::size_t j = 0; j < datum.dim(); ++j) out << ' ' << to_string(datum.gram()(i, j));
    out << '\n';
  }
  for (const Root& r : datum.simple_roots())
    out << "simple: " << root_text(r.weight) << " ; " << (r.parity == Parity::Even ? "even" : "odd") << '\n';
  for (const Root& r : datum.positive_even()) out << "positive_even: " << root_text(r.weight) << '\n';
  for (const Root& r : datum.positive_odd()) out << "positive_odd: " << root_text(r.weight) << '\n';
  return out.str();
}

}  // namespace superweyl
