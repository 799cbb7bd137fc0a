#include "superweyl/atypical.hpp"

#include <algorithm>

#include "superweyl/error.hpp"
#include "superweyl/numerator.hpp"
#include "superweyl/weight_expr.hpp"
#include "superweyl/weyl.hpp"

namespace superweyl {

std::string_view form_tag_name(FormTag t) {
  switch (t) {
    case FormTag::None: return "none";
    case FormTag::Enumeration: return "enumeration";
    case FormTag::KRatio: return "K-ratio";
    case FormTag::MForm: return "M-form";
    case FormTag::ASum: return "A-sum";
  }
  return "?";
}

namespace {

bool atypical_family(Family f) { return f == Family::A || f == Family::C || f == Family::G3 || f == Family::F4; }

std::size_t nsyms(const AtypicalContext& ctx) { return ctx.datum->positive_odd().size(); }

ZSeries konst(const AtypicalContext& ctx, const Rational& c) { return ZSeries::constant(nsyms(ctx), ctx.z_truncation, c); }

// a + Z_k
ZSeries plus_z(const AtypicalContext& ctx, std::size_t k, const Rational& a = 1) {
  return konst(ctx, a) + ZSeries::symbol(nsyms(ctx), ctx.z_truncation, k);
}

std::size_t odd_index(const RootDatum& datum, const Weight& root) {
  const auto i = datum.odd_root_index(root);
  ensure(i.has_value(), "image of the atypicality type is not a positive odd root");
  return *i;
}

Weight reflect(const RootDatum& datum, const Weight& v, std::size_t i) {
  const Weight& a = datum.alpha(i).weight;
  return sub(v, scale(datum.pairing(v, a), a));
}

// Index of w·β for w the product of the reflections in `block` (pairwise orthogonal).
std::size_t block_image(const RootDatum& datum, std::uint32_t block, std::size_t beta) {
  Weight v = datum.positive_odd()[beta].weight;
  for (std::size_t i = 0; i < datum.rank0(); ++i)
    if (block & (1u << i)) v = reflect(datum, v, i);
  return odd_index(datum, v);
}

// M = (1+Z_β)/(2+Z_β)
ZSeries m_factor(const AtypicalContext& ctx) { return plus_z(ctx, ctx.gamma) * plus_z(ctx, ctx.gamma, 2).inverse(); }

// Contribution of one block w(J) to ξ_1: (1+Z_β)/(1+Z_{wβ}), or M(2+Z_{wβ})/(1+Z_{wβ}).
ZSeries block_factor(const AtypicalContext& ctx, std::size_t image) {
  const ZSeries inv = plus_z(ctx, image).inverse();
  if (ctx.special) return m_factor(ctx) * plus_z(ctx, image, 2) * inv;
  return plus_z(ctx, ctx.gamma) * inv;
}

// c(w) in the Weyl sum.
ZSeries weyl_prefactor(const AtypicalContext& ctx, std::size_t image) {
  const ZSeries inv = plus_z(ctx, image).inverse();
  if (ctx.special) return (plus_z(ctx, image, 2) * inv).scaled(Rational(1, 2));
  return inv;
}

ZPoly numerator_with(const AtypicalContext& ctx, Truncation trunc) {
  const RootDatum& d = *ctx.datum;
  const Weight eta = add(ctx.lambda, d.rho());
  const Weight& beta = d.positive_odd()[ctx.gamma].weight;
  ZPoly u(d.rank0(), konst(ctx, 0), trunc);
  for (const WeylElement& w : *generate_group(d)) {
    const Monomial m = weyl_term(d, w, eta);
    if (!trunc.admits(m)) continue;
    ZSeries c = weyl_prefactor(ctx, odd_index(d, act(w, beta)));
    if (w.length() % 2) c = -c;
    u.add_term(m, c);
  }
  return u;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

Rational sign_pow(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

std::string z(std::size_t k) { return "Z[g" + std::to_string(k + 1) + "]"; }
std::string one_z(std::size_t k) { return "(1+" + z(k) + ")"; }
std::string two_z(std::size_t k) { return "(2+" + z(k) + ")"; }

// (1+Z_num)^e / Π (1+Z_den)
ZSeries ratio(const AtypicalContext& ctx, std::size_t num, int e, const std::vector<std::size_t>& den) {
  ZSeries out = konst(ctx, 1);
  for (int i = 0; i < e; ++i) out = out * plus_z(ctx, num);
  for (std::size_t k : den) out = out * plus_z(ctx, k).inverse();
  return out;
}

std::string ratio_form(std::size_t num, int e, const std::vector<std::size_t>& den) {
  std::string s = one_z(num) + (e > 1 ? "^" + std::to_string(e) : "") + "/";
  if (den.size() > 1) s += "(";
  for (std::size_t k : den) s += one_z(k);
  if (den.size() > 1) s += ")";
  return s;
}

// Block patterns of B_{p,q} = {α_{p−1}, α_p, β_{q−1}, β_q} in a partition of Π_0.
enum Pattern { F1, F2, G1, G2, G3P, G4, H1, NPattern };

Pattern classify(const std::vector<std::uint32_t>& blocks, std::size_t ap1, std::size_t ap, std::size_t bq1,
                 std::size_t bq) {
  auto block_of = [&](std::size_t v) {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b] & (1u << v)) return b;
    fail(ErrorKind::Internal, "vertex missing from partition");
  };
  const std::size_t a1 = block_of(ap1), a2 = block_of(ap), b1 = block_of(bq1), b2 = block_of(bq);
  ensure(a1 != a2 && b1 != b2, "adjacent roots share a block");
  const bool p11 = a1 == b1, p12 = a1 == b2, p21 = a2 == b1, p22 = a2 == b2;
  if (p22 && p11) return F1;
  if (p21 && p12) return F2;
  if (p11) return G1;
  if (p12) return G2;
  if (p21) return G3P;
  if (p22) return G4;
  return H1;
}

struct PatternCounts {
  // counts[pattern][k-1]: ordered k-partitions of Π_0 with that pattern
  std::array<std::vector<std::uint64_t>, NPattern> counts;
};

PatternCounts pattern_counts(const RootDatum& datum, std::size_t p, std::size_t q) {
  const auto m = static_cast<std::size_t>(datum.descriptor().m);
  const SimpleGraph g = even_graph(datum);
  if (g.size() > kDefaultGraphCap) fail(ErrorKind::GraphTooLarge, "too many even simple roots to enumerate");
  PatternCounts pc;
  for (auto& c : pc.counts) c.assign(g.size(), 0);
  const std::size_t ap1 = p - 2, ap = p - 1, bq1 = m + q - 2, bq = m + q - 1;
  for_each_partition(g, [&](const std::vector<std::uint32_t>& blocks) {
    pc.counts[classify(blocks, ap1, ap, bq1, bq)][blocks.size() - 1] += factorial(blocks.size());
  });
  return pc;
}

void require_interior(const RootDatum& datum, std::size_t p, std::size_t q) {
  if (datum.descriptor().family != Family::A) fail(ErrorKind::WrongFamily, "needs sl(m+1,n+1)");
  const auto m = static_cast<std::size_t>(datum.descriptor().m);
  const auto n = static_cast<std::size_t>(datum.descriptor().n);
  if (p < 2 || p > m || q < 2 || q > n) {
    fail(ErrorKind::IndexNotInterior, "need 2 <= p <= " + std::to_string(m) + " and 2 <= q <= " + std::to_string(n));
  }
}

std::size_t gamma_pq(const RootDatum& d, std::size_t i, std::size_t j) {
  return odd_index(d, sub(d.eps_vectors().at(i - 1), d.delta_vectors().at(j - 1)));
}

// (p, q) with γ = ε_p − δ_q, 1-based.
std::pair<std::size_t, std::size_t> sl_type(const AtypicalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  for (std::size_t i = 1; i <= d.eps_vectors().size(); ++i)
    for (std::size_t j = 1; j <= d.delta_vectors().size(); ++j)
      if (gamma_pq(d, i, j) == ctx.gamma) return {i, j};
  fail(ErrorKind::Internal, "odd root of sl is not of the form eps_i - delta_j");
}

std::string counts_string(const std::vector<std::uint64_t>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

CoefficientValue a_sum(const AtypicalContext& ctx, std::size_t p, std::size_t q) {
  const RootDatum& d = *ctx.datum;
  const PatternCounts pc = pattern_counts(d, p, q);
  ensure(pc.counts[F1] == pc.counts[F2], "the two 2-part patterns occur unequally often");
  for (Pattern g : {G2, G3P, G4}) ensure(pc.counts[G1] == pc.counts[g], "the 3-part patterns occur unequally often");
  const auto f = table_functions(d, p, q, ctx.z_truncation);
  const ZSeries fsum = f[0] + f[1];
  const ZSeries gsum = f[2] + f[3] + f[4] + f[5];
  const std::size_t n0 = d.rank0();
  CoefficientValue out{konst(ctx, 0), FormTag::ASum, ""};
  for (std::size_t k = 2; k <= n0; ++k) {
    const Rational w = sign_pow(n0 + k) / Rational(static_cast<unsigned long>(k));
    auto r = [&](Pattern pt) { return Rational(mpz_class(std::to_string(pc.counts[pt][k - 1]))); };
    out.value += (fsum.scaled(r(F1)) + gsum.scaled(r(G1)) + f[6].scaled(r(H1))).scaled(w);
  }
  out.form = "A = sum_k A_k, p=" + std::to_string(p) + " q=" + std::to_string(q) + ", r2=" + counts_string(pc.counts[F1]) +
             " r3=" + counts_string(pc.counts[G1]) + " r4=" + counts_string(pc.counts[H1]);
  return out;
}

CoefficientValue k_ratio(const AtypicalContext& ctx, std::size_t num, const std::vector<std::size_t>& den) {
  const Rational K = k_partition_counts(even_graph(*ctx.datum)).k_value;
  const int e = den.size() == 2 ? 2 : 1;
  return {ratio(ctx, num, e, den).scaled(K), FormTag::KRatio, "K" + ratio_form(num, e, den) + ", K=" + to_string(K)};
}

CoefficientValue sl_m1(const AtypicalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  const std::size_t m = d.eps_vectors().size();
  const std::size_t t = sl_type(ctx).first;
  auto b = [&](std::size_t i) { return gamma_pq(d, i, 1); };
  if (t == 1) return k_ratio(ctx, b(1), {b(2)});
  if (t == m) return k_ratio(ctx, b(m), {b(m - 1)});
  return k_ratio(ctx, b(t), {b(t - 1), b(t + 1)});
}

CoefficientValue osp2(const AtypicalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  const auto n = static_cast<std::size_t>(d.descriptor().n);
  const Weight& e1 = d.eps_vectors()[0];
  auto g = [&](std::size_t j) { return odd_index(d, add(e1, d.delta_vectors()[j - 1])); };
  auto gp = [&](std::size_t j) { return odd_index(d, sub(e1, d.delta_vectors()[j - 1])); };
  for (std::size_t j = 1; j <= n; ++j) {
    for (bool primed : {false, true}) {
      auto same = [&](std::size_t i) { return primed ? gp(i) : g(i); };
      auto other = [&](std::size_t i) { return primed ? g(i) : gp(i); };
      if (same(j) != ctx.gamma) continue;
      if (j == 1) return k_ratio(ctx, same(1), {same(2)});
      if (j == n) return k_ratio(ctx, same(n), {same(n - 1), other(n)});
      return k_ratio(ctx, same(j), {same(j - 1), same(j + 1)});
    }
  }
  fail(ErrorKind::Internal, "odd root of osp(2,2n) is not eps1 +- delta_j");
}

CoefficientValue m_form(const AtypicalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  const Weight& beta = d.positive_odd()[ctx.gamma].weight;
  const std::size_t b = ctx.gamma;
  auto s = [&](std::vector<std::size_t> word) {
    Weight v = beta;
    for (std::size_t i : word) v = reflect(d, v, i);
    return odd_index(d, v);
  };
  // Π (1+Z_β)/(1+Z_k), or Π M(2+Z_k)/(1+Z_k) for special weights
  auto blocks = [&](const std::vector<std::size_t>& images) {
    ZSeries out = konst(ctx, 1);
    for (std::size_t k : images) out = out * block_factor(ctx, k);
    return out;
  };
  auto form = [&](const std::vector<std::size_t>& images) {
    const std::string e = images.size() > 1 ? "^" + std::to_string(images.size()) : "";
    std::string num, den;
    for (std::size_t k : images) {
      if (ctx.special) num += two_z(k);
      den += one_z(k);
    }
    if (ctx.special) return "M" + e + num + "/(" + den + ")";
    return one_z(b) + e + "/(" + den + ")";
  };
  const std::string mdef = ctx.special ? ", M=" + one_z(b) + "/" + two_z(b) : "";
  if (d.descriptor().family == Family::G3) {
    const std::vector<std::size_t> im = {s({0}), s({1})};
    return {blocks(im), FormTag::MForm, form(im) + mdef};
  }
  const std::vector<std::size_t> three = {s({0}), s({1}), s({2})};
  const std::vector<std::size_t> two = {s({0, 2}), s({1})};
  return {blocks(three).scaled(2) - blocks(two), FormTag::MForm, "2" + form(three) + " - " + form(two) + mdef};
}

}  // namespace

AtypicalContext make_atypical_context(const RootDatum& datum, const Weight& lambda, bool special, int z_truncation) {
  const Family f = datum.descriptor().family;
  if (!atypical_family(f)) fail(ErrorKind::WrongFamily, "atypical formulas cover sl(m+1,n+1), osp(2,2n), G(3), F(4)");
  if (special && f != Family::G3 && f != Family::F4) fail(ErrorKind::WrongFamily, "special weights exist only for G(3) and F(4)");
  if (z_truncation < 0) fail(ErrorKind::TruncationTooSmall, "Z truncation must be non-negative");
  datum.check_weight(lambda);
  const Atypicality a = atypicality_type(datum, lambda);
  if (a.count != 1) {
    fail(ErrorKind::NotSinglyAtypical, "weight has " + std::to_string(a.count) + " vanishing isotropic pairings");
  }
  AtypicalContext ctx;
  ctx.datum = &datum;
  ctx.lambda = lambda;
  ctx.gamma = *a.odd_root;
  ctx.special = special;
  ctx.z_truncation = z_truncation;
  ctx.dominance = require_dominant(datum, lambda);
  return ctx;
}

Weight singly_atypical_weight(const RootDatum& datum, const std::vector<Rational>& omega_coefficients, std::size_t gamma) {
  if (omega_coefficients.size() != datum.rank0()) fail(ErrorKind::DimensionMismatch, "one coefficient per even simple root");
  if (gamma >= datum.positive_odd().size() || !datum.positive_odd()[gamma].isotropic) {
    fail(ErrorKind::IndexOutOfRange, "atypicality type must be an isotropic positive odd root");
  }
  Weight zdir;
  switch (datum.descriptor().family) {
    case Family::A:
      zdir = datum.zero();
      for (const Weight& e : datum.eps_vectors()) zdir = add(zdir, e);
      break;
    case Family::C: zdir = datum.eps_vectors()[0]; break;
    case Family::G3:
    case Family::F4: zdir = datum.delta_vectors()[0]; break;
    default: fail(ErrorKind::WrongFamily, "no atypical weights for " + datum.name());
  }
  Weight lambda = datum.zero();
  for (std::size_t i = 0; i < omega_coefficients.size(); ++i)
    if (omega_coefficients[i] != 0) lambda = add(lambda, scale(omega_coefficients[i], fundamental_weight(datum, i)));
  const Weight& g = datum.positive_odd()[gamma].weight;
  const Rational zg = datum.inner(zdir, g);
  ensure(zg != 0, "central direction is orthogonal to an odd root");
  lambda = add(lambda, scale(-datum.inner(add(lambda, datum.rho()), g) / zg, zdir));
  const Atypicality a = atypicality_type(datum, lambda);
  if (a.count != 1) fail(ErrorKind::NotSinglyAtypical, "these coefficients give more than one vanishing pairing");
  return lambda;
}

ZPoly atypical_numerator(const AtypicalContext& ctx) { return numerator_with(ctx, {}); }

CoefficientValue coefficient_oracle(const AtypicalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  const std::vector<std::size_t> all = all_indices(d.rank0());
  const Monomial target = x_lambda(d, ctx.lambda, all);
  Truncation t;
  t.total = total_degree(target);
  t.caps = target;
  ZPoly u = numerator_with(ctx, t);
  ZSeries norm = plus_z(ctx, ctx.gamma);
  if (ctx.special) norm = (norm * plus_z(ctx, ctx.gamma, 2).inverse()).scaled(2);
  u = poly_scale(u, norm);
  const ZPoly l = neg_log(u, *t.total, t.caps);
  return {l.coefficient(target), FormTag::None, "oracle"};
}

CoefficientValue coefficient_by_partitions(const AtypicalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  const SimpleGraph g = even_graph(d);
  if (g.size() > kDefaultGraphCap) fail(ErrorKind::GraphTooLarge, "too many even simple roots to enumerate");
  CoefficientValue out{konst(ctx, 0), FormTag::Enumeration, "sum over ordered partitions of Pi_0"};
  for_each_partition(g, [&](const std::vector<std::uint32_t>& blocks) {
    const std::size_t k = blocks.size();
    ZSeries term = konst(ctx, 1);
    for (std::uint32_t b : blocks) term = term * block_factor(ctx, block_image(d, b, ctx.gamma));
    // k! orderings, each weighted (−1)^k/k · (−1)^{|Π_0|}
    const Rational w = sign_pow(k + g.size()) * Rational(mpz_class(std::to_string(factorial(k - 1))));
    out.value += term.scaled(w);
  });
  return out;
}

CoefficientValue closed_form_coefficient(const AtypicalContext& ctx) {
  const RootDatum& d = *ctx.datum;
  const auto& desc = d.descriptor();
  switch (desc.family) {
    case Family::A:
      if (desc.n == 0 && d.eps_vectors().size() >= 2) return sl_m1(ctx);
      if (desc.m >= 1 && desc.n >= 1) {
        const auto [p, q] = sl_type(ctx);
        if (p >= 2 && p <= static_cast<std::size_t>(desc.m) && q >= 2 && q <= static_cast<std::size_t>(desc.n)) {
          return a_sum(ctx, p, q);
        }
      }
      break;
    case Family::C:
      if (desc.n >= 2) return osp2(ctx);
      break;
    case Family::G3:
    case Family::F4: return m_form(ctx);
    default: fail(ErrorKind::WrongFamily, "no closed form for " + d.name());
  }
  return coefficient_by_partitions(ctx);
}

bool series_equal_to(const ZSeries& a, const ZSeries& b, int t) {
  if (t > a.truncation() || t > b.truncation()) {
    fail(ErrorKind::TruncationTooSmall, "comparison at degree " + std::to_string(t) + " exceeds the series truncation");
  }
  return a.truncated(t) == b.truncated(t);
}

std::array<ZSeries, 7> table_functions(const RootDatum& datum, std::size_t p, std::size_t q, int z_truncation) {
  require_interior(datum, p, q);
  AtypicalContext ctx;
  ctx.datum = &datum;
  ctx.z_truncation = z_truncation;
  auto G = [&](std::size_t i, std::size_t j) { return gamma_pq(datum, i, j); };
  const std::size_t c = G(p, q);
  return {
      ratio(ctx, c, 2, {G(p + 1, q + 1), G(p - 1, q - 1)}),
      ratio(ctx, c, 2, {G(p + 1, q - 1), G(p - 1, q + 1)}),
      ratio(ctx, c, 3, {G(p - 1, q - 1), G(p + 1, q), G(p, q + 1)}),
      ratio(ctx, c, 3, {G(p - 1, q + 1), G(p + 1, q), G(p, q - 1)}),
      ratio(ctx, c, 3, {G(p + 1, q - 1), G(p - 1, q), G(p, q + 1)}),
      ratio(ctx, c, 3, {G(p + 1, q + 1), G(p - 1, q), G(p, q - 1)}),
      ratio(ctx, c, 4, {G(p - 1, q), G(p, q - 1), G(p + 1, q), G(p, q + 1)}),
  };
}

F1Report coefficient_f1(const RootDatum& datum, std::size_t p, std::size_t q) {
  require_interior(datum, p, q);
  F1Report r;
  const PatternCounts pc = pattern_counts(datum, p, q);
  r.r2 = pc.counts[F1];
  const std::size_t n0 = datum.rank0();
  r.by_enumeration = 0;
  for (std::size_t k = 1; k <= r.r2.size(); ++k) {
    r.by_enumeration += sign_pow(n0 + k) * Rational(mpz_class(std::to_string(r.r2[k - 1])), mpz_class(static_cast<unsigned long>(k)));
  }
  r.by_enumeration.canonicalize();
  r.tree = k_partition_counts(tree_graph_gpq(datum, p, q));
  r.by_tree = r.tree.k_value;
  return r;
}

MatchReport atypical_match(const RootDatum& datum, const std::vector<Weight>& nus, const std::vector<Weight>& mus,
                           int z_truncation) {
  std::vector<AtypicalContext> lc, rc;
  for (const Weight& w : nus) lc.push_back(make_atypical_context(datum, w, false, z_truncation));
  for (const Weight& w : mus) rc.push_back(make_atypical_context(datum, w, false, z_truncation));
  std::optional<std::size_t> type;
  for (const auto* side : {&lc, &rc}) {
    for (const auto& c : *side) {
      if (type && *type != c.gamma) fail(ErrorKind::MixedAtypicalityTypes, "all weights must share one atypicality type");
      type = c.gamma;
    }
  }

  MatchReport rep;
  rep.r_equals_s = nus.size() == mus.size();
  Weight ls = datum.zero(), rs = datum.zero();
  for (const Weight& w : nus) ls = add(ls, w);
  for (const Weight& w : mus) rs = add(rs, w);
  rep.weight_sums_equal = datum.equivalent(ls, rs);

  auto side_product = [&](const std::vector<AtypicalContext>& cs) {
    ZPoly acc = ZPoly::constant(datum.rank0(), ZSeries(datum.positive_odd().size(), z_truncation),
                                ZSeries::constant(datum.positive_odd().size(), z_truncation, 1));
    for (const auto& c : cs) acc = poly_mul(acc, atypical_numerator(c));
    return acc;
  };
  rep.products_equal = side_product(lc) == side_product(rc);
  if (!rep.products_equal) {
    rep.conclusion = Conclusion::ProductsUnequal;
    return rep;
  }
  ensure(rep.r_equals_s, "equal atypical products with different numbers of factors");

  const std::size_t n = nus.size();
  std::vector<bool> used(n, false);
  rep.sigma.assign(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    const Signature s = full_signature(datum, nus[p]);
    for (std::size_t q = 0; q < n; ++q) {
      if (!used[q] && full_signature(datum, mus[q]) == s) {
        rep.sigma[p] = q;
        used[q] = true;
        break;
      }
    }
    ensure(rep.sigma[p] < n, "equal atypical products without matching X^nu");
    rep.pairing.push_back({{Side::Lhs, p, 0}, {Side::Rhs, rep.sigma[p], 0}});
    rep.peeling.push_back({Side::Lhs, p, 0});
  }
  std::stable_sort(rep.peeling.begin(), rep.peeling.end(), [&](const FactorRef& a, const FactorRef& b) {
    const Signature sa = full_signature(datum, nus[a.index]), sb = full_signature(datum, nus[b.index]);
    int da = 0, db = 0;
    for (auto e : sa) da += e;
    for (auto e : sb) db += e;
    return da < db;
  });
  rep.sigma_hypothesis_holds = true;
  bool pairwise = true;
  for (std::size_t p = 0; p < n; ++p) pairwise = pairwise && datum.equivalent(nus[p], mus[rep.sigma[p]]);
  rep.conclusion = pairwise ? Conclusion::UniqueFactorization : Conclusion::CentralShift;
  return rep;
}

std::vector<std::string> odd_root_labels(const RootDatum& datum) {
  std::vector<std::string> out;
  for (const Root& r : datum.positive_odd()) out.push_back(format_weight(r.weight, datum));
  return out;
}

}  // namespace superweyl
