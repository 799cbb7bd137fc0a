#include "superweyl_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "superweyl/atypical.hpp"
#include "superweyl/error.hpp"
#include "superweyl/numerator.hpp"
#include "superweyl/partitions.hpp"
#include "superweyl/unifac.hpp"
#include "superweyl/weight_expr.hpp"
#include "superweyl/weyl.hpp"
#include "superweyl_cli/acceptance.hpp"

namespace superweyl::cli {

namespace {

struct Common {
  std::string family;
  int m = -1;
  int n = -1;
  std::string datum_file;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--family", c.family, "sl, osp1, osp2, G3 or F4")
      ->check(CLI::IsMember({"sl", "osp1", "osp2", "G3", "F4"}, CLI::ignore_case));
  sub->add_option("--m", c.m, "rows of sl(m,n)");
  sub->add_option("--n", c.n, "columns of sl(m,n); rank for osp1/osp2");
  sub->add_option("--datum", c.datum_file, "datum file instead of --family");
  sub->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  sub->add_option("--seed", c.seed, "seed for randomized commands");
}

RootDatum load(const Common& c) {
  if (!c.datum_file.empty()) {
    if (!c.family.empty()) throw CLI::ValidationError("--datum and --family are exclusive");
    return load_datum_file(c.datum_file);
  }
  std::string f = c.family;
  std::transform(f.begin(), f.end(), f.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (f.empty()) throw CLI::RequiredError("--family or --datum");
  if (f == "sl") {
    if (c.m < 0 || c.n < 0) throw CLI::RequiredError("--m and --n");
    return build_datum(AlgebraDescriptor::sl(c.m, c.n));
  }
  if (f == "osp1" || f == "osp2") {
    if (c.n < 0) throw CLI::RequiredError("--n");
    return build_datum(f == "osp1" ? AlgebraDescriptor::osp1(c.n) : AlgebraDescriptor::osp2(c.n));
  }
  return build_datum(f == "g3" ? AlgebraDescriptor::g3() : AlgebraDescriptor::f4());
}

class Printer {
 public:
  Printer(std::ostream& out, const std::string& format) : out_(out), structured_(format == "structured") {}

  void field(const std::string& key, const std::string& value) {
    out_ << key << (structured_ ? ": " : " = ") << value << '\n';
  }

 private:
  std::ostream& out_;
  bool structured_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string signature_string(const Signature& s) {
  std::vector<std::string> parts;
  for (auto e : s) parts.push_back(std::to_string(e));
  return "(" + join(parts, ",") + ")";
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::vector<std::size_t> index_list(const std::string& src, std::size_t limit, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(src);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      if (v < 1 || static_cast<std::size_t>(v) > limit) {
        fail(ErrorKind::UnknownSymbol, what + " index " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
      }
      out.push_back(static_cast<std::size_t>(v) - 1);
    } catch (const std::logic_error&) {
      fail(ErrorKind::ParseError, "bad " + what + " list '" + src + "'");
    }
  }
  return out;
}

std::string factor_name(const FactorRef& f, bool whole) {
  const std::string w = (f.side == Side::Lhs ? "lhs" : "rhs") + std::to_string(f.index + 1);
  return whole ? "U(" + w + ")" : "U_" + std::to_string(f.component + 1) + "(" + w + ")";
}

void print_match(Printer& p, const MatchReport& r, bool whole) {
  p.field("conclusion", std::string(conclusion_name(r.conclusion)));
  p.field("products_equal", bool_string(r.products_equal));
  p.field("r_equals_s", bool_string(r.r_equals_s));
  p.field("weight_sums_equal", bool_string(r.weight_sums_equal));
  p.field("sigma_hypothesis", bool_string(r.sigma_hypothesis_holds));
  for (const auto& [a, b] : r.pairing) p.field("pair", factor_name(a, whole) + " <-> " + factor_name(b, whole));
  if (!r.peeling.empty()) {
    std::vector<std::string> order;
    for (const auto& f : r.peeling) order.push_back(factor_name(f, whole));
    p.field("peeling", join(order, " "));
  }
  for (const auto& note : r.notes) p.field("note", note);
}

int cmd_datum(const Common& c, bool emit, std::ostream& out) {
  const RootDatum d = load(c);
  if (emit) {
    out << emit_datum(d);
    return kOk;
  }
  Printer p(out, c.format);
  p.field("datum", d.name());
  p.field("type", d.type_one() ? "I" : "II");
  p.field("basis", join(d.basis_labels(), " "));
  for (std::size_t i = 0; i < d.simple_roots().size(); ++i) {
    const Root& r = d.simple_roots()[i];
    p.field("simple[" + std::to_string(i + 1) + "]",
            format_weight(r.weight, d) + (r.parity == Parity::Even ? " ; even" : r.isotropic ? " ; odd isotropic" : " ; odd"));
  }
  p.field("positive_even", std::to_string(d.positive_even().size()));
  p.field("positive_odd", std::to_string(d.positive_odd().size()));
  const auto labels = odd_root_labels(d);
  for (std::size_t i = 0; i < labels.size(); ++i) p.field("Z[g" + std::to_string(i + 1) + "]", labels[i]);
  p.field("rho", format_weight(d.rho(), d));
  p.field("tau", format_weight(d.tau(), d));
  std::vector<std::string> comps;
  for (const auto& comp : d.components()) {
    std::vector<std::string> names;
    for (std::size_t i : comp) names.push_back("a" + std::to_string(i + 1));
    comps.push_back("{" + join(names, ",") + "}");
  }
  p.field("components", join(comps, " "));
  p.field("weyl_order", std::to_string(generate_group(d)->size()));
  return kOk;
}

int cmd_group(const Common& c, const std::string& which, std::size_t limit, std::ostream& out) {
  const RootDatum d = load(c);
  const Component comp = which == "1" ? Component::First : which == "2" ? Component::Second : Component::All;
  const auto group = generate_group(d, comp);
  Printer p(out, c.format);
  p.field("datum", d.name());
  p.field("component", which);
  p.field("order", std::to_string(group->size()));
  for (std::size_t i = 0; i < group->size() && i < limit; ++i) {
    p.field("w[" + std::to_string(i + 1) + "]", word_string((*group)[i]) + " ; length " + std::to_string((*group)[i].length()));
  }
  return kOk;
}

int cmd_numerator(const Common& c, const std::string& weight, bool factor, int character, std::ostream& out) {
  const RootDatum d = load(c);
  const Weight w = parse_weight(weight, d);
  Printer p(out, c.format);
  p.field("datum", d.name());
  p.field("weight", format_weight(w, d));
  const auto names = x_names(d);
  if (factor) {
    const NumeratorFactors f = factor_numerator(d, w);
    p.field("dominant", std::string(dominance_name(f.dominance)));
    for (const Factor& fac : f.factors) {
      const std::string k = std::to_string(fac.component + 1);
      p.field("signature_" + k, signature_string(fac.signature));
      p.field("U_" + k, format_poly(fac.poly, names));
    }
  } else {
    p.field("dominant", std::string(dominance_name(require_typical_dominant(d, w))));
    p.field("signature", signature_string(full_signature(d, w)));
    p.field("U", format_poly(numerator(d, w), names));
  }
  if (character > 0) p.field("character", format_poly(normalized_character(d, w, character), x_names(d, true)));
  return kOk;
}

int cmd_kgraph(const Common& c, const std::string& subset, const std::string& tree, std::ostream& out) {
  const RootDatum d = load(c);
  SimpleGraph g;
  if (!tree.empty()) {
    const auto pq = index_list(tree, 1000, "p,q");
    if (pq.size() != 2) fail(ErrorKind::ParseError, "--tree takes two indices p,q");
    g = tree_graph_gpq(d, pq[0] + 1, pq[1] + 1);
  } else {
    g = even_graph(d, subset.empty() ? std::vector<std::size_t>{} : index_list(subset, d.rank0(), "subset"));
  }
  Printer p(out, c.format);
  p.field("datum", d.name());
  std::vector<std::string> verts, edges;
  for (std::size_t v = 0; v < g.size(); ++v) verts.push_back(g.vertex_name(v));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (g.adj[u] & (1u << v)) edges.push_back(g.vertex_name(u) + "-" + g.vertex_name(v));
  p.field("vertices", join(verts, " "));
  p.field("edges", edges.empty() ? "none" : join(edges, " "));
  std::vector<std::string> sets;
  for (const auto& s : totally_disconnected_subsets(g)) {
    std::vector<std::string> names;
    for (std::size_t v : s) names.push_back(g.vertex_name(v));
    sets.push_back("{" + join(names, ",") + "}");
  }
  p.field("independent_sets", join(sets, " "));
  const PartitionReport r = k_partition_counts(g);
  std::vector<std::string> counts;
  for (auto n : r.counts) counts.push_back(std::to_string(n));
  p.field("c_k", join(counts, " "));
  p.field("k", to_string(r.k_value));
  return kOk;
}

void print_weights(Printer& p, const RootDatum& d, const std::string& side, const std::vector<Weight>& ws) {
  for (std::size_t i = 0; i < ws.size(); ++i) {
    p.field(side + std::to_string(i + 1), format_weight(ws[i], d) + " ; signature " + signature_string(full_signature(d, ws[i])));
  }
}

int cmd_verify(const Common& c, const std::string& lhs, const std::string& rhs, std::ostream& out) {
  const RootDatum d = load(c);
  const auto l = parse_weight_list(lhs, d);
  const auto r = parse_weight_list(rhs, d);
  const MatchReport rep = verify_tensor_isomorphism(d, l, r);
  Printer p(out, c.format);
  p.field("datum", d.name());
  print_weights(p, d, "lhs", l);
  print_weights(p, d, "rhs", r);
  print_match(p, rep, false);
  return kOk;
}

int cmd_search(const Common& c, const SearchOptions& opt, std::ostream& out) {
  const RootDatum d = load(c);
  Printer p(out, c.format);
  p.field("datum", d.name());
  if (d.components().size() < 2) {
    p.field("hits", "0");
    p.field("note", "Pi_0 is connected, so unique factorization holds and there is nothing to search");
    return kOk;
  }
  const auto hits = search_counterexamples(d, opt);
  p.field("hits", std::to_string(hits.size()));
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto& h = hits[i];
    std::vector<std::string> parts;
    for (const auto& co : h.omega_coefficients) {
      std::vector<std::string> v;
      for (int x : co) v.push_back(std::to_string(x));
      parts.push_back("(" + join(v, ",") + ")");
    }
    p.field("hit[" + std::to_string(i + 1) + "]", "lhs " + parts[0] + " " + parts[1] + " rhs " + parts[2] + " " + parts[3] +
                                                    " tau*" + std::to_string(h.tau_multiple) + " " +
                                                    std::string(conclusion_name(h.report.conclusion)));
  }
  return kOk;
}

int cmd_atypical_coeff(const Common& c, const std::string& weight, bool special, int ztrunc, const std::string& mode,
                       std::ostream& out) {
  const RootDatum d = load(c);
  const AtypicalContext ctx = make_atypical_context(d, parse_weight(weight, d), special, ztrunc);
  Printer p(out, c.format);
  p.field("datum", d.name());
  p.field("weight", format_weight(ctx.lambda, d));
  p.field("type", "Z[g" + std::to_string(ctx.gamma + 1) + "] = " + odd_root_labels(d)[ctx.gamma]);
  p.field("dominant", std::string(dominance_name(ctx.dominance)));
  p.field("ztrunc", std::to_string(ztrunc));
  std::optional<CoefficientValue> oracle, closed;
  if (mode != "closed") {
    oracle = coefficient_oracle(ctx);
    p.field("oracle", format_series(oracle->value));
  }
  if (mode != "oracle") {
    closed = closed_form_coefficient(ctx);
    p.field("closed_form", std::string(form_tag_name(closed->tag)) + " ; " + closed->form);
    p.field("closed", format_series(closed->value));
  }
  if (oracle && closed) p.field("verdict", series_equal_to(oracle->value, closed->value, ztrunc) ? "EQUAL" : "DIFFER");
  return kOk;
}

std::size_t parse_type(const std::string& spec, const RootDatum& d) {
  if (spec.size() > 1 && (spec[0] == 'g' || spec[0] == 'G') &&
      std::all_of(spec.begin() + 1, spec.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    return index_list(spec.substr(1), d.positive_odd().size(), "odd root").front();
  }
  const auto i = d.odd_root_index(parse_weight(spec, d));
  if (!i) fail(ErrorKind::UnknownSymbol, "'" + spec + "' is not a positive odd root");
  return *i;
}

int cmd_atypical_verify(const Common& c, const std::string& type, const std::string& lhs, const std::string& rhs,
                        int ztrunc, std::ostream& out) {
  const RootDatum d = load(c);
  const std::size_t g = parse_type(type, d);
  const auto l = parse_weight_list(lhs, d);
  const auto r = parse_weight_list(rhs, d);
  for (const auto* side : {&l, &r}) {
    for (const Weight& w : *side) {
      const Atypicality a = atypicality_type(d, w);
      if (a.count != 1) fail(ErrorKind::NotSinglyAtypical, format_weight(w, d) + " is not singly atypical");
      if (*a.odd_root != g) {
        fail(ErrorKind::MixedAtypicalityTypes,
             format_weight(w, d) + " has type Z[g" + std::to_string(*a.odd_root + 1) + "], not Z[g" + std::to_string(g + 1) + "]");
      }
    }
  }
  const MatchReport rep = atypical_match(d, l, r, ztrunc);
  Printer p(out, c.format);
  p.field("datum", d.name());
  p.field("type", "Z[g" + std::to_string(g + 1) + "] = " + odd_root_labels(d)[g]);
  print_weights(p, d, "lhs", l);
  print_weights(p, d, "rhs", r);
  print_match(p, rep, true);
  return kOk;
}

int cmd_selftest(std::uint64_t seed, std::ostream& out) {
  const auto results = run_acceptance(seed, out);
  const auto passed = std::count_if(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters, Weyl numerators and factorization checks for basic classical Lie superalgebras", "superweyl"};
  app.require_subcommand(1);
  Common c;

  auto* datum = app.add_subcommand("datum", "print a root datum");
  add_common(datum, c);
  bool emit = false;
  datum->add_flag("--emit", emit, "print in datum file format");

  auto* group = app.add_subcommand("group", "enumerate the Weyl group generated by Pi_0");
  add_common(group, c);
  std::string component = "all";
  std::size_t group_limit = 50;
  group->add_option("--component", component, "all, 1 or 2")->check(CLI::IsMember({"all", "1", "2"}));
  group->add_option("--limit", group_limit, "number of elements to list");

  auto* num = app.add_subcommand("numerator", "normalized Weyl numerator of a typical weight");
  add_common(num, c);
  std::string weight;
  bool factor = false;
  int character = 0;
  num->add_option("--weight", weight, "weight expression")->required();
  num->add_flag("--factor", factor, "split into component factors");
  num->add_option("--character", character, "also print the normalized character to this total degree");

  auto* kgraph = app.add_subcommand("kgraph", "k-partition counts and k(G) of an even subdiagram");
  add_common(kgraph, c);
  std::string subset, tree;
  kgraph->add_option("--subset", subset, "comma-separated Pi_0 indices (1-based)");
  kgraph->add_option("--tree", tree, "p,q for the fused graph G_pq of sl(m+1,n+1)");

  auto* verify = app.add_subcommand("verify", "compare two tensor products of typical modules");
  add_common(verify, c);
  std::string lhs, rhs;
  verify->add_option("--lhs", lhs, "weights separated by ';'")->required();
  verify->add_option("--rhs", rhs, "weights separated by ';'")->required();

  auto* search = app.add_subcommand("search", "search for swapped-signature counterexamples");
  add_common(search, c);
  SearchOptions sopt;
  std::size_t search_limit = 0;
  search->add_option("--bound", sopt.bound, "largest omega coefficient")->check(CLI::NonNegativeNumber);
  search->add_option("--tau-mult", sopt.tau_multiple, "initial multiple of tau");
  search->add_option("--limit", search_limit, "stop after this many hits");
  search->add_option("--threads", sopt.threads, "worker threads (0 = all cores)");

  auto* acoeff = app.add_subcommand("atypical-coeff", "coefficient of X^lambda in -log U for a singly atypical weight");
  add_common(acoeff, c);
  bool special = false, only_oracle = false, only_closed = false, both = false;
  int ztrunc = kDefaultZTruncation;
  acoeff->add_option("--weight", weight, "weight expression")->required();
  acoeff->add_flag("--special", special, "use the special-weight formula (G3, F4)");
  acoeff->add_option("--ztrunc", ztrunc, "Z truncation degree")->check(CLI::NonNegativeNumber);
  auto* fo = acoeff->add_flag("--oracle", only_oracle, "brute-force expansion only");
  auto* fc = acoeff->add_flag("--closed", only_closed, "closed form only");
  auto* fb = acoeff->add_flag("--both", both, "both, with a verdict (default)");
  fo->excludes(fc)->excludes(fb);
  fc->excludes(fb);

  auto* averify = app.add_subcommand("atypical-verify", "compare products of singly atypical numerators of one type");
  add_common(averify, c);
  std::string type;
  averify->add_option("--type", type, "odd root as a weight expression, or gK")->required();
  averify->add_option("--lhs", lhs, "weights separated by ';'")->required();
  averify->add_option("--rhs", rhs, "weights separated by ';'")->required();
  averify->add_option("--ztrunc", ztrunc, "Z truncation degree")->check(CLI::NonNegativeNumber);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", c.seed, "seed for randomized criteria");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*datum) return cmd_datum(c, emit, out);
    if (*group) return cmd_group(c, component, group_limit, out);
    if (*num) return cmd_numerator(c, weight, factor, character, out);
    if (*kgraph) return cmd_kgraph(c, subset, tree, out);
    if (*verify) return cmd_verify(c, lhs, rhs, out);
    if (*search) {
      if (search_limit) sopt.limit = search_limit;
      return cmd_search(c, sopt, out);
    }
    if (*acoeff) {
      const std::string mode = only_oracle ? "oracle" : only_closed ? "closed" : "both";
      return cmd_atypical_coeff(c, weight, special, ztrunc, mode, out);
    }
    if (*averify) return cmd_atypical_verify(c, type, lhs, rhs, ztrunc, out);
    if (*selftest) return cmd_selftest(c.seed, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::Internal) return kInternal;
    return is_input_error(e.kind()) ? kUsage : kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace superweyl::cli
