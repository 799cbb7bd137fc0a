#include "superweyl/weight_expr.hpp"

#include <cctype>

#include "superweyl/error.hpp"

namespace superweyl {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const RootDatum& datum) : src_(src), datum_(datum) {}

  Weight parse() {
    Weight acc = datum_.zero();
    Rational sign = 1;
    skip();
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    acc = add(acc, scale(sign, term()));
    while (true) {
      skip();
      if (pos_ == src_.size()) break;
      const char c = src_[pos_];
      if (c != '+' && c != '-') error("expected '+' or '-'");
      ++pos_;
      acc = add(acc, scale(Rational(c == '-' ? -1 : 1), term()));
    }
    return acc;
  }

 private:
  [[noreturn]] void error(const std::string& msg, ErrorKind kind = ErrorKind::ParseError) const {
    fail(kind, msg + " at byte " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      error("expected an integer");
    }
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Rational coefficient() {
    if (peek() == '(') {
      ++pos_;
      Rational sign = 1;
      if (peek() == '-') {
        ++pos_;
        sign = -1;
      }
      Rational c = sign * coefficient();
      expect(')');
      return c;
    }
    const mpz_class num = integer();
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      const mpz_class den = integer();
      if (den == 0) {
        pos_ = at;
        error("zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  Weight term() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
      const std::size_t at = pos_;
      Rational coef = coefficient();
      if (peek() == '*') {
        ++pos_;
        return scale(coef, atom());
      }
      if (coef == 0 && c == '0') return datum_.zero();
      pos_ = at;
      error("expected '*' after coefficient");
    }
    return atom();
  }

  std::size_t index(std::size_t limit, const std::string& name) {
    expect('[');
    skip();
    const std::size_t at = pos_;
    const mpz_class i = integer();
    if (i < 1 || i > static_cast<unsigned long>(limit)) {
      pos_ = at;
      error(name + " index " + i.get_str() + " out of range 1.." + std::to_string(limit), ErrorKind::UnknownSymbol);
    }
    expect(']');
    return static_cast<std::size_t>(i.get_ui()) - 1;
  }

  Weight atom() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    if (name.empty()) error("expected a weight atom");
    if (name == "tau") return datum_.tau();
    if (name == "rho") return datum_.rho();
    if (name == "omega") return fundamental_weight(datum_, index(datum_.rank0(), "omega"));
    if (name == "eps") return datum_.eps_vectors()[index(datum_.eps_vectors().size(), "eps")];
    if (name == "delta") return datum_.delta_vectors()[index(datum_.delta_vectors().size(), "delta")];
    pos_ = start;
    error("unknown symbol '" + name + "'", ErrorKind::UnknownSymbol);
  }

  std::string_view src_;
  const RootDatum& datum_;
  std::size_t pos_ = 0;
};

}  // namespace

Weight parse_weight(std::string_view src, const RootDatum& datum) { return Parser(src, datum).parse(); }

std::vector<Weight> parse_weight_list(std::string_view src, const RootDatum& datum) {
  std::vector<Weight> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = src.find(';', start);
    const std::string_view piece = src.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    try {
      out.push_back(parse_weight(piece, datum));
    } catch (const Error& e) {
      fail(e.kind(), std::string(e.what()) + " (in list item " + std::to_string(out.size() + 1) + ")");
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string format_weight(const Weight& w, const RootDatum& datum) {
  if (w.size() != datum.dim()) fail(ErrorKind::DimensionMismatch, "weight has the wrong dimension");
  std::string out;
  std::size_t neps = 0, ndelta = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool is_eps = datum.basis_labels()[i].rfind("eps", 0) == 0;
    const std::string atom = is_eps ? "eps[" + std::to_string(++neps) + "]" : "delta[" + std::to_string(++ndelta) + "]";
    if (w[i] == 0) continue;
    Rational a = abs(w[i]);
    if (out.empty()) {
      if (w[i] < 0) out += "-";
    } else {
      out += w[i] < 0 ? " - " : " + ";
    }
    if (a != 1) out += to_string(a) + "*";
    out += atom;
  }
  return out.empty() ? "0" : out;
}

}  // namespace superweyl
