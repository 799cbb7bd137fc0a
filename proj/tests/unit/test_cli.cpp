#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "superweyl_cli/cli.hpp"

using superweyl::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({}).code == 64);
  CHECK(call({"numerator", "--family", "sl", "--m", "3", "--n", "2"}).code == 64);
  CHECK(call({"numerator", "--family", "nope", "--n", "2", "--weight", "0"}).code == 64);
  CHECK(call({"datum", "--family", "sl", "--m", "3"}).code == 64);
}

TEST_CASE("datum and group") {
  const Result r = call({"datum", "--family", "G3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("weyl_order = 12") != std::string::npos);
  const Result s = call({"group", "--family", "sl", "--m", "3", "--n", "2", "--format", "structured"});
  CHECK(s.out.find("order: 12") != std::string::npos);
  const Result f = call({"datum", "--datum", testing::data_file("b11.datum")});
  CHECK(f.code == 0);
  CHECK(call({"datum", "--datum", "/nonexistent"}).code == 64);
}

TEST_CASE("emitted datum loads back") {
  const Result e = call({"datum", "--family", "osp2", "--n", "2", "--emit"});
  REQUIRE(e.code == 0);
  CHECK(e.out.find("positive_odd:") != std::string::npos);
}

TEST_CASE("numerator exit codes") {
  CHECK(call({"numerator", "--family", "sl", "--m", "3", "--n", "2", "--weight", "omega[1] + tau", "--factor"}).code == 0);
  const Result bad = call({"numerator", "--family", "sl", "--m", "3", "--n", "2", "--weight", "omega[1] +"});
  CHECK(bad.code == 64);
  CHECK(bad.err.find("at byte") != std::string::npos);
  CHECK(call({"numerator", "--family", "sl", "--m", "3", "--n", "2", "--weight", "0"}).code == 2);
}

TEST_CASE("kgraph") {
  const Result r = call({"kgraph", "--family", "sl", "--m", "4", "--n", "3", "--tree", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c_k = 0 2 6") != std::string::npos);
  CHECK(r.out.find("k = 1") != std::string::npos);
  CHECK(call({"kgraph", "--family", "sl", "--m", "4", "--n", "3", "--tree", "1,2"}).code == 2);
  CHECK(call({"kgraph", "--family", "sl", "--m", "4", "--n", "3", "--subset", "1,9"}).code == 64);
}

TEST_CASE("verify reports the counterexample") {
  const Result r = call({"verify", "--family", "sl", "--m", "3", "--n", "2", "--lhs",
                         "omega[1] + 2*omega[2] + 3*omega[3] + tau; omega[1] + 4*omega[2] + 5*omega[3] + tau", "--rhs",
                         "omega[1] + 4*omega[2] + 3*omega[3] + tau; omega[1] + 2*omega[2] + 5*omega[3] + tau"});
  CHECK(r.code == 0);
  CHECK(r.out.find("conclusion = CrossMatchedCounterexample") != std::string::npos);
}

TEST_CASE("atypical commands") {
  const Result r = call({"atypical-coeff", "--family", "sl", "--m", "3", "--n", "1", "--weight", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict = EQUAL") != std::string::npos);
  CHECK(call({"atypical-coeff", "--family", "sl", "--m", "3", "--n", "1", "--weight", "0", "--oracle", "--closed"}).code == 64);
  const Result v = call({"atypical-verify", "--family", "sl", "--m", "3", "--n", "1", "--type", "g3", "--lhs", "0", "--rhs", "0"});
  CHECK(v.code == 0);
  CHECK(v.out.find("conclusion = UniqueFactorization") != std::string::npos);
  CHECK(call({"atypical-verify", "--family", "sl", "--m", "3", "--n", "1", "--type", "g1", "--lhs", "0", "--rhs", "0"}).code == 2);
}

TEST_CASE("search on a connected diagram") {
  const Result r = call({"search", "--family", "sl", "--m", "3", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hits = 0") != std::string::npos);
}
