#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "superweyl/weyl.hpp"

using namespace superweyl;

TEST_CASE("orders of the even Weyl groups") {
  // products of symmetric, hyperoctahedral and dihedral orders
  CHECK(generate_group(build_datum(AlgebraDescriptor::sl(3, 2)))->size() == 6 * 2);
  CHECK(generate_group(build_datum(AlgebraDescriptor::sl(4, 3)))->size() == 24 * 6);
  CHECK(generate_group(build_datum(AlgebraDescriptor::osp2(3)))->size() == 48);
  CHECK(generate_group(build_datum(AlgebraDescriptor::g3()))->size() == 12);
  CHECK(generate_group(build_datum(AlgebraDescriptor::f4()))->size() == 48);
}

TEST_CASE("components split the group") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(4, 3));
  CHECK(generate_group(d, Component::First)->size() == 24);
  CHECK(generate_group(d, Component::Second)->size() == 6);
  const auto g = generate_group(d);
  for (const auto& e : *g) {
    const auto [a, b] = component_split(d, e);
    CHECK(a.length() + b.length() == e.length());
  }
}

TEST_CASE("elements are distinct and lengths agree with inversion counts") {
  const RootDatum d = build_datum(AlgebraDescriptor::g3());
  const auto g = generate_group(d);
  std::set<std::string> seen;
  for (const auto& e : *g) {
    CHECK(inversion_count(d, e.matrix) == e.length());
    std::string key;
    for (std::size_t r = 0; r < e.matrix.rows(); ++r)
      for (std::size_t c = 0; c < e.matrix.cols(); ++c) key += to_string(e.matrix(r, c)) + ",";
    seen.insert(key);
  }
  CHECK(seen.size() == g->size());
}

TEST_CASE("reflections fix rho minus the simple root multiple") {
  const RootDatum d = build_datum(AlgebraDescriptor::sl(3, 2));
  for (std::size_t i = 0; i < d.rank0(); ++i) {
    const Weight image = act(element_from_word(d, {i}), d.rho());
    CHECK(image == sub(d.rho(), scale(d.pairing(d.rho(), d.alpha(i).weight), d.alpha(i).weight)));
  }
}

TEST_CASE("group cap") {
  CHECK(testing::kind_of([] { generate_group(build_datum(AlgebraDescriptor::sl(5, 3)), Component::All, 10); }) ==
        ErrorKind::GroupTooLarge);
}
