#include <doctest.h>

#include "brm/json_io.hpp"
#include "brm/sampling.hpp"

using namespace brm;

TEST_CASE("complex and matrix round trips") {
  cx z{1.25, -3.5e-7};
  CHECK(complex_from_json(to_json(z)) == z);

  Rng rng(401);
  Mat2C m = random_unimodular(rng);
  Mat2C m2 = mat2_from_json(to_json(m));
  CHECK((m - m2).max_norm() == 0.0);
}

TEST_CASE("laurent polynomial round trip") {
  LaurentPoly3 p;
  p.add_term({1, -2, 0}, cx(0.5, 1.0));
  p.add_term({0, 0, 3}, cx(-2.0, 0.0));
  LaurentPoly3 q = laurent_from_json(to_json(p));
  CHECK(approx_equal(p, q, 0.0));
}

TEST_CASE("representation and character round trips") {
  Representation rho = realize_x2(1, 2.0, 3.0);
  json j = to_json(rho);
  Representation back = representation_from_json(j);
  CHECK((rho.x1 - back.x1).max_norm() == 0.0);
  CHECK((rho.x2 - back.x2).max_norm() == 0.0);
  CHECK((rho.x3 - back.x3).max_norm() == 0.0);
  CHECK(back.label == rho.label);
  CHECK(back.params.at("kappa_prev") == cx(2.0));

  CharacterTuple c = character_of(rho);
  CharacterTuple c2 = character_from_json(to_json(c));
  CHECK(c2.t23 == c.t23);
  CHECK(!c2.theta);

  Representation x4 = realize_x4(2.0, 2.0, 2.0, cx(0.0, 1.0));
  CharacterTuple c4 = character_of(x4);
  CharacterTuple c5 = character_from_json(to_json(c4));
  REQUIRE(c5.theta.has_value());
  CHECK(*c5.theta == *c4.theta);
}

TEST_CASE("tap result round trip") {
  Representation rho = realize_x2(1, 2.0, 3.0);
  TapResult t = tap_fox(rho, 3);
  TapResult u = tap_result_from_json(to_json(t));
  CHECK(u.method == "fox");
  CHECK(u.column == 3);
  CHECK(u.unit == t.unit);
  CHECK(approx_equal(u.delta, t.delta, 0.0));
}

TEST_CASE("presentation json matches the documented schema") {
  Presentation p = borromean_presentation();
  json j = to_json(p);
  CHECK(j["generators"] == 3);
  CHECK(j["abelianization"] == json::array({1, 2, 3}));
  Presentation q = presentation_from_json(j);
  CHECK(q.relators == p.relators);

  // the schema form with bracket notation parses to the same relators
  json alt = {{"generators", 3},
              {"relators", {"[x2,[x3,X1]]", "[x3,[x1,X2]]"}},
              {"abelianization", {1, 2, 3}}};
  Presentation r = presentation_from_json(alt);
  CHECK(r.relators == p.relators);
}

TEST_CASE("17-digit dump round trips doubles") {
  json j = {{"x", 0.1 + 0.2}, {"y", 1.0 / 3.0}, {"n", 42}, {"s", "txt"},
            {"arr", {1e-300, 2.5, -0.0}}};
  std::string s = dump_json(j);
  json k = json::parse(s);
  CHECK(k["x"].get<double>() == j["x"].get<double>());
  CHECK(k["y"].get<double>() == j["y"].get<double>());
  CHECK(k["arr"][0].get<double>() == 1e-300);
}

TEST_CASE("complex literal parsing") {
  CHECK(parse_complex("2") == cx(2.0, 0.0));
  CHECK(parse_complex("-1.5") == cx(-1.5, 0.0));
  CHECK(parse_complex("i") == cx(0.0, 1.0));
  CHECK(parse_complex("-i") == cx(0.0, -1.0));
  CHECK(parse_complex("3i") == cx(0.0, 3.0));
  CHECK(parse_complex("2+3i") == cx(2.0, 3.0));
  CHECK(parse_complex("1.5-0.5i") == cx(1.5, -0.5));
  CHECK(parse_complex("1e-2+2e-3i") == cx(0.01, 0.002));
  CHECK_THROWS_AS(parse_complex("abc"), std::exception);
}
