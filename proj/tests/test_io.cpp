#include "doctest.h"

#include "fig/io.hpp"
#include "support.hpp"

using namespace fig;

namespace {

std::string error_of(const std::string& text) {
  try {
    presentation_from_json(parse_json(text, "in.json"));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

const char* m0_cubed = R"({
  "field": {"prime": 5},
  "group": {"trivial": true},
  "truncation": 6,
  "generators": [0],
  "relations": [{"degree": 3, "coeffs": ["1"]}]
})";

}  // namespace

TEST_CASE("presentation file") {
  auto p = presentation_from_json(parse_json(m0_cubed, "m0"));
  CHECK(p.field == Field::prime(5));
  CHECK(p.truncation == 6);
  CHECK(p.generators.degrees == std::vector<int>{0});
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].degree == 3);
  CHECK(presentation_from_json(to_json(p)) == p);
}

TEST_CASE("presentations round-trip") {
  const FiniteGroup s3 = FiniteGroup::from_table(
      {{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4},
       {3, 5, 4, 0, 2, 1}, {4, 3, 5, 1, 0, 2}, {5, 4, 3, 2, 1, 0}},
      0);
  const FiniteGroup groups[] = {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), s3};
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const Field f = fig::testing::random_field(rng);
    const FiniteGroup& g = groups[rng.below(4)];
    Presentation p{f, g, rng.between(0, 4), {}, {}};
    for (int i = 0, c = rng.between(0, 2); i < c; ++i)
      p.generators.degrees.push_back(rng.between(0, p.truncation));
    for (int i = 0, c = rng.between(0, 2); i < c; ++i) {
      int d = rng.between(0, p.truncation);
      std::size_t dim = 0;
      for (int m : p.generators.degrees)
        dim += hom_count(m, d, g);
      p.relations.push_back({d, fig::testing::random_matrix(rng, f, dim, 1)});
    }
    const std::string text = dump(to_json(p));
    auto q = presentation_from_json(parse_json(text, "rt"));
    CHECK(q == p);
    CHECK(dump(to_json(q)) == text);
  }
}

TEST_CASE("free maps and configs round-trip") {
  const Field q = Field::rationals();
  FreeMap phi{q, FiniteGroup::cyclic(2), 4, {{1, 2}}, {{1}}, {}};
  phi.images = {Matrix::from_ints(q, 2, 1, {1, -3}), Matrix(q, 4, 1)};
  phi.images[1].set(2, 0, Scalar(2, 3));
  CHECK(free_map_from_json(parse_json(dump(to_json(phi)), "map")) == phi);

  CampaignConfig c;
  c.seed = 18446744073709551615ULL;
  c.groups = {FiniteGroup::trivial(), FiniteGroup::cyclic(2)};
  c.primes = {3};
  CHECK(config_from_json(to_json(c)) == c);
  CHECK(config_from_json(Json::object()) == CampaignConfig{});
  CHECK_THROWS_AS(config_from_json(Json{{"sample", 3}}), ParseError);
  CHECK_THROWS_AS(config_from_json(Json{{"seed", -1}}), ParseError);
}

TEST_CASE("parse diagnostics") {
  CHECK(contains(error_of("{\n  \"field\": {\"prime\": 5},\n  oops\n}"), "in.json:3:"));
  std::string bad = m0_cubed;
  CHECK(contains(error_of(std::string(bad).replace(bad.find("\"1\""), 3, "1")), "relations[0].coeffs[0]"));
  CHECK(contains(error_of(std::string(bad).replace(bad.find("[\"1\"]"), 5, "[\"1\", \"0\"]")),
                 "expected 1 coefficients"));
  CHECK(contains(error_of(std::string(bad).replace(bad.find("5}"), 1, "6")), "field.prime"));
  CHECK(contains(error_of(std::string(bad).replace(bad.find("\"degree\": 3"), 11, "\"degree\": 9")),
                 "relations[0].degree"));
  CHECK(contains(error_of(std::string(bad).replace(bad.find("\"trivial\""), 9, "\"trivia\"")),
                 "group.trivia: unknown field"));
  CHECK(contains(error_of(std::string(bad).replace(bad.find("\"1\""), 3, "\"1/5\"")),
                 "relations[0].coeffs[0]"));
  CHECK(contains(error_of("{\"field\": {\"prime\": 2}}"), "group: missing"));
  CHECK(contains(error_of(R"({"field": {"prime": 2}, "group": {"table": [[0, 1], [1, 1]], "identity": 0},
      "truncation": 1, "generators": [], "relations": []})"), "group:"));
}

TEST_CASE("degree reports") {
  DegreeReport r;
  r.truncation = 4;
  r.s_max = 1;
  r.gd = 0;
  r.hd = {0, Degree::neg_inf()};
  r.certified.hd = {true, true};
  auto j = to_json(r);
  CHECK(j["td"] == "-inf");
  CHECK(j["gd"] == 0);
  CHECK(j["hd"][1] == "-inf");
  CHECK(j["certified"]["hd"][0] == true);
}

TEST_CASE("campaign csv") {
  CampaignReport r;
  r.tallies["b"] = {1, 0, 2};
  r.tallies["a"] = {3, 1, 0};
  r.total = {4, 1, 2};
  CHECK(summary_csv(r) == "check,pass,fail,inconclusive\na,3,1,0\nb,1,0,2\ntotal,4,1,2\n");
}
