#include <catch2/catch_amalgamated.hpp>

#include "sigmastar/coabelian.hpp"

using namespace sigmastar;

namespace {

std::vector<std::vector<Integer>> identity_rows(size_t n) {
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n, 0));
  for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return rows;
}

}  // namespace

TEST_CASE("quotient map validation", "[coabelian]") {
  GroupContext ctx =
      GroupContext::make(parse_presentation("gens x y\nrel x y x^-1 y^-1"));
  CHECK_NOTHROW(quotient_map(ctx, identity_rows(2)));
  // image 2Z is not onto
  std::vector<std::vector<Integer>> doubled{{Integer(2)}, {Integer(0)}};
  REQUIRE_THROWS_AS(quotient_map(ctx, doubled), error);
  // must kill relators: x - y does, x + y does too, but a Klein-type
  // presentation rejects maps that see the torsion relation
  GroupContext klein =
      GroupContext::make(parse_presentation("gens a t\nrel t a t^-1 a"));
  std::vector<std::vector<Integer>> bad{{Integer(1)}, {Integer(0)}};
  REQUIRE_THROWS_AS(quotient_map(klein, bad), error);  // 2a != 0 under it
  std::vector<std::vector<Integer>> good{{Integer(0)}, {Integer(1)}};
  CHECK_NOTHROW(quotient_map(klein, good));
}

TEST_CASE("characters induced by directions", "[coabelian]") {
  GroupContext ctx =
      GroupContext::make(parse_presentation("gens x y\nrel x y x^-1 y^-1"));
  QuotientMap q = quotient_map(ctx, identity_rows(2));
  Character chi =
      character_of_direction(ctx, q, {Rational(2), Rational(-3)});
  CHECK(chi.pair(ctx.ab.project({1})) == 2);
  CHECK(chi.pair(ctx.ab.project({2})) == -3);
}

TEST_CASE("sphere direction enumeration is deterministic and primitive",
          "[coabelian]") {
  auto dirs = sphere_directions(2, 12);
  REQUIRE(dirs.size() == 12);
  CHECK(dirs[0] == std::vector<Integer>{-1, -1});
  // radius-1 shell first: 8 directions
  for (size_t i = 0; i < 8; ++i) {
    for (const auto& x : dirs[i]) CHECK(boost::multiprecision::abs(x) <= 1);
  }
  std::set<std::vector<Integer>> uniq(dirs.begin(), dirs.end());
  CHECK(uniq.size() == dirs.size());
}

TEST_CASE("Z^2 sphere is covered by at most 8 cones", "[coabelian]") {
  GroupContext ctx =
      GroupContext::make(parse_presentation("gens x y\nrel x y x^-1 y^-1"));
  auto c = lyndon_complex<Rational>(ctx);
  QuotientMap q = quotient_map(ctx, identity_rows(2));
  CoabelianResult<Rational> res = cover_sphere(ctx, c, q, 2, 16);
  REQUIRE(res.covered);
  CHECK(res.samples.size() <= 8);
  CHECK(res.conclusion.find("cd(N) <= 0") != std::string::npos);
}

TEST_CASE("d = 1 reduces to the two-point sphere", "[coabelian]") {
  GroupContext ctx =
      GroupContext::make(parse_presentation("gens a t\nrel t a t^-1 a"));
  auto c = lyndon_complex<Rational>(ctx);
  std::vector<std::vector<Integer>> rows{{Integer(0)}, {Integer(1)}};
  QuotientMap q = quotient_map(ctx, rows);
  CoabelianResult<Rational> res = cover_sphere(ctx, c, q, 2, 4);
  REQUIRE(res.covered);
  CHECK(res.conclusion.find("cd(N) <= 1") != std::string::npos);
}

TEST_CASE("F2 abelianization quotient cannot be covered", "[coabelian]") {
  GroupContext ctx = GroupContext::make(parse_presentation("gens x y"));
  auto c = presentation_complex<Rational>(ctx);
  QuotientMap q = quotient_map(ctx, identity_rows(2));
  CoabelianResult<Rational> res = cover_sphere(ctx, c, q, 1, 8);
  REQUIRE_FALSE(res.covered);
  REQUIRE(res.uncovered.has_value());
  bool nonzero = false;
  for (const auto& x : *res.uncovered) nonzero |= (x != 0);
  CHECK(nonzero);
}

TEST_CASE("poly-Z series narration", "[coabelian]") {
  GroupContext ctx =
      GroupContext::make(parse_presentation("gens x y\nrel x y x^-1 y^-1"));
  QuotientMap q = quotient_map(ctx, identity_rows(2));
  PolyZSeries s = polyz_series(q);
  REQUIRE(s.d == 2);
  CHECK(s.characters[0] == std::vector<Integer>{1, 0});
  CHECK(s.characters[1] == std::vector<Integer>{0, 1});
  PolyZSeries swapped = polyz_series(q, {1, 0});
  CHECK(swapped.characters[0] == std::vector<Integer>{0, 1});
}

TEST_CASE("virtual search certifies Klein at the trivial cover",
          "[coabelian]") {
  Presentation p = parse_presentation("gens a t\nrel t a t^-1 a");
  std::vector<PermRep> reps{{{0}, {0}}};
  VirtualSearchResult<Rational> res = virtual_search<Rational>(p, reps, 2);
  REQUIRE(res.success);
  REQUIRE(res.attempts.size() == 1);
  CHECK(res.attempts[0].success);
}

TEST_CASE("virtual search on BS(1,2) finds nothing at the trivial cover",
          "[coabelian]") {
  Presentation p = parse_presentation("gens a t\nrel t a t^-1 a^-2");
  std::vector<PermRep> reps{{{0}, {0}}};
  VirtualSearchResult<Rational> res = virtual_search<Rational>(p, reps, 2);
  CHECK_FALSE(res.success);
  REQUIRE(res.attempts.size() == 1);
}

TEST_CASE("virtual search with an empty list", "[coabelian]") {
  Presentation p = parse_presentation("gens t");
  VirtualSearchResult<Rational> res = virtual_search<Rational>(p, {}, 1);
  CHECK_FALSE(res.success);
  CHECK(res.attempts.empty());
  CHECK(res.conclusion == "empty representation list");
}
