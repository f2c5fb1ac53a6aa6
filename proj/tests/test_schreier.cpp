#include <catch2/catch_amalgamated.hpp>

#include "sigmastar/abelian.hpp"
#include "sigmastar/schreier.hpp"

using namespace sigmastar;

TEST_CASE("index-2 subgroup of Z", "[schreier]") {
  Presentation p = parse_presentation("group Z\ngens t");
  PermRep rep{{1, 0}};  // t = (1 2)
  SubgroupPresentation sub = reidemeister_schreier(p, rep);
  REQUIRE(sub.pres.generators.size() == 1);
  CHECK(sub.pres.relators.empty());
  CHECK(sub.embeddings[0] == Word{1, 1});  // s = t^2
}

TEST_CASE("index-2 subgroup of F2 is free of rank 3", "[schreier]") {
  Presentation p = parse_presentation("gens x y");
  PermRep rep{{1, 0}, {0, 1}};  // x = (1 2), y = id
  SubgroupPresentation sub = reidemeister_schreier(p, rep);
  CHECK(sub.pres.generators.size() == 3);  // Nielsen-Schreier: 2*1 + 1
  CHECK(sub.pres.relators.empty());
  AbelianizationData ab = abelianize(sub.pres);
  CHECK(ab.free_rank == 3);
}

TEST_CASE("index-1 returns the group itself", "[schreier]") {
  Presentation p = parse_presentation("gens a t\nrel t a t^-1 a^-2");
  PermRep rep{{0}, {0}};
  SubgroupPresentation sub = reidemeister_schreier(p, rep);
  REQUIRE(sub.pres.generators.size() == 2);
  REQUIRE(sub.pres.relators.size() == 1);
  CHECK(sub.embeddings[0] == Word{1});
  CHECK(sub.embeddings[1] == Word{2});
  AbelianizationData ab = abelianize(sub.pres);
  CHECK(ab.free_rank == 1);
}

TEST_CASE("index-2 subgroup of the Klein bottle group", "[schreier]") {
  // t acts by the 2-cycle: the orientation double cover, Z^2
  Presentation p = parse_presentation("gens a t\nrel t a t^-1 a");
  PermRep rep{{0, 1}, {1, 0}};
  SubgroupPresentation sub = reidemeister_schreier(p, rep);
  AbelianizationData ab = abelianize(sub.pres);
  CHECK(ab.free_rank == 2);
  CHECK(ab.torsion_factors.empty());
}

TEST_CASE("schreier errors", "[schreier]") {
  Presentation p = parse_presentation("gens a t\nrel t a t^-1 a^-2");
  // intransitive: both generators fix the two points
  PermRep fixed{{0, 1}, {0, 1}};
  REQUIRE_THROWS_AS(reidemeister_schreier(p, fixed), error);
  // relator acts nontrivially: t = (1 2), a = id gives t a t^-1 a^-2 = id ok;
  // use a = (1 2), t = id instead, where the relator maps to (1 2)
  PermRep bad{{1, 0}, {0, 1}};
  REQUIRE_THROWS_AS(reidemeister_schreier(p, bad), error);
  // not a permutation
  PermRep notperm{{0, 0}, {0, 1}};
  REQUIRE_THROWS_AS(reidemeister_schreier(p, notperm), error);
}

TEST_CASE("transfer rank formula on BS(1,2) double cover", "[schreier]") {
  Presentation p = parse_presentation("gens a t\nrel t a t^-1 a^-2");
  PermRep rep{{0, 1}, {1, 0}};  // t swaps; index-2 kernel of G -> Z/2
  SubgroupPresentation sub = reidemeister_schreier(p, rep);
  // subgroup is BS(1,4)-like: one free direction again
  AbelianizationData ab = abelianize(sub.pres);
  CHECK(ab.free_rank == 1);
}
