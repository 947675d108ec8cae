#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "amalg/perm.hpp"
#include "amalg/perm_group.hpp"

using namespace amalg;

TEST_CASE("composition applies the right factor first", "[perm]") {
  Perm a = Perm::from_cycles(3, "(0 1)");
  Perm b = Perm::from_cycles(3, "(1 2)");
  Perm c = a * b;  // 1 -> 0, 2 -> 1, 0 -> 2
  REQUIRE(c[1] == 0);
  REQUIRE(c[2] == 1);
  REQUIRE(c[0] == 2);

  Perm id(3);
  REQUIRE(a * id == a);
  REQUIRE(a * a.inverse() == id);
}

TEST_CASE("cycle notation round trip", "[perm]") {
  Perm p = Perm::from_cycles(5, "(0 1)(2 3)");
  REQUIRE(p.cycle_string() == "(0 1)(2 3)");
  REQUIRE(Perm::from_cycles(5, p.cycle_string()) == p);
  REQUIRE(Perm::from_cycles(4, "()").is_identity());
  REQUIRE_THROWS_AS(Perm::from_cycles(3, "(0 3)"), std::invalid_argument);
  REQUIRE_THROWS_AS(Perm::from_cycles(3, "(0 1 0)"), std::invalid_argument);
  REQUIRE_THROWS_AS(Perm::from_images({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("degree mismatch is rejected", "[perm]") {
  Perm a(3);
  Perm b(4);
  REQUIRE_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("closure enumerates S5 from a transposition and a 5-cycle", "[perm_group]") {
  PermGroup g = PermGroup::generated(
      5, {Perm::from_cycles(5, "(0 1)"), Perm::from_cycles(5, "(0 1 2 3 4)")});
  REQUIRE(g.order() == 120);
  REQUIRE(PermGroup::trivial(4).order() == 1);
  REQUIRE(PermGroup::generated(4, {Perm::from_cycles(4, "(0 1)")}).order() == 2);
}

TEST_CASE("closure cap fails loudly", "[perm_group]") {
  REQUIRE_THROWS_AS(PermGroup::symmetric(5).padded(6), CapExceeded);  // cap order+1, S5 in S6 is fine
  REQUIRE_THROWS_AS(
      PermGroup::generated(5, {Perm::from_cycles(5, "(0 1)"), Perm::from_cycles(5, "(0 1 2 3 4)")}, 100),
      CapExceeded);
}

TEST_CASE("closure is deterministic and idempotent", "[perm_group]") {
  auto gens = std::vector<Perm>{Perm::from_cycles(4, "(0 1)"), Perm::from_cycles(4, "(0 1 2 3)")};
  PermGroup g1 = PermGroup::generated(4, gens);
  PermGroup g2 = PermGroup::generated(4, gens);
  REQUIRE(g1.elements() == g2.elements());

  PermGroup h = PermGroup::generated(4, g1.elements());
  REQUIRE(h.same_elements(g1));
}

TEST_CASE("intersection inside S5 recovers a copy of S3", "[perm_group]") {
  PermGroup s4 = PermGroup::symmetric(4).padded(5);
  PermGroup s3xs2 = PermGroup::generated(
      5, {Perm::from_cycles(5, "(0 1)"), Perm::from_cycles(5, "(0 1 2)"), Perm::from_cycles(5, "(3 4)")});
  REQUIRE(s3xs2.order() == 12);
  PermGroup core = intersect(s4, s3xs2);
  REQUIRE(core.order() == 6);
  REQUIRE(core.same_elements(PermGroup::symmetric(3).padded(5)));

  PermGroup s5 = PermGroup::symmetric(5);
  REQUIRE(intersect(s5, s5).same_elements(s5));
  REQUIRE(intersect(s5, PermGroup::trivial(5)).order() == 1);
  REQUIRE_THROWS_AS(intersect(s5, PermGroup::symmetric(4)), std::invalid_argument);
}

TEST_CASE("lagrange bound on intersections", "[perm_group][property]") {
  std::vector<PermGroup> groups;
  groups.push_back(PermGroup::symmetric(4).padded(5));
  groups.push_back(PermGroup::generated(
      5, {Perm::from_cycles(5, "(0 1)"), Perm::from_cycles(5, "(0 1 2)"), Perm::from_cycles(5, "(3 4)")}));
  groups.push_back(PermGroup::cyclic(5));
  groups.push_back(PermGroup::generated(5, {Perm::from_cycles(5, "(0 1 2 3 4)"), Perm::from_cycles(5, "(1 4)(2 3)")}));
  for (const auto& a : groups)
    for (const auto& b : groups) {
      auto c = intersect(a, b);
      REQUIRE(std::gcd(a.order(), b.order()) % c.order() == 0);
    }
}

TEST_CASE("generation questions", "[perm_group]") {
  PermGroup s5 = PermGroup::symmetric(5);
  PermGroup s4 = PermGroup::symmetric(4).padded(5);
  PermGroup s3xs2 = PermGroup::generated(
      5, {Perm::from_cycles(5, "(0 1)"), Perm::from_cycles(5, "(0 1 2)"), Perm::from_cycles(5, "(3 4)")});
  REQUIRE(is_generated_by(s5, {&s4, &s3xs2}));

  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup z2 = PermGroup::generated(3, {Perm::from_cycles(3, "(0 1)")});
  REQUIRE_FALSE(is_generated_by(s3, {&z2}));
  REQUIRE(is_generated_by(s3, {&s3}));
}

TEST_CASE("standard inclusion of S4 in S5 is an embedding", "[embedding]") {
  auto s4 = make_group(PermGroup::symmetric(4));
  auto s5 = make_group(PermGroup::symmetric(5));
  std::vector<Perm> images;
  for (const Perm& g : s4->generators()) images.push_back(g.padded(5));
  Embedding e{s4, s5, images};
  auto check = analyze_embedding(e);
  REQUIRE(check.ok());
  PermGroup img = embedding_image(e, check);
  REQUIRE(img.order() == s4->order());
}

TEST_CASE("collapsing a transposition is not injective", "[embedding]") {
  auto z2 = make_group(PermGroup::generated(2, {Perm::from_cycles(2, "(0 1)")}));
  Embedding e{z2, z2, {Perm(2)}};
  auto check = analyze_embedding(e);
  REQUIRE(check.homomorphism);
  REQUIRE_FALSE(check.injective);
}

TEST_CASE("order 2 to order 3 image is not a homomorphism", "[embedding]") {
  auto z2 = make_group(PermGroup::generated(2, {Perm::from_cycles(2, "(0 1)")}));
  auto z3 = make_group(PermGroup::cyclic(3));
  Embedding e{z2, z3, {Perm::from_cycles(3, "(0 1 2)")}};
  auto check = analyze_embedding(e);
  REQUIRE_FALSE(check.homomorphism);
}

TEST_CASE("embedding image size equals source order on checked embeddings", "[embedding][property]") {
  auto s3 = make_group(PermGroup::symmetric(3));
  auto s6 = make_group(PermGroup::symmetric(6));
  // act on {3,4,5} instead of {0,1,2}
  std::vector<Perm> images;
  for (const Perm& g : s3->generators()) {
    std::vector<int> img(6);
    for (int i = 0; i < 6; ++i) img[i] = i;
    for (int i = 0; i < 3; ++i) img[i + 3] = g[i] + 3;
    images.push_back(Perm::from_images(img));
  }
  Embedding e{s3, s6, images};
  auto check = analyze_embedding(e);
  REQUIRE(check.ok());
  REQUIRE(embedding_image(e, check).order() == s3->order());
}
