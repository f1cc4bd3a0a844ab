#include <doctest.h>

#include <set>

#include "fixlab/construct.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/perm.hpp"
#include "helpers.hpp"

using namespace fixlab;
using fixlab::testing::cyc;
using fixlab::testing::gen;

TEST_SUITE("perm") {
  TEST_CASE("permutation validity") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), PreconditionError);
    const auto id = Permutation::identity(4);
    CHECK(id.is_identity());
    for (std::size_t i = 0; i < 4; ++i) CHECK(id[i] == i);
  }

  TEST_CASE("cycle notation round trip") {
    const auto p = cyc("(0 1 2)(3 4)", 5);
    CHECK(p.to_cycles() == "(0 1 2)(3 4)");
    CHECK(Permutation::identity(3).to_cycles() == "()");
    CHECK(cyc("()", 3).is_identity());
    CHECK_THROWS_AS(cyc("(0 5)", 3), ParseError);
    CHECK_THROWS_AS(cyc("(0 1 0)", 3), ParseError);
    CHECK_THROWS_AS(cyc("(0 1", 3), ParseError);
  }

  TEST_CASE("composition applies the right factor first") {
    const auto a = cyc("(0 1)", 3);
    const auto b = cyc("(1 2)", 3);
    const auto ab = a * b;
    for (std::size_t i = 0; i < 3; ++i) CHECK(ab[i] == a[b[i]]);
    CHECK(ab.to_cycles() == "(0 1 2)");
    CHECK((a * a.inverse()).is_identity());
    CHECK(cyc("(0 1 2 3)", 4).order() == 4);
    CHECK(power(cyc("(0 1 2)", 3), -1) == cyc("(0 2 1)", 3));
  }

  TEST_CASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(cyc("(0 1)", 2) * cyc("(0 1)", 3), DegreeMismatch);
    CHECK_THROWS_AS(PermutationGroup::generate(3, {cyc("(0 1)", 4)}), DegreeMismatch);
  }

  TEST_CASE("conjugate_element") {
    const auto g = cyc("(0 1 2)", 3);
    CHECK(conjugate_element(Permutation::identity(3), cyc("(0 1)", 3)).is_identity());
    CHECK(conjugate_element(g, cyc("(0 1)", 3)) == cyc("(0 2 1)", 3));
    CHECK(conjugate_element(g, g * g) == g);
    // right action: (g^c)^d = g^(cd)
    const auto c = cyc("(0 1)", 3), d = cyc("(1 2)", 3);
    CHECK(conjugate_element(conjugate_element(g, c), d) == conjugate_element(g, c * d));
  }

  TEST_CASE("generate") {
    CHECK(gen(3, {"(0 1 2)"}).order() == 3);
    CHECK(gen(4, {"(0 1 2 3)", "(0 2)"}).order() == 8);
    const auto s4 = gen(4, {"(0 1)", "(1 2)", "(2 3)"});
    CHECK(s4.order() == 24);
    // closed under products and inverses, identity first
    const std::set<Permutation> els(s4.elements().begin(), s4.elements().end());
    CHECK(els.size() == 24);
    CHECK(s4.identity().is_identity());
    for (const auto& x : s4.elements()) {
      CHECK(els.contains(x.inverse()));
      for (const auto& y : s4.generators()) CHECK(els.contains(x * y));
    }
  }

  TEST_CASE("order cap is an error") {
    CHECK_THROWS_AS(symmetric_group(8), CapExceeded);
    CHECK_THROWS_AS(PermutationGroup::generate(5, {cyc("(0 1 2 3 4)", 5), cyc("(0 1)", 5)}, 100), CapExceeded);
  }

  TEST_CASE("subgroups and normality") {
    const auto s3 = symmetric_group(3);
    const auto a3 = gen(3, {"(0 1 2)"});
    const auto t = gen(3, {"(0 1)"});
    CHECK(is_normal(PermutationGroup::trivial(3), s3));
    CHECK(is_normal(a3, s3));
    CHECK(is_subgroup(t, s3));
    CHECK_FALSE(is_normal(t, s3));
    CHECK(subgroup_conjugate(t, cyc("(1 2)", 3)) == gen(3, {"(0 2)"}));
    CHECK(subgroup_conjugate(t, cyc("(0 1)", 3)) == t);
    CHECK(subgroup_conjugate(a3, cyc("(1 2)", 3)) == a3);
  }

  TEST_CASE("transversal") {
    const auto s3 = symmetric_group(3);
    CHECK(transversal(s3, s3).size() == 1);
    CHECK(transversal(s3, gen(3, {"(0 1 2)"})).size() == 2);
    const auto s4 = symmetric_group(4);
    const auto h = gen(4, {"(0 1)"});
    const auto reps = transversal(s4, h);
    REQUIRE(reps.size() == 12);
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (std::size_t b = a + 1; b < reps.size(); ++b) {
        // distinct right cosets: reps[a] * reps[b]^-1 outside H
        CHECK_FALSE(h.contains(reps[a] * reps[b].inverse()));
      }
    }
  }

  TEST_CASE("quotient_representation") {
    const auto s3 = symmetric_group(3);
    const auto q1 = quotient_representation(s3, PermutationGroup::trivial(3));
    CHECK(q1.image.order() == 6);
    CHECK(q1.projection.is_injective());
    CHECK(quotient_representation(s3, gen(3, {"(0 1 2)"})).image.order() == 2);
    const auto d4 = dihedral_group(4);
    const auto q = quotient_representation(d4, center(d4));
    CHECK(q.image.order() == 4);
    for (const auto& x : q.image.elements()) CHECK((x * x).is_identity());
    CHECK(q.projection.kernel() == center(d4));
  }

  TEST_CASE("homomorphisms are checked") {
    const auto c4 = cyclic_group(4);
    const auto c2 = cyclic_group(2);
    const auto h = GroupHom::from_generator_images(c4, c2, {c2.generators().front()});
    CHECK(h.kernel().order() == 2);
    CHECK(h.image().order() == 2);
    CHECK_THROWS_AS(GroupHom::from_generator_images(c2, c4, {c4.generators().front()}), PreconditionError);
  }

  TEST_CASE("subgroup operations") {
    const auto s4 = symmetric_group(4);
    const auto a = gen(4, {"(0 1)"});
    const auto b = gen(4, {"(2 3)"});
    CHECK(join(a, b).order() == 4);
    CHECK(intersection(a, b).is_trivial());
    CHECK(product_order(a, b) == 4);
    CHECK(normalizer(a, s4).order() == 4);
    CHECK(derived_subgroup(s4).order() == 12);
    CHECK(center(s4).is_trivial());
    const auto x = cyc("(0 1)(2 3)", 4);
    CHECK(normal_closure(std::span<const Permutation>(&x, 1), s4).order() == 4);
  }
}
