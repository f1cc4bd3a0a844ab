#include <doctest.h>

#include "fixlab/actions.hpp"
#include "fixlab/complements.hpp"
#include "fixlab/construct.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/structure.hpp"
#include "helpers.hpp"

using namespace fixlab;
using fixlab::testing::cyc;
using fixlab::testing::direct_sdp;
using fixlab::testing::gen;
using fixlab::testing::inversion_sdp;

TEST_SUITE("actions") {
  TEST_CASE("coset_action") {
    const auto s3 = symmetric_group(3);
    const auto one = coset_action(s3, s3);
    CHECK(one.points() == 1);
    const auto t = gen(3, {"(0 1)"});
    const auto three = coset_action(s3, t);
    CHECK(three.points() == 3);
    CHECK(stabilizer(three, 0) == t);
    // faithful: only the identity fixes every point
    std::size_t kernel = 0;
    for (std::size_t i = 0; i < s3.order(); ++i) {
      bool all = true;
      for (std::uint32_t w = 0; w < 3; ++w) all = all && three.act(i, w) == w;
      kernel += all;
    }
    CHECK(kernel == 1);
    // action law: (xy).w = x.(y.w)
    for (const auto& x : s3.elements()) {
      for (const auto& y : s3.elements()) {
        for (std::uint32_t w = 0; w < 3; ++w) CHECK(three.act(x * y, w) == three.act(x, three.act(y, w)));
      }
    }
  }

  TEST_CASE("from_generator_rows checks consistency") {
    const auto c2 = cyclic_group(2);
    const auto ok = GAction::from_generator_rows(c2, 2, {{1, 0}});
    CHECK(ok.act(1, 0) == 1);
    CHECK(ok.generator_rows() == std::vector<std::vector<std::uint32_t>>{{1, 0}});
    // an involution cannot act as a 3-cycle
    CHECK_THROWS_AS(GAction::from_generator_rows(c2, 3, {{1, 2, 0}}), PreconditionError);
    CHECK_THROWS_AS(GAction::from_generator_rows(c2, 2, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(GAction::from_generator_rows(c2, 2, {}), PreconditionError);
  }

  TEST_CASE("transitivity, stabilizers and fixed points") {
    const auto s3 = symmetric_group(3);
    const auto nat = natural_action(s3);
    CHECK(is_transitive_on_restriction(coset_action(s3, s3), PermutationGroup::trivial(3)));
    CHECK_FALSE(is_transitive_on_restriction(nat, PermutationGroup::trivial(3)));
    CHECK(is_transitive_on_restriction(nat, gen(3, {"(0 1 2)"})));
    CHECK(stabilizer(nat, 0) == gen(3, {"(1 2)"}));
    CHECK(fixed_points(nat, PermutationGroup::trivial(3)).size() == 3);
    CHECK(fixed_points(nat, gen(3, {"(1 2)"})) == std::vector<std::uint32_t>{0});
    CHECK(fixed_points(nat, s3).empty());
    CHECK(orbits(nat, gen(3, {"(1 2)"})) == std::vector<std::vector<std::uint32_t>>{{0}, {1, 2}});
    const auto trivial = GAction::from_generator_rows(s3, 2, {{0, 1}, {0, 1}});
    CHECK(stabilizer(trivial, 1) == s3);
  }

  TEST_CASE("coset actions of complements make N transitive") {
    const auto sdp = inversion_sdp(4);
    for (const auto& k : enumerate_complements(*sdp)) {
      const auto action = coset_action(sdp->whole(), k);
      CHECK(is_transitive_on_restriction(action, sdp->normal_image()));
      CHECK(product_order(sdp->normal_image(), stabilizer(action, 0)) == sdp->whole().order());
    }
  }

  TEST_CASE("abelian finder") {
    // coprime: always a fixed point
    const auto c5 = inversion_sdp(5);
    for (const auto& k : enumerate_complements(*c5)) {
      const auto r = find_fixed_point_abelian(*c5, coset_action(c5->whole(), k));
      REQUIRE(r.outcome == FinderOutcome::FixedPoint);
      CHECK(fixed_points(coset_action(c5->whole(), k), c5->complement_image()).size() >= 1);
    }
    // one point
    const auto d4 = inversion_sdp(4);
    const auto single = find_fixed_point_abelian(*d4, coset_action(d4->whole(), d4->whole()));
    CHECK(single.outcome == FinderOutcome::FixedPoint);
    CHECK(single.point == 0);
    // C2 x C2: J fixes no coset of the other complement
    const auto v = direct_sdp(cyclic_group(2), cyclic_group(2));
    const auto comps = enumerate_complements(*v);
    for (const auto& k : comps) {
      const auto action = coset_action(v->whole(), k);
      const auto r = find_fixed_point_abelian(*v, action);
      const bool j_fixes = !fixed_points(action, v->complement_image()).empty();
      CHECK((r.outcome == FinderOutcome::FixedPoint) == j_fixes);
      if (!j_fixes) CHECK(r.outcome == FinderOutcome::HypothesesUnmet);
    }
    // the action must be of G with N transitive
    CHECK_THROWS_AS(find_fixed_point_abelian(*d4, natural_action(d4->whole())), PreconditionError);
  }

  TEST_CASE("nilpotent finder agrees with the abelian finder") {
    for (const auto& sdp : {inversion_sdp(4), inversion_sdp(6), direct_sdp(cyclic_group(2), cyclic_group(2)),
                            direct_sdp(cyclic_group(2), cyclic_group(6))}) {
      std::vector<PermutationGroup> stabs = enumerate_complements(*sdp);
      stabs.push_back(sdp->whole());
      for (const auto& h : stabs) {
        const auto action = coset_action(sdp->whole(), h);
        const auto a = find_fixed_point_abelian(*sdp, action);
        const auto b = find_fixed_point_nilpotent(*sdp, action);
        CHECK(a.outcome == b.outcome);
        if (b.outcome == FinderOutcome::FixedPoint) {
          CHECK(fixed_points(action, sdp->complement_image()).size() >= 1);
          for (const auto& x : sdp->complement_image().elements()) CHECK(action.act(x, b.point) == b.point);
        }
      }
    }
    CHECK(std::string(finder_outcome_name(FinderOutcome::TheoremViolation)) == "theorem-violation");
  }
}
