#include <doctest.h>

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

TEST_SUITE("complements") {
  TEST_CASE("is_supplement and is_complement") {
    const auto s3 = symmetric_group(3);
    const auto a3 = gen(3, {"(0 1 2)"});
    CHECK(is_supplement(s3, a3, s3));
    CHECK_FALSE(is_complement(s3, a3, s3));
    CHECK(is_complement(s3, PermutationGroup::trivial(3), s3));
    CHECK(is_complement(s3, a3, gen(3, {"(0 1)"})));
    CHECK_FALSE(is_supplement(s3, a3, a3));
    const auto sdp = inversion_sdp(5);
    CHECK(is_complement(sdp->whole(), sdp->normal_image(), sdp->complement_image()));
    CHECK_THROWS_AS(make_supplement_witness(s3, a3, a3), PreconditionError);
    const auto w = make_supplement_witness(s3, a3, s3);
    CHECK_FALSE(w.is_complement);
    CHECK(w.sylows.size() == 2);
  }

  TEST_CASE("enumerate_complements") {
    const auto s3 = symmetric_group(3);
    CHECK(enumerate_complements(s3, gen(3, {"(0 1 2)"})).size() == 3);
    const auto v = abelian_group({2, 2});
    const auto first = cyclic_subgroup(v.generators()[0]);
    CHECK(enumerate_complements(v, first).size() == 2);
    const auto q8 = dicyclic_group(2);
    CHECK(enumerate_complements(q8, center(q8)).empty());
    CHECK_FALSE(find_complement(q8, center(q8)).has_value());
    // both enumerations agree on semidirect instances
    for (const auto& sdp : {inversion_sdp(3), inversion_sdp(4), direct_sdp(cyclic_group(2), cyclic_group(2)),
                            direct_sdp(cyclic_group(4), cyclic_group(2))}) {
      const auto via_cocycles = enumerate_complements(*sdp);
      const auto via_search = enumerate_complements(sdp->whole(), sdp->normal_image());
      CHECK(via_cocycles.size() == via_search.size());
      for (std::size_t i = 0; i < via_cocycles.size() && i < via_search.size(); ++i) {
        CHECK(via_cocycles[i] == via_search[i]);
      }
    }
  }

  TEST_CASE("splits_gaschutz") {
    const auto s3 = symmetric_group(3);
    CHECK(splits_gaschutz(s3, PermutationGroup::trivial(3)).splits);
    const auto q8 = dicyclic_group(2);
    const auto ev = splits_gaschutz(q8, center(q8));
    CHECK_FALSE(ev.splits);
    REQUIRE(ev.per_prime.contains(2));
    CHECK_FALSE(ev.per_prime.at(2).has_value());
    const auto d4 = inversion_sdp(4);
    const auto split = splits_gaschutz(d4->whole(), d4->normal_image());
    CHECK(split.splits);
    for (const auto& [p, c] : split.per_prime) CHECK(c.has_value());
    CHECK_THROWS_AS(splits_gaschutz(symmetric_group(4), alternating_group(4)), PreconditionError);
  }

  TEST_CASE("local conjugacy and conjugacy witnesses") {
    const auto v = direct_sdp(cyclic_group(2), cyclic_group(2));
    const auto comps = enumerate_complements(*v);
    REQUIRE(comps.size() == 2);
    CHECK(locally_conjugate(comps[0], comps[0], v->whole()).conjugate);
    CHECK_FALSE(locally_conjugate(comps[0], comps[1], v->whole()).conjugate);
    CHECK_FALSE(conjugacy_witness(comps[0], comps[1], v->whole()).has_value());
    CHECK(conjugacy_witness(comps[0], comps[0], v->whole())->is_identity());

    const auto s3 = inversion_sdp(3);
    const auto sc = enumerate_complements(*s3);
    REQUIRE(sc.size() == 3);
    const auto w = conjugacy_witness(sc[0], sc[1], s3->whole());
    REQUIRE(w.has_value());
    CHECK(w->order() == 3);
    CHECK(locally_conjugate(sc[0], sc[1], s3->whole()).conjugate);
    const auto n = conjugacy_via_local_abelian(sc[0], sc[1], s3->whole(), s3->normal_image());
    CHECK(s3->normal_image().contains(n));
    CHECK(conjugates_to(sc[0], n, sc[1]));
    CHECK(conjugacy_via_local_abelian(sc[0], sc[0], s3->whole(), s3->normal_image()).is_identity());
    CHECK(conjugacy_via_local_supersoluble(sc[2], sc[2], s3->whole(), s3->normal_image()).is_identity());
    CHECK_THROWS_AS(conjugacy_via_local_abelian(comps[0], comps[1], v->whole(), v->normal_image()),
                    PreconditionError);
  }

  TEST_CASE("supersoluble path requires a supersoluble group") {
    // C2 x C2 x| C3 is A4
    auto n = abelian_group({2, 2});
    const auto a = n.generators()[0], b = n.generators()[1];
    const auto a4 = fixlab::testing::make_sdp(cyclic_group(3), n, {{b, a * b}});
    CHECK_FALSE(is_supersoluble(a4->whole()));
    const auto j = a4->complement_image();
    CHECK_THROWS_AS(conjugacy_via_local_supersoluble(j, j, a4->whole(), a4->normal_image()), PreconditionError);
  }

  TEST_CASE("supplement_contains_conjugate") {
    const auto d4 = inversion_sdp(4);
    const auto& g = d4->whole();
    const auto& n = d4->normal_image();
    const auto& j = d4->complement_image();
    CHECK(conjugate_contained_in(j, supplement_contains_conjugate(g, g, n, j), g));
    CHECK(supplement_contains_conjugate(j, g, n, j).is_identity());
    std::size_t hypothesis_met = 0;
    for (const auto& k : enumerate_complements(*d4)) {
      // a complement of another class contains no conjugate of J
      if (!conjugate_into_witness(j, k, g)) {
        CHECK_THROWS_AS(supplement_contains_conjugate(k, g, n, j), PreconditionError);
        continue;
      }
      ++hypothesis_met;
      SupplementStats stats;
      const auto x = supplement_contains_conjugate(k, g, n, j, &stats);
      CHECK(conjugate_contained_in(j, x, k));
      CHECK(stats.direct + stats.split_prime + stats.minimal_inside + stats.minimal_outside >= 1);
    }
    CHECK(hypothesis_met == 2);
    CHECK_THROWS_AS(supplement_contains_conjugate(n, g, n, j), PreconditionError);

    // C6 x| C2 by inversion: mixed primes in N
    const auto d6 = inversion_sdp(6);
    for (const auto& k : enumerate_complements(*d6)) {
      if (!conjugate_into_witness(d6->complement_image(), k, d6->whole())) continue;
      const auto x = supplement_contains_conjugate(k, d6->whole(), d6->normal_image(), d6->complement_image());
      CHECK(conjugate_contained_in(d6->complement_image(), x, k));
    }
  }
}
