#include <doctest.h>

#include "fixlab/construct.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/structure.hpp"
#include "helpers.hpp"

using namespace fixlab;
using fixlab::testing::direct_sdp;
using fixlab::testing::inversion_sdp;

TEST_SUITE("construct") {
  TEST_CASE("catalog groups") {
    CHECK(cyclic_group(7).order() == 7);
    CHECK(abelian_group({2, 2, 3}).order() == 12);
    CHECK(dihedral_group(5).order() == 10);
    CHECK(dicyclic_group(2).order() == 8);
    CHECK_FALSE(dicyclic_group(2).is_abelian());
    CHECK(alternating_group(4).order() == 12);
    CHECK(direct_product(cyclic_group(2), cyclic_group(3)).is_abelian());
  }

  TEST_CASE("automorphisms") {
    CHECK(automorphisms(cyclic_group(2)).order() == 1);
    CHECK(automorphisms(abelian_group({2, 2})).order() == 6);
    CHECK(automorphisms(cyclic_group(5)).order() == 4);
    CHECK(automorphisms(dicyclic_group(2)).order() == 24);
    CHECK(automorphisms(dihedral_group(4)).order() == 8);
  }

  TEST_CASE("action homomorphisms are validated") {
    const auto c3 = cyclic_group(3);
    const auto c2 = cyclic_group(2);
    const auto g = c3.generators().front();
    // an involutive automorphism cannot be attached to an element of order 3
    const auto c4 = cyclic_group(4);
    CHECK_THROWS_AS(ActionHom::from_generator_images(c3, c4, {{c4.generators().front().inverse()}}),
                    PreconditionError);
    // a non-multiplicative image is rejected
    CHECK_THROWS_AS(ActionHom::from_generator_images(c2, c3, {{c3.identity()}}), PreconditionError);
    const auto inv = ActionHom::from_generator_images(c2, c3, {{g.inverse()}});
    CHECK_FALSE(inv.is_trivial());
    CHECK(ActionHom::trivial(c2, c3).is_trivial());
  }

  TEST_CASE("enumerate_actions") {
    const auto c3 = cyclic_group(3);
    const auto c2 = cyclic_group(2);
    CHECK(enumerate_actions(c2, c3, automorphisms(c3)).size() == 2);
    // C3 has no nontrivial action on C2
    CHECK(enumerate_actions(c3, cyclic_group(2), automorphisms(cyclic_group(2))).size() == 1);
  }

  TEST_CASE("trivial action gives the direct product") {
    const auto sdp = direct_sdp(cyclic_group(3), cyclic_group(2));
    CHECK(sdp->whole().order() == 6);
    CHECK(sdp->whole().is_abelian());
    for (std::uint32_t n = 0; n < 3; ++n) {
      for (std::uint32_t j = 0; j < 2; ++j) CHECK(sdp->act(j, n) == n);
    }
  }

  TEST_CASE("inversion actions") {
    const auto s3 = inversion_sdp(3);
    CHECK(s3->whole().order() == 6);
    CHECK(order_statistics(s3->whole()) == order_statistics(symmetric_group(3)));
    const auto d4 = inversion_sdp(4);
    CHECK(order_statistics(d4->whole()) == order_statistics(dihedral_group(4)));
    std::size_t order4 = 0;
    for (const auto& [o, c] : order_statistics(d4->whole())) order4 += o == 4 ? c : 0;
    CHECK(order4 == 2);
  }

  TEST_CASE("embedding invariants") {
    const auto sdp = inversion_sdp(4);
    const auto& g = sdp->whole();
    CHECK(is_normal(sdp->normal_image(), g));
    CHECK(intersection(sdp->normal_image(), sdp->complement_image()).is_trivial());
    CHECK(product_order(sdp->normal_image(), sdp->complement_image()) == g.order());
    const auto& n = sdp->normal();
    const auto& j = sdp->complement();
    for (std::uint32_t ji = 0; ji < j.order(); ++ji) {
      const auto jinv = static_cast<std::uint32_t>(j.index_of_checked(j.element(ji).inverse()));
      const auto ej = sdp->embed_complement()(j.element(ji));
      for (std::uint32_t ni = 0; ni < n.order(); ++ni) {
        const auto conj = ej.inverse() * sdp->embed_normal()(n.element(ni)) * ej;
        CHECK(conj == sdp->embed_normal()(n.element(sdp->act(jinv, ni))));
      }
    }
    for (const auto& x : g.elements()) {
      const auto [ni, ji] = sdp->factorize(x);
      CHECK(sdp->pair(ni, ji) == x);
    }
  }
}
