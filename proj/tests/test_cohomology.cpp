#include <doctest.h>

#include "fixlab/cohomology.hpp"
#include "fixlab/construct.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/structure.hpp"
#include "helpers.hpp"

using namespace fixlab;
using fixlab::testing::direct_sdp;
using fixlab::testing::inversion_sdp;
using fixlab::testing::make_sdp;

namespace {

std::vector<std::uint32_t> all_indices(std::size_t n) {
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(i);
  return out;
}

// N = C2 x C2 with C2 swapping the factors: H^1 trivial but Z^1 of size 2.
SdpPtr swap_sdp() {
  auto n = abelian_group({2, 2});
  const auto a = n.generators()[0], b = n.generators()[1];
  return make_sdp(cyclic_group(2), std::move(n), {{b, a}});
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("is_cocycle") {
    const auto s3 = CohomContext::full(inversion_sdp(3));
    CHECK(is_cocycle(*s3, std::vector<std::uint32_t>{0, 0}));
    for (std::uint32_t n = 0; n < 3; ++n) CHECK(is_cocycle(*s3, std::vector<std::uint32_t>{0, n}));
    // identity must map to identity
    CHECK_FALSE(is_cocycle(*s3, std::vector<std::uint32_t>{1, 0}));
    // trivial action: cocycles are homomorphisms C2 -> C3
    const auto direct = CohomContext::full(direct_sdp(cyclic_group(3), cyclic_group(2)));
    CHECK_FALSE(is_cocycle(*direct, std::vector<std::uint32_t>{0, 1}));
    CHECK_THROWS_AS(CrossedHom(direct, {0, 1}), PreconditionError);
  }

  TEST_CASE("context validation") {
    const auto sdp = inversion_sdp(4);
    CHECK_THROWS_AS(CohomContext::make(sdp, std::vector<std::uint32_t>{0, 5}, all_indices(4)), PreconditionError);
    // the subgroup of order 2 in C4 is invariant, a non-subgroup set is not accepted
    CHECK_THROWS_AS(CohomContext::make(sdp, all_indices(2), std::vector<std::uint32_t>{0, 1}), PreconditionError);
  }

  TEST_CASE("cocycles and complements correspond") {
    const auto sdp = inversion_sdp(3);
    const auto ctx = CohomContext::full(sdp);
    const auto z1 = enumerate_cocycles(ctx);
    CHECK(z1.size() == 3);
    CHECK(complement_from_cocycle(CrossedHom::distinguished(ctx)) == sdp->complement_image());
    std::vector<PermutationGroup> comps;
    for (const auto& phi : z1) {
      const auto k = complement_from_cocycle(phi);
      CHECK(k.order() == 2);
      CHECK(cocycle_from_complement(ctx, k) == phi);
      for (const auto& other : comps) CHECK_FALSE(other == k);
      comps.push_back(k);
    }
  }

  TEST_CASE("enumeration agrees with the brute-force scan") {
    for (const auto& sdp : {inversion_sdp(3), inversion_sdp(4), inversion_sdp(6), swap_sdp(),
                            direct_sdp(abelian_group({2, 2}), cyclic_group(2)),
                            direct_sdp(cyclic_group(4), cyclic_group(4))}) {
      const auto ctx = CohomContext::full(sdp);
      const auto fast = enumerate_cocycles(ctx);
      const auto brute = enumerate_cocycles_brute(ctx);
      CHECK(fast.size() == brute.size());
      for (const auto& phi : fast) {
        CHECK(is_cocycle(*ctx, phi.values()));
        CHECK(std::find(brute.begin(), brute.end(), phi) != brute.end());
      }
    }
  }

  TEST_CASE("coboundary_witness") {
    const auto s3 = CohomContext::full(inversion_sdp(3));
    const auto one = CrossedHom::distinguished(s3);
    CHECK(*coboundary_witness(one, one) == 0);
    const CrossedHom phi(s3, {0, 1});
    const auto w = coboundary_witness(one, phi);
    REQUIRE(w.has_value());
    CHECK(coboundary_adjust(one, *w) == phi);
    const auto c2c2 = CohomContext::full(direct_sdp(cyclic_group(2), cyclic_group(2)));
    CHECK_FALSE(coboundary_witness(CrossedHom::distinguished(c2c2), CrossedHom(c2c2, {0, 1})).has_value());
  }

  TEST_CASE("compute_h1 known values") {
    const auto s3 = compute_h1(CohomContext::full(inversion_sdp(3)));
    CHECK(s3.cocycles().size() == 3);
    CHECK(s3.size() == 1);
    const auto d4 = compute_h1(CohomContext::full(inversion_sdp(4)));
    CHECK(d4.cocycles().size() == 4);
    CHECK(d4.size() == 2);
    const auto c2c2 = compute_h1(CohomContext::full(direct_sdp(cyclic_group(2), cyclic_group(2))));
    CHECK(c2c2.size() == 2);
    const auto sw = compute_h1(CohomContext::full(swap_sdp()));
    CHECK(sw.size() == 1);
    CHECK(sw.classes()[sw.distinguished_index()].is_distinguished());
    // coprime: a single class
    const auto coprime = compute_h1(CohomContext::full(direct_sdp(cyclic_group(5), cyclic_group(4))));
    CHECK(coprime.size() == 1);
    for (const auto& phi : d4.cocycles()) CHECK(d4.class_of(phi) < d4.size());
    CHECK_THROWS_AS(d4.class_of(s3.classes()[0]), PreconditionError);
  }

  TEST_CASE("restrict and act_on_cocycle") {
    const auto sdp = direct_sdp(cyclic_group(2), cyclic_group(4));
    const auto ctx = CohomContext::full(sdp);
    const auto& j = sdp->complement();
    for (const auto& phi : enumerate_cocycles(ctx)) {
      CHECK(restrict(phi, j) == phi);
      CHECK(restrict(phi, PermutationGroup::trivial(j.degree())).is_distinguished());
      const auto sub = restrict(phi, cyclic_subgroup(power(j.generators()[0], 2)));
      CHECK(is_cocycle(sub.context(), sub.values()));
      CHECK(act_on_cocycle(phi, 0) == phi);
      for (std::uint32_t x = 0; x < j.order(); ++x) {
        const auto moved = act_on_cocycle(phi, x);
        CHECK(is_cocycle(moved.context(), moved.values()));
        CHECK(cohomologous(moved, phi));
      }
    }
    const auto d4 = CohomContext::full(inversion_sdp(4));
    for (const auto& phi : enumerate_cocycles(d4)) {
      for (std::uint32_t x = 0; x < 2; ++x) CHECK(cohomologous(act_on_cocycle(phi, x), phi));
    }
  }

  TEST_CASE("J-invariance") {
    const auto d4 = compute_h1(CohomContext::full(inversion_sdp(4)));
    CHECK(invariant_h1(d4).size() == d4.size());
    for (const auto& c : d4.classes()) {
      CHECK(is_J_invariant(c, true));
      CHECK(is_J_invariant(c, false));
    }
    // K normal in J: C2 x C2 acted on by S3 through the swap of two generators
    auto n = abelian_group({2, 2});
    const auto a = n.generators()[0], b = n.generators()[1];
    auto j = symmetric_group(3);
    std::vector<std::vector<Permutation>> images;
    for (const auto& s : j.generators()) {
      // (0 1 2) rotates a -> b -> ab, transpositions swap a and b
      if (s.order() == 3) {
        images.push_back({b, a * b});
      } else {
        images.push_back({b, a});
      }
    }
    const auto sdp = make_sdp(j, n, images);
    const auto a3 = sylow_subgroup(sdp->complement(), 3);
    const auto full = CohomContext::full(sdp);
    const auto h1k = compute_h1(full->with_domain(complement_indices(*sdp, a3)));
    CHECK(h1k.size() == 1);
    const auto t = sylow_subgroup(sdp->complement(), 2);
    const auto h1t = compute_h1(full->with_domain(complement_indices(*sdp, t)));
    for (const auto& c : h1t.classes()) CHECK(is_J_invariant(c, true) == is_J_invariant(c, false));
    CHECK(is_J_invariant(h1t.classes()[0]));
  }

  TEST_CASE("primary decomposition") {
    const auto sdp = inversion_sdp(4);
    const auto rep = check_primary_decomposition(sdp, sylow_system(sdp->complement()));
    CHECK(rep.ok);
    CHECK(rep.h1_size == 2);
    CHECK(rep.factors.size() == 1);
    const auto mixed = direct_sdp(cyclic_group(2), cyclic_group(6));
    const auto r2 = check_primary_decomposition(mixed, sylow_system(mixed->complement()));
    CHECK(r2.ok);
    CHECK(r2.h1_size == 2);
    CHECK_THROWS_AS(check_primary_decomposition(direct_sdp(symmetric_group(3), cyclic_group(2)),
                                                sylow_system(cyclic_group(2))),
                    PreconditionError);
  }

  TEST_CASE("nilpotent_component_split") {
    const auto c6 = inversion_sdp(6);
    const auto rep = nilpotent_component_split(c6);
    CHECK(rep.ok);
    const auto h2 = compute_h1(CohomContext::full(inversion_sdp(2)));
    const auto h3 = compute_h1(CohomContext::full(inversion_sdp(3)));
    CHECK(rep.h1_size == h2.size() * h3.size());
    CHECK(nilpotent_component_split(inversion_sdp(4)).ok);
  }

  TEST_CASE("extend_cocycle_central_q") {
    const auto sdp = direct_sdp(cyclic_group(2), cyclic_group(6));
    const auto& j = sdp->complement();
    const auto full = CohomContext::full(sdp);
    const auto q = complement_indices(*sdp, sylow_subgroup(j, 3));
    const auto m = complement_indices(*sdp, sylow_subgroup(j, 2));
    const auto ctx_m = full->with_domain(m);
    CHECK(extend_cocycle_central_q(CrossedHom::distinguished(ctx_m), q).is_distinguished());
    std::size_t extended = 0;
    for (const auto& phi : enumerate_cocycles(ctx_m)) {
      const auto ext = extend_cocycle_central_q(phi, q);
      CHECK(ext.context().domain_size() == 6);
      CHECK(restrict(ext, m) == phi);
      ++extended;
    }
    CHECK(extended == 2);
    // Q trivial leaves phi alone
    const auto s3 = inversion_sdp(3);
    const auto ctx = CohomContext::full(s3);
    for (const auto& phi : enumerate_cocycles(ctx)) CHECK(extend_cocycle_central_q(phi, {0}) == phi);
  }

  TEST_CASE("extend_invariant_cocycle_p") {
    const auto sdp = direct_sdp(cyclic_group(2), cyclic_group(6));
    const auto& j = sdp->complement();
    const auto full = CohomContext::full(sdp);
    const auto p = complement_indices(*sdp, sylow_subgroup(j, 2));
    const auto m = complement_indices(*sdp, sylow_subgroup(j, 3));
    const auto h1p = compute_h1(full->with_domain(p));
    CHECK(extend_invariant_cocycle_p(CrossedHom::distinguished(h1p.context()), m).is_distinguished());
    for (auto c : invariant_h1(h1p)) {
      const auto rep = pointwise_invariant_representative(h1p.classes()[c], m);
      REQUIRE(rep.has_value());
      const auto ext = extend_invariant_cocycle_p(*rep, m);
      CHECK(restrict(ext, p) == *rep);
    }
    // M trivial leaves phi alone
    const auto d4 = CohomContext::full(inversion_sdp(4));
    for (const auto& phi : enumerate_cocycles(d4)) CHECK(extend_invariant_cocycle_p(phi, {0}) == phi);
  }

  TEST_CASE("restriction_iso_check") {
    CHECK(restriction_iso_check(direct_sdp(cyclic_group(2), cyclic_group(2)), 2).ok);
    CHECK(restriction_iso_check(inversion_sdp(3), 3).ok);
    CHECK(restriction_iso_check(direct_sdp(cyclic_group(2), symmetric_group(3)), 2).ok);
    CHECK_THROWS_AS(restriction_iso_check(direct_sdp(cyclic_group(6), cyclic_group(2)), 2), PreconditionError);
  }

  TEST_CASE("multiply needs abelian coefficients") {
    const auto d4 = CohomContext::full(inversion_sdp(4));
    const auto z1 = enumerate_cocycles(d4);
    for (const auto& a : z1) {
      for (const auto& b : z1) {
        const auto ab = multiply(a, b);
        CHECK(is_cocycle(*d4, ab.values()));
      }
    }
    const auto q8 = dicyclic_group(2);
    const auto ctx = CohomContext::full(direct_sdp(q8, cyclic_group(2)));
    const auto one = CrossedHom::distinguished(ctx);
    CHECK_THROWS_AS(multiply(one, one), PreconditionError);
  }
}
