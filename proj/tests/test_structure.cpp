#include <doctest.h>

#include "fixlab/construct.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/structure.hpp"
#include "helpers.hpp"

using namespace fixlab;
using fixlab::testing::cyc;
using fixlab::testing::gen;

TEST_SUITE("structure") {
  TEST_CASE("prime_divisors") {
    CHECK(prime_divisors(PermutationGroup::trivial(2)).empty());
    CHECK(prime_divisors(symmetric_group(4)).primes == std::vector<std::uint64_t>{2, 3});
    CHECK(prime_divisors(alternating_group(5)).primes == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(p_part(24, 2) == 8);
  }

  TEST_CASE("sylow_subgroup") {
    const auto s3 = symmetric_group(3);
    CHECK(sylow_subgroup(s3, 5).is_trivial());
    CHECK(sylow_subgroup(s3, 3) == gen(3, {"(0 1 2)"}));
    const auto p = sylow_subgroup(symmetric_group(4), 2);
    CHECK(p.order() == 8);
    CHECK(order_statistics(p) == order_statistics(dihedral_group(4)));
    const auto sys = sylow_system(symmetric_group(4));
    CHECK(sys.per_prime.size() == 2);
    CHECK(sys.at(3).order() == 3);
  }

  TEST_CASE("is_nilpotent") {
    CHECK(is_nilpotent(dihedral_group(4)));
    CHECK(is_nilpotent(dicyclic_group(2)));
    CHECK_FALSE(is_nilpotent(symmetric_group(3)));
    CHECK(is_nilpotent(cyclic_group(6)));
  }

  TEST_CASE("is_supersoluble") {
    CHECK(is_supersoluble(abelian_group({2, 4, 3})));
    CHECK_FALSE(is_supersoluble(symmetric_group(4)));
    CHECK_FALSE(is_supersoluble(alternating_group(4)));
    CHECK(is_supersoluble(dihedral_group(4)));
    CHECK(is_supersoluble(symmetric_group(3)));
  }

  TEST_CASE("is_soluble") {
    CHECK(is_soluble(cyclic_group(12)));
    CHECK(is_soluble(symmetric_group(4)));
    CHECK_FALSE(is_soluble(alternating_group(5)));
  }

  TEST_CASE("minimal_normal_of_prime_order") {
    const auto c5 = cyclic_group(5);
    CHECK(*minimal_normal_of_prime_order(c5) == c5);
    CHECK(*minimal_normal_of_prime_order(symmetric_group(3)) == gen(3, {"(0 1 2)"}));
    const auto s4 = symmetric_group(4);
    const auto x = cyc("(0 1)(2 3)", 4);
    const auto v4 = normal_closure(std::span<const Permutation>(&x, 1), s4);
    CHECK_FALSE(minimal_normal_of_prime_order(s4, v4).has_value());
  }

  TEST_CASE("hall_complement_of_normal_sylow") {
    const auto c3 = cyclic_group(3);
    CHECK(hall_complement_of_normal_sylow(c3, c3).is_trivial());
    const auto s3 = symmetric_group(3);
    CHECK(hall_complement_of_normal_sylow(s3, gen(3, {"(0 1 2)"})).order() == 2);
    const auto c6 = cyclic_group(6);
    const auto q = sylow_subgroup(c6, 3);
    CHECK(hall_complement_of_normal_sylow(c6, q) == sylow_subgroup(c6, 2));
    CHECK_THROWS_AS(hall_complement_of_normal_sylow(s3, gen(3, {"(0 1)"})), PreconditionError);
  }

  TEST_CASE("sylow_decomposition_nilpotent") {
    const auto d4 = dihedral_group(4);
    CHECK(sylow_decomposition_nilpotent(d4).sylows().per_prime.size() == 1);
    const auto c6 = cyclic_group(6);
    const auto dec = sylow_decomposition_nilpotent(c6);
    CHECK(dec.sylows().at(2).order() == 2);
    CHECK(dec.sylows().at(3).order() == 3);
    const auto g = c6.generators().front();
    CHECK(dec.component(g, 2) == power(g, 3));
    CHECK(dec.component(g, 3) == power(g, 4));
    CHECK(dec.component(g, 2) * dec.component(g, 3) == g);
    const auto c2c9 = abelian_group({2, 9});
    const auto d2 = sylow_decomposition_nilpotent(c2c9);
    CHECK(d2.sylows().at(2).order() == 2);
    CHECK(d2.sylows().at(3).order() == 9);
    CHECK_THROWS_AS(sylow_decomposition_nilpotent(symmetric_group(3)), PreconditionError);
  }
}
