#pragma once

// Structural predicates and distinguished subgroups: Sylow and Hall
// subgroups, nilpotency, solubility and supersolubility.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fixlab/perm.hpp"

namespace fixlab {

// Sorted, duplicate-free list of primes.
struct PrimeSet {
  std::vector<std::uint64_t> primes;

  bool contains(std::uint64_t p) const;
  std::size_t size() const { return primes.size(); }
  bool empty() const { return primes.empty(); }
  auto begin() const { return primes.begin(); }
  auto end() const { return primes.end(); }
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
};

bool is_prime(std::uint64_t n);
PrimeSet prime_divisors(std::uint64_t n);
PrimeSet prime_divisors(const PermutationGroup& g);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_p_group(const PermutationGroup& g, std::uint64_t p);
// The prime p when |g| is a nontrivial power of p.
std::optional<std::uint64_t> prime_of_p_group(const PermutationGroup& g);

// One chosen Sylow subgroup per prime divisor of the group order.
struct SylowSystem {
  PermutationGroup group;
  std::map<std::uint64_t, PermutationGroup> per_prime;

  const PermutationGroup& at(std::uint64_t p) const;
};

// Deterministic Sylow p-subgroup; trivial when p does not divide |g|.
PermutationGroup sylow_subgroup(const PermutationGroup& g, std::uint64_t p);
SylowSystem sylow_system(const PermutationGroup& g);

bool is_nilpotent(const PermutationGroup& g);
bool is_supersoluble(const PermutationGroup& g);
bool is_soluble(const PermutationGroup& g);

// First normal subgroup of g of prime order found scanning `within` (or g)
// in canonical order.
std::optional<PermutationGroup> minimal_normal_of_prime_order(const PermutationGroup& g);
std::optional<PermutationGroup> minimal_normal_of_prime_order(const PermutationGroup& g,
                                                              const PermutationGroup& within);

// A complement M of the normal Sylow subgroup q in j.
PermutationGroup hall_complement_of_normal_sylow(const PermutationGroup& j,
                                                 const PermutationGroup& q);

// Direct decomposition of a nilpotent group into its Sylow subgroups.
class NilpotentDecomposition {
 public:
  explicit NilpotentDecomposition(const PermutationGroup& n);

  const SylowSystem& sylows() const { return sylows_; }
  // Components of x, one per prime in ascending order; their product is x.
  std::vector<Permutation> factorize(const Permutation& x) const;
  Permutation component(const Permutation& x, std::uint64_t p) const;

 private:
  SylowSystem sylows_;
  std::map<std::uint64_t, std::uint64_t> exponents_;  // x -> x^e is projection onto N_p
};

NilpotentDecomposition sylow_decomposition_nilpotent(const PermutationGroup& n);

}  // namespace fixlab
