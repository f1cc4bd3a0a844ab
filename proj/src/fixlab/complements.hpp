#pragma once

// Complements and supplements of a normal subgroup: enumeration, splitting
// tests, local conjugacy and conjugacy decisions.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fixlab/construct.hpp"
#include "fixlab/structure.hpp"

namespace fixlab {

bool is_supplement(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h);
bool is_complement(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h);

struct SupplementWitness {
  PermutationGroup group;
  PermutationGroup normal;
  PermutationGroup supplement;
  bool is_complement = false;
  // Per prime dividing |supplement|: a Sylow subgroup of the supplement.
  std::map<std::uint64_t, PermutationGroup> sylows;
};

// Throws PreconditionError unless h supplements the normal subgroup n of g.
SupplementWitness make_supplement_witness(const PermutationGroup& g, const PermutationGroup& n,
                                          const PermutationGroup& h);

// Complements of N in N x| J as F(phi) over Z^1(J, N), sorted canonically.
std::vector<PermutationGroup> enumerate_complements(const SemidirectProduct& sdp);
// Complements of the normal subgroup n of g by lifting generators of g/n,
// sorted canonically.
std::vector<PermutationGroup> enumerate_complements(const PermutationGroup& g, const PermutationGroup& n);
// First complement met by the lift search, or nullopt when g does not split.
std::optional<PermutationGroup> find_complement(const PermutationGroup& g, const PermutationGroup& n);

struct GaschutzEvidence {
  bool splits = true;
  // Per prime dividing |g|: a complement of n n S in S, if one exists.
  std::map<std::uint64_t, std::optional<PermutationGroup>> per_prime;
};

// Splitting over an abelian normal subgroup decided prime by prime.
GaschutzEvidence splits_gaschutz(const PermutationGroup& g, const PermutationGroup& n);

struct LocalConjugacy {
  bool conjugate = true;
  // Per prime dividing |h|: x with (Sylow_p h)^x = Sylow_p h'.
  std::map<std::uint64_t, Permutation> witnesses;
};

LocalConjugacy locally_conjugate(const PermutationGroup& h, const PermutationGroup& h2,
                                 const PermutationGroup& g);

// First g in canonical order with h^g = h2.
std::optional<Permutation> conjugacy_witness(const PermutationGroup& h, const PermutationGroup& h2,
                                             const PermutationGroup& g);
// First g in canonical order with h^g <= k.
std::optional<Permutation> conjugate_into_witness(const PermutationGroup& h, const PermutationGroup& k,
                                                  const PermutationGroup& g);

// Conjugator n in N with j^n = j2 for locally conjugate complements j, j2 of
// an abelian normal subgroup n. Throws TheoremViolation if none exists.
Permutation conjugacy_via_local_abelian(const PermutationGroup& j, const PermutationGroup& j2,
                                        const PermutationGroup& g, const PermutationGroup& n);
// As above for a nilpotent normal subgroup of a supersoluble group.
Permutation conjugacy_via_local_supersoluble(const PermutationGroup& j, const PermutationGroup& j2,
                                             const PermutationGroup& g, const PermutationGroup& n);

// How often each branch of the supplement recursion ran.
struct SupplementStats {
  std::size_t direct = 0;
  std::size_t split_prime = 0;
  std::size_t minimal_inside = 0;
  std::size_t minimal_outside = 0;
  std::size_t max_depth = 0;
};

// g with j^g <= h, where g = n x| j is supersoluble, n is nilpotent and h
// contains a conjugate of a Sylow p-subgroup of j for every prime p. Follows
// the recursion on minimal normal subgroups and Sylow factors of n.
Permutation supplement_contains_conjugate(const PermutationGroup& h, const PermutationGroup& g,
                                          const PermutationGroup& n, const PermutationGroup& j,
                                          SupplementStats* stats = nullptr);

}  // namespace fixlab
