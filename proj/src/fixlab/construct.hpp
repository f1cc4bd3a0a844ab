#pragma once

// Semidirect products built from explicit actions, automorphism groups of
// small groups, and a catalog of small permutation groups.
//
// Action convention: for j in J and n in N, act(j, n) is the image of n under
// the automorphism attached to j. Inside G = N x| J this is realized as
// j * n * j^-1, i.e. n^(j^-1) in exponent notation. Every other module takes
// the convention from here.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fixlab/perm.hpp"

namespace fixlab {

inline constexpr std::size_t kAutomorphismSourceCap = 64;

PermutationGroup cyclic_group(std::size_t n);
// Cyclic factors of the given orders acting on disjoint point sets.
PermutationGroup abelian_group(const std::vector<std::size_t>& cyclic_orders);
PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b);
// Dihedral group of order 2n acting on n points (n >= 3).
PermutationGroup dihedral_group(std::size_t n);
// Dicyclic group of order 4n in its regular representation; n = 2 gives Q8.
PermutationGroup dicyclic_group(std::size_t n);
PermutationGroup symmetric_group(std::size_t n);
PermutationGroup alternating_group(std::size_t n);

// An automorphism of n stored as a permutation of n's element indices.
Permutation automorphism_to_index_permutation(const GroupHom& aut);

// Aut(n) realized faithfully on the element indices of n.
PermutationGroup automorphisms(const PermutationGroup& n,
                               std::size_t source_cap = kAutomorphismSourceCap,
                               std::size_t cap = kDefaultOrderCap);

// A homomorphism from `actor` (J) into Aut(`target`) (N).
class ActionHom {
 public:
  // images[i] lists the images of target.generators() under the automorphism
  // attached to actor.generators()[i].
  static ActionHom from_generator_images(PermutationGroup actor, PermutationGroup target,
                                         std::vector<std::vector<Permutation>> images);
  // autos[i] is the automorphism attached to actor.generators()[i], given as
  // a permutation of target element indices.
  static ActionHom from_automorphisms(PermutationGroup actor, PermutationGroup target,
                                      const std::vector<Permutation>& autos);
  static ActionHom trivial(PermutationGroup actor, PermutationGroup target);

  const PermutationGroup& actor() const { return actor_; }
  const PermutationGroup& target() const { return target_; }

  std::uint32_t apply(std::uint32_t j, std::uint32_t n) const {
    return table_[static_cast<std::size_t>(j) * target_.order() + n];
  }
  Permutation apply(const Permutation& j, const Permutation& n) const;
  // Images of target generators for each actor generator.
  std::vector<std::vector<Permutation>> generator_images() const;
  bool is_trivial() const;

 private:
  PermutationGroup actor_;
  PermutationGroup target_;
  std::vector<std::uint32_t> table_;  // table_[j * |N| + n]
};

// All homomorphisms J -> Aut(N), up to simultaneous conjugation in Aut(N) of
// the image of the first generator of J. Each entry holds one automorphism
// (index permutation) per generator of J. Throws CapExceeded when the number
// of candidate assignments exceeds `budget`.
std::vector<std::vector<Permutation>> enumerate_actions(const PermutationGroup& j,
                                                        const PermutationGroup& n,
                                                        const PermutationGroup& aut,
                                                        std::size_t budget = 4'000'000);

// G = N x| J realized by its left regular action on the pairs N x J.
class SemidirectProduct {
 public:
  explicit SemidirectProduct(ActionHom action, std::size_t cap = kDefaultOrderCap);

  const ActionHom& action() const { return action_; }
  const PermutationGroup& normal() const { return action_.target(); }
  const PermutationGroup& complement() const { return action_.actor(); }
  const PermutationGroup& whole() const { return whole_; }
  const GroupHom& embed_normal() const { return embed_normal_; }
  const GroupHom& embed_complement() const { return embed_complement_; }
  // Images of the two embeddings as subgroups of whole().
  const PermutationGroup& normal_image() const { return normal_image_; }
  const PermutationGroup& complement_image() const { return complement_image_; }

  const CayleyTable& normal_table() const { return normal_table_; }
  const CayleyTable& complement_table() const { return complement_table_; }
  std::uint32_t act(std::uint32_t j, std::uint32_t n) const { return action_.apply(j, n); }

  // The element (n, j) = embed_normal(n) * embed_complement(j).
  Permutation pair(std::uint32_t n, std::uint32_t j) const;
  // Unique (n, j) with g = (n, j).
  std::pair<std::uint32_t, std::uint32_t> factorize(const Permutation& g) const;

 private:
  ActionHom action_;
  PermutationGroup whole_;
  GroupHom embed_normal_;
  GroupHom embed_complement_;
  PermutationGroup normal_image_;
  PermutationGroup complement_image_;
  CayleyTable normal_table_;
  CayleyTable complement_table_;
};

// Number of elements of each order, as (order, count) pairs ascending.
std::vector<std::pair<std::size_t, std::size_t>> order_statistics(const PermutationGroup& g);

}  // namespace fixlab
