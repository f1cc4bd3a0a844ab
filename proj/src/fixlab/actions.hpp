#pragma once

// Finite G-sets and the fixed-point finders for actions of N x| J on which N
// is transitive.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fixlab/complements.hpp"
#include "fixlab/construct.hpp"

namespace fixlab {

// A left action of a permutation group on the points {0..points-1}, stored as
// a full table over the group's elements.
class GAction {
 public:
  // rows[i][w] is the image of w under g.generators()[i].
  static GAction from_generator_rows(PermutationGroup g, std::size_t points,
                                     const std::vector<std::vector<std::uint32_t>>& rows);

  const PermutationGroup& group() const { return group_; }
  std::size_t points() const { return points_; }
  std::uint32_t act(std::size_t element_index, std::uint32_t point) const {
    return table_[element_index * points_ + point];
  }
  std::uint32_t act(const Permutation& g, std::uint32_t point) const;
  std::vector<std::vector<std::uint32_t>> generator_rows() const;

 private:
  PermutationGroup group_;
  std::size_t points_ = 0;
  std::vector<std::uint32_t> table_;  // table_[element * points + w]
};

// Action on the left cosets xH; point 0 is the coset H itself.
GAction coset_action(const PermutationGroup& g, const PermutationGroup& h);
// Action of g on its own points.
GAction natural_action(const PermutationGroup& g);

// Orbits of a subgroup, each sorted, ordered by least point.
std::vector<std::vector<std::uint32_t>> orbits(const GAction& action, const PermutationGroup& h);
bool is_transitive_on_restriction(const GAction& action, const PermutationGroup& n);
PermutationGroup stabilizer(const GAction& action, std::uint32_t alpha);
std::vector<std::uint32_t> fixed_points(const GAction& action, const PermutationGroup& h);

enum class FinderOutcome { FixedPoint, HypothesesUnmet, TheoremViolation };

const char* finder_outcome_name(FinderOutcome outcome);

struct FinderResult {
  FinderOutcome outcome = FinderOutcome::HypothesesUnmet;
  std::uint32_t point = 0;
  // Conjugator g with J^g <= G_alpha, so that J fixes point = g . alpha.
  std::optional<Permutation> conjugator;
  std::string detail;
  // Abelian finder: number of complements of N n G_alpha examined before one
  // locally conjugate to J was found (1 means the first one worked).
  std::size_t complements_examined = 0;
  std::size_t complements_total = 0;
  SupplementStats supplement_stats;
};

// Both finders take G = sdp.whole() with N = sdp.normal_image() and
// J = sdp.complement_image(); the action must be of sdp.whole() with N
// transitive. The hypothesis is that every Sylow subgroup of J fixes a point.
FinderResult find_fixed_point_abelian(const SemidirectProduct& sdp, const GAction& action);
FinderResult find_fixed_point_nilpotent(const SemidirectProduct& sdp, const GAction& action);

}  // namespace fixlab
