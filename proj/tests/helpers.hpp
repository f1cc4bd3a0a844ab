#pragma once

// Small fixtures shared by the unit tests.

#include <memory>
#include <string>
#include <vector>

#include "fixlab/cohomology.hpp"
#include "fixlab/construct.hpp"
#include "fixlab/perm.hpp"

namespace fixlab::testing {

inline Permutation cyc(const std::string& text, std::size_t degree) { return Permutation::from_cycles(text, degree); }

inline PermutationGroup gen(std::size_t degree, const std::vector<std::string>& cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(cyc(c, degree));
  return PermutationGroup::generate(degree, std::move(gens));
}

inline SdpPtr make_sdp(PermutationGroup j, PermutationGroup n, std::vector<std::vector<Permutation>> images) {
  return std::make_shared<const SemidirectProduct>(
      ActionHom::from_generator_images(std::move(j), std::move(n), std::move(images)));
}

// C_n x| C_2 with the generator of C_2 inverting C_n.
inline SdpPtr inversion_sdp(std::size_t n) {
  auto cn = cyclic_group(n);
  const auto g = cn.generators().front();
  return make_sdp(cyclic_group(2), cn, {{g.inverse()}});
}

inline SdpPtr direct_sdp(PermutationGroup n, PermutationGroup j) {
  return std::make_shared<const SemidirectProduct>(ActionHom::trivial(std::move(j), std::move(n)));
}

}  // namespace fixlab::testing
