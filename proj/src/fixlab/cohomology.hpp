#pragma once

// Crossed homomorphisms and the first cohomology pointed set H^1(K, T) for a
// subgroup K of J acting on a K-invariant subgroup T of N, all inside one
// SemidirectProduct G = N x| J.
//
// A cocycle is a total table phi: K -> T with
//     phi(x * y) = phi(x) * act(x, phi(y)),
// which is phi(xy) = phi(x) phi(y)^(x^-1) in exponent notation. Two cocycles
// are cohomologous when psi(x) = n^-1 * phi(x) * act(x, n) for some n in T.
// Group elements are referred to by their indices in the SemidirectProduct's
// normal() and complement() groups.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixlab/construct.hpp"
#include "fixlab/structure.hpp"

namespace fixlab {

using SdpPtr = std::shared_ptr<const SemidirectProduct>;

struct IndexVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
};

class CohomContext;
using ContextPtr = std::shared_ptr<const CohomContext>;

class CohomContext {
 public:
  // domain: closed set of complement() indices; coefficients: closed set of
  // normal() indices invariant under the domain.
  static ContextPtr make(SdpPtr sdp, std::vector<std::uint32_t> domain,
                         std::vector<std::uint32_t> coefficients);
  static ContextPtr make(SdpPtr sdp, const PermutationGroup& domain,
                         const PermutationGroup& coefficients);
  // K = J and T = N.
  static ContextPtr full(SdpPtr sdp);

  const SemidirectProduct& sdp() const { return *sdp_; }
  const SdpPtr& sdp_ptr() const { return sdp_; }
  const std::vector<std::uint32_t>& domain() const { return domain_; }
  const std::vector<std::uint32_t>& domain_generators() const { return domain_generators_; }
  const std::vector<std::uint32_t>& coefficients() const { return coefficients_; }
  std::size_t domain_size() const { return domain_.size(); }
  bool in_domain(std::uint32_t j) const { return position_[j] >= 0; }
  bool in_coefficients(std::uint32_t n) const { return coefficient_member_[n]; }
  std::size_t position(std::uint32_t j) const;

  PermutationGroup domain_group() const;
  PermutationGroup coefficient_group() const;

  // Same coefficients, different domain.
  ContextPtr with_domain(std::vector<std::uint32_t> domain) const;

 private:
  CohomContext() = default;
  SdpPtr sdp_;
  std::vector<std::uint32_t> domain_;
  std::vector<std::int32_t> position_;
  std::vector<std::uint32_t> domain_generators_;
  std::vector<std::uint32_t> coefficients_;
  std::vector<bool> coefficient_member_;
};

bool is_cocycle(const CohomContext& ctx, std::span<const std::uint32_t> values);

class CrossedHom {
 public:
  // values[i] is the value at ctx->domain()[i]. Throws PreconditionError if
  // the table is not a cocycle.
  CrossedHom(ContextPtr ctx, std::vector<std::uint32_t> values);
  static CrossedHom unchecked(ContextPtr ctx, std::vector<std::uint32_t> values);
  static CrossedHom distinguished(ContextPtr ctx);

  const CohomContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const std::vector<std::uint32_t>& values() const { return values_; }
  // Value at complement() index j, which must lie in the domain.
  std::uint32_t operator()(std::uint32_t j) const { return values_[ctx_->position(j)]; }
  bool is_distinguished() const;

  friend bool operator==(const CrossedHom& a, const CrossedHom& b) {
    return a.ctx_->domain() == b.ctx_->domain() && a.values_ == b.values_;
  }

 private:
  CrossedHom() = default;
  ContextPtr ctx_;
  std::vector<std::uint32_t> values_;
};

// F(phi) = { (phi(j), j) : j in K } as a subgroup of sdp.whole().
PermutationGroup complement_from_cocycle(const CrossedHom& phi);
// Inverse of complement_from_cocycle: h must complement N in N*K.
CrossedHom cocycle_from_complement(ContextPtr ctx, const PermutationGroup& h);

// psi(x) = n^-1 * phi(x) * act(x, n).
CrossedHom coboundary_adjust(const CrossedHom& phi, std::uint32_t n);
// First n in the coefficients (canonical order) with b = coboundary_adjust(a, n).
std::optional<std::uint32_t> coboundary_witness(const CrossedHom& a, const CrossedHom& b);
bool cohomologous(const CrossedHom& a, const CrossedHom& b);

// Z^1 via generator-image assignment extended along words.
std::vector<CrossedHom> enumerate_cocycles(const ContextPtr& ctx);
// Z^1 by scanning all |T|^|K| tables; only for tiny contexts.
std::vector<CrossedHom> enumerate_cocycles_brute(const ContextPtr& ctx);

class PointedH1 {
 public:
  const ContextPtr& context() const { return ctx_; }
  // One representative per class; classes()[distinguished_index()] is trivial.
  const std::vector<CrossedHom>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  std::size_t distinguished_index() const { return 0; }
  // All of Z^1 in enumeration order.
  const std::vector<CrossedHom>& cocycles() const { return cocycles_; }
  // Class index of a cocycle over the same context.
  std::size_t class_of(const CrossedHom& phi) const;

 private:
  friend PointedH1 compute_h1(const ContextPtr& ctx);
  ContextPtr ctx_;
  std::vector<CrossedHom> classes_;
  std::vector<CrossedHom> cocycles_;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, IndexVectorHash> membership_;
};

PointedH1 compute_h1(const ContextPtr& ctx);

// Restriction of phi to a subgroup of its domain (complement() indices).
CrossedHom restrict(const CrossedHom& phi, const std::vector<std::uint32_t>& subdomain);
CrossedHom restrict(const CrossedHom& phi, const PermutationGroup& subgroup);

// phi^j(x) = phi(x^(j^-1))^j for x in K^j.
CrossedHom act_on_cocycle(const CrossedHom& phi, std::uint32_t j);

// J-invariance of the class of phi over K <= J: for each j, the restrictions
// of phi and phi^j to K n K^j are cohomologous. With transversal_only, j runs
// over right coset representatives of K in J instead of all of J.
bool is_J_invariant(const CrossedHom& phi, bool transversal_only = true);

// Indices into h1.classes() of the J-invariant classes.
std::vector<std::size_t> invariant_h1(const PointedH1& h1);

// Pointwise product; requires abelian coefficients.
CrossedHom multiply(const CrossedHom& a, const CrossedHom& b);

// Complement()-index list of a subgroup of J and normal()-index list of a
// subgroup of N.
std::vector<std::uint32_t> complement_indices(const SemidirectProduct& sdp, const PermutationGroup& k);
std::vector<std::uint32_t> normal_indices(const SemidirectProduct& sdp, const PermutationGroup& t);

struct DecompositionReport {
  bool ok = true;
  std::size_t h1_size = 0;
  // Per prime: (|H^1| of the component, |invariant part| where applicable).
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> factors;
  std::string failure;
};

// Checks that phi -> (phi restricted to J_p)_p induces a bijection of pointed
// sets H^1(J, T) -> prod_p inv_J H^1(J_p, T); with check_homomorphism it also
// checks compatibility with the pointwise product (abelian T only).
DecompositionReport restriction_product_check(const ContextPtr& ctx, const SylowSystem& sylows,
                                              bool check_homomorphism);
// Requires abelian N; restriction to a Sylow system of J.
DecompositionReport check_primary_decomposition(const SdpPtr& sdp, const SylowSystem& sylows);
// Requires nilpotent N; phi -> (proj_p o phi)_p onto prod_p H^1(J, N_p).
DecompositionReport nilpotent_component_split(const SdpPtr& sdp);
// Requires N a p-group and G supersoluble; res to a Sylow p-subgroup of J.
DecompositionReport restriction_iso_check(const SdpPtr& sdp, std::uint64_t p);

// phi~(q m) = phi(m) for phi over M, where J = Q x| M and Q acts trivially on
// the coefficients. Throws PreconditionError when the setting is violated and
// TheoremViolation if the result is not a cocycle.
CrossedHom extend_cocycle_central_q(const CrossedHom& phi, const std::vector<std::uint32_t>& q);

// A cohomologous representative psi of phi (over P) with
// psi(m h m^-1) = act(m, psi(h)) for all h in P, m in M; nullopt if none.
std::optional<CrossedHom> pointwise_invariant_representative(const CrossedHom& phi,
                                                             const std::vector<std::uint32_t>& m);
// phi~(h m) = phi(h) for phi over P pointwise M-invariant, J = P x| M.
CrossedHom extend_invariant_cocycle_p(const CrossedHom& phi, const std::vector<std::uint32_t>& m);

}  // namespace fixlab
