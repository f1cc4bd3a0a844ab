#include "fixlab/cohomology.hpp"

#include <algorithm>
#include <set>

namespace fixlab {

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool closed_under(const CayleyTable& t, const std::vector<std::uint32_t>& set) {
  std::vector<bool> member(t.order, false);
  for (auto x : set) member[x] = true;
  if (set.empty() || !member[0]) return false;
  for (auto x : set) {
    for (auto y : set) {
      if (!member[t.mul(x, y)]) return false;
    }
  }
  return true;
}

// Irredundant generators of a closed subset, scanned in ascending order.
std::vector<std::uint32_t> greedy_index_generators(const CayleyTable& t,
                                                   const std::vector<std::uint32_t>& set) {
  std::vector<std::uint32_t> gens;
  std::vector<bool> span(t.order, false);
  span[0] = true;
  for (auto x : set) {
    if (span[x]) continue;
    gens.push_back(x);
    std::vector<std::uint32_t> queue{0};
    std::fill(span.begin(), span.end(), false);
    span[0] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (auto g : gens) {
        auto y = t.mul(queue[q], g);
        if (!span[y]) {
          span[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::vector<std::uint32_t> intersect(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::size_t IndexVectorHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// CohomContext

ContextPtr CohomContext::make(SdpPtr sdp, std::vector<std::uint32_t> domain,
                              std::vector<std::uint32_t> coefficients) {
  const auto& jt = sdp->complement_table();
  const auto& nt = sdp->normal_table();
  domain = sorted_unique(std::move(domain));
  coefficients = sorted_unique(std::move(coefficients));
  for (auto j : domain) {
    if (j >= jt.order) throw PreconditionError("cohomology context: domain index out of range");
  }
  for (auto n : coefficients) {
    if (n >= nt.order) throw PreconditionError("cohomology context: coefficient index out of range");
  }
  if (!closed_under(jt, domain)) throw PreconditionError("cohomology context: domain is not a subgroup of J");
  if (!closed_under(nt, coefficients)) {
    throw PreconditionError("cohomology context: coefficients are not a subgroup of N");
  }
  auto ctx = std::shared_ptr<CohomContext>(new CohomContext());
  ctx->coefficient_member_.assign(nt.order, false);
  for (auto n : coefficients) ctx->coefficient_member_[n] = true;
  for (auto j : domain) {
    for (auto n : coefficients) {
      if (!ctx->coefficient_member_[sdp->act(j, n)]) {
        throw PreconditionError("cohomology context: coefficients not invariant under the domain");
      }
    }
  }
  ctx->position_.assign(jt.order, -1);
  for (std::size_t i = 0; i < domain.size(); ++i) ctx->position_[domain[i]] = static_cast<std::int32_t>(i);
  ctx->domain_generators_ = greedy_index_generators(jt, domain);
  ctx->domain_ = std::move(domain);
  ctx->coefficients_ = std::move(coefficients);
  ctx->sdp_ = std::move(sdp);
  return ctx;
}

ContextPtr CohomContext::make(SdpPtr sdp, const PermutationGroup& domain,
                              const PermutationGroup& coefficients) {
  auto d = complement_indices(*sdp, domain);
  auto c = normal_indices(*sdp, coefficients);
  return make(std::move(sdp), std::move(d), std::move(c));
}

ContextPtr CohomContext::full(SdpPtr sdp) {
  std::vector<std::uint32_t> d(sdp->complement().order()), c(sdp->normal().order());
  for (std::uint32_t i = 0; i < d.size(); ++i) d[i] = i;
  for (std::uint32_t i = 0; i < c.size(); ++i) c[i] = i;
  return make(std::move(sdp), std::move(d), std::move(c));
}

std::size_t CohomContext::position(std::uint32_t j) const {
  if (j >= position_.size() || position_[j] < 0) {
    throw PreconditionError("cocycle evaluated outside its domain");
  }
  return static_cast<std::size_t>(position_[j]);
}

PermutationGroup CohomContext::domain_group() const {
  std::vector<Permutation> els;
  for (auto j : domain_) els.push_back(sdp_->complement().element(j));
  return PermutationGroup::from_elements(sdp_->complement().degree(), std::move(els));
}

PermutationGroup CohomContext::coefficient_group() const {
  std::vector<Permutation> els;
  for (auto n : coefficients_) els.push_back(sdp_->normal().element(n));
  return PermutationGroup::from_elements(sdp_->normal().degree(), std::move(els));
}

ContextPtr CohomContext::with_domain(std::vector<std::uint32_t> domain) const {
  return make(sdp_, std::move(domain), coefficients_);
}

// ---------------------------------------------------------------------------
// Cocycles

bool is_cocycle(const CohomContext& ctx, std::span<const std::uint32_t> values) {
  if (values.size() != ctx.domain_size()) return false;
  for (auto v : values) {
    if (v >= ctx.sdp().normal().order() || !ctx.in_coefficients(v)) return false;
  }
  const auto& jt = ctx.sdp().complement_table();
  const auto& nt = ctx.sdp().normal_table();
  const auto& dom = ctx.domain();
  for (std::size_t a = 0; a < dom.size(); ++a) {
    for (std::size_t b = 0; b < dom.size(); ++b) {
      const auto xy = jt.mul(dom[a], dom[b]);
      const auto rhs = nt.mul(values[a], ctx.sdp().act(dom[a], values[b]));
      if (values[ctx.position(xy)] != rhs) return false;
    }
  }
  return true;
}

CrossedHom::CrossedHom(ContextPtr ctx, std::vector<std::uint32_t> values)
    : ctx_(std::move(ctx)), values_(std::move(values)) {
  if (!is_cocycle(*ctx_, values_)) throw PreconditionError("table is not a crossed homomorphism");
}

CrossedHom CrossedHom::unchecked(ContextPtr ctx, std::vector<std::uint32_t> values) {
  CrossedHom c;
  c.ctx_ = std::move(ctx);
  c.values_ = std::move(values);
  return c;
}

CrossedHom CrossedHom::distinguished(ContextPtr ctx) {
  std::vector<std::uint32_t> values(ctx->domain_size(), 0);
  return unchecked(std::move(ctx), std::move(values));
}

bool CrossedHom::is_distinguished() const {
  return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
}

PermutationGroup complement_from_cocycle(const CrossedHom& phi) {
  const auto& ctx = phi.context();
  std::vector<Permutation> gens;
  for (auto j : ctx.domain_generators()) gens.push_back(ctx.sdp().pair(phi(j), j));
  auto h = PermutationGroup::generate(ctx.sdp().whole().degree(), std::move(gens), ctx.domain_size());
  if (h.order() != ctx.domain_size()) throw InvariantViolation("F(phi) has the wrong order");
  return h;
}

CrossedHom cocycle_from_complement(ContextPtr ctx, const PermutationGroup& h) {
  const auto& sdp = ctx->sdp();
  if (!is_subgroup(h, sdp.whole())) throw PreconditionError("cocycle_from_complement: not a subgroup of G");
  if (h.order() != ctx->domain_size()) {
    throw PreconditionError("cocycle_from_complement: order differs from the domain");
  }
  std::vector<std::uint32_t> values(ctx->domain_size(), kUnset);
  for (const auto& x : h.elements()) {
    auto [n, j] = sdp.factorize(x);
    if (!ctx->in_domain(j) || !ctx->in_coefficients(n)) {
      throw PreconditionError("cocycle_from_complement: element outside T*K");
    }
    auto& slot = values[ctx->position(j)];
    if (slot != kUnset) throw PreconditionError("cocycle_from_complement: subgroup meets N nontrivially");
    slot = n;
  }
  return CrossedHom(std::move(ctx), std::move(values));
}

CrossedHom coboundary_adjust(const CrossedHom& phi, std::uint32_t n) {
  const auto& ctx = phi.context();
  if (!ctx.in_coefficients(n)) throw PreconditionError("coboundary_adjust: element outside coefficients");
  const auto& nt = ctx.sdp().normal_table();
  const auto ninv = nt.inverse[n];
  std::vector<std::uint32_t> values(ctx.domain_size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = nt.mul(nt.mul(ninv, phi.values()[i]), ctx.sdp().act(ctx.domain()[i], n));
  }
  return CrossedHom::unchecked(phi.context_ptr(), std::move(values));
}

std::optional<std::uint32_t> coboundary_witness(const CrossedHom& a, const CrossedHom& b) {
  const auto& ctx = a.context();
  if (ctx.domain() != b.context().domain() || ctx.coefficients() != b.context().coefficients()) {
    throw PreconditionError("coboundary_witness: cocycles live in different contexts");
  }
  const auto& nt = ctx.sdp().normal_table();
  for (auto n : ctx.coefficients()) {
    const auto ninv = nt.inverse[n];
    bool ok = true;
    for (std::size_t i = 0; i < ctx.domain_size() && ok; ++i) {
      ok = b.values()[i] == nt.mul(nt.mul(ninv, a.values()[i]), ctx.sdp().act(ctx.domain()[i], n));
    }
    if (ok) return n;
  }
  return std::nullopt;
}

bool cohomologous(const CrossedHom& a, const CrossedHom& b) { return coboundary_witness(a, b).has_value(); }

std::vector<CrossedHom> enumerate_cocycles(const ContextPtr& ctx) {
  const auto& jt = ctx->sdp().complement_table();
  const auto& nt = ctx->sdp().normal_table();
  const auto& gens = ctx->domain_generators();
  const auto& coeffs = ctx->coefficients();
  std::vector<CrossedHom> out;
  if (gens.empty()) {
    out.push_back(CrossedHom::distinguished(ctx));
    return out;
  }
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<std::uint32_t> values(ctx->domain_size());
  std::vector<std::uint32_t> queue;
  while (true) {
    std::fill(values.begin(), values.end(), kUnset);
    values[ctx->position(0)] = 0;
    queue.assign(1, 0);
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const auto x = queue[q];
      const auto fx = values[ctx->position(x)];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto y = jt.mul(x, gens[i]);
        const auto val = nt.mul(fx, ctx->sdp().act(x, coeffs[choice[i]]));
        auto& slot = values[ctx->position(y)];
        if (slot == kUnset) {
          slot = val;
          queue.push_back(y);
        } else if (slot != val) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(CrossedHom::unchecked(ctx, values));
    std::size_t i = gens.size();
    while (true) {
      if (i == 0) return out;
      --i;
      if (++choice[i] < coeffs.size()) break;
      choice[i] = 0;
    }
  }
}

std::vector<CrossedHom> enumerate_cocycles_brute(const ContextPtr& ctx) {
  const auto& coeffs = ctx->coefficients();
  const std::size_t k = ctx->domain_size();
  double total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(coeffs.size());
  if (total > 5e6) throw CapExceeded("enumerate_cocycles_brute: context too large");
  std::vector<std::size_t> choice(k, 0);
  std::vector<std::uint32_t> values(k);
  std::vector<CrossedHom> out;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) values[i] = coeffs[choice[i]];
    if (is_cocycle(*ctx, values)) out.push_back(CrossedHom::unchecked(ctx, values));
    std::size_t i = k;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++choice[i] < coeffs.size()) break;
      choice[i] = 0;
    }
  }
}

PointedH1 compute_h1(const ContextPtr& ctx) {
  PointedH1 h;
  h.ctx_ = ctx;
  h.cocycles_ = enumerate_cocycles(ctx);
  for (const auto& phi : h.cocycles_) {
    if (h.membership_.contains(phi.values())) continue;
    const std::size_t c = h.classes_.size();
    h.classes_.push_back(phi);
    for (auto n : ctx->coefficients()) h.membership_.emplace(coboundary_adjust(phi, n).values(), c);
  }
  if (h.membership_.size() != h.cocycles_.size()) {
    throw InvariantViolation("compute_h1: coboundary orbits leave Z^1");
  }
  if (h.classes_.empty() || !h.classes_.front().is_distinguished()) {
    throw InvariantViolation("compute_h1: distinguished class missing");
  }
  return h;
}

std::size_t PointedH1::class_of(const CrossedHom& phi) const {
  if (phi.context().sdp_ptr() != ctx_->sdp_ptr() || phi.context().domain() != ctx_->domain() ||
      phi.context().coefficients() != ctx_->coefficients()) {
    throw PreconditionError("class_of: context mismatch");
  }
  auto it = membership_.find(phi.values());
  if (it == membership_.end()) throw PreconditionError("class_of: table is not a cocycle of this context");
  return it->second;
}

CrossedHom restrict(const CrossedHom& phi, const std::vector<std::uint32_t>& subdomain) {
  auto sub = phi.context().with_domain(subdomain);
  for (auto j : sub->domain()) {
    if (!phi.context().in_domain(j)) throw PreconditionError("restrict: not a subgroup of the domain");
  }
  std::vector<std::uint32_t> values;
  values.reserve(sub->domain_size());
  for (auto j : sub->domain()) values.push_back(phi(j));
  return CrossedHom::unchecked(std::move(sub), std::move(values));
}

CrossedHom restrict(const CrossedHom& phi, const PermutationGroup& subgroup) {
  return restrict(phi, complement_indices(phi.context().sdp(), subgroup));
}

CrossedHom act_on_cocycle(const CrossedHom& phi, std::uint32_t j) {
  const auto& ctx = phi.context();
  const auto& jt = ctx.sdp().complement_table();
  const auto jinv = jt.inverse[j];
  std::vector<std::uint32_t> conj_domain;
  for (auto k : ctx.domain()) conj_domain.push_back(jt.mul(jt.mul(jinv, k), j));
  auto target = ctx.with_domain(std::move(conj_domain));
  std::vector<std::uint32_t> values;
  values.reserve(target->domain_size());
  for (auto x : target->domain()) {
    const auto y = jt.mul(jt.mul(j, x), jinv);
    values.push_back(ctx.sdp().act(jinv, phi(y)));
  }
  return CrossedHom::unchecked(std::move(target), std::move(values));
}

bool is_J_invariant(const CrossedHom& phi, bool transversal_only) {
  const auto& ctx = phi.context();
  const auto& jt = ctx.sdp().complement_table();
  std::vector<std::uint32_t> reps;
  if (transversal_only) {
    std::vector<bool> covered(jt.order, false);
    for (std::uint32_t t = 0; t < jt.order; ++t) {
      if (covered[t]) continue;
      reps.push_back(t);
      for (auto k : ctx.domain()) covered[jt.mul(k, t)] = true;
    }
  } else {
    for (std::uint32_t t = 0; t < jt.order; ++t) reps.push_back(t);
  }
  for (auto j : reps) {
    auto translated = act_on_cocycle(phi, j);
    auto common = intersect(ctx.domain(), translated.context().domain());
    if (!cohomologous(restrict(phi, common), restrict(translated, common))) return false;
  }
  return true;
}

std::vector<std::size_t> invariant_h1(const PointedH1& h1) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < h1.size(); ++c) {
    if (is_J_invariant(h1.classes()[c])) out.push_back(c);
  }
  return out;
}

CrossedHom multiply(const CrossedHom& a, const CrossedHom& b) {
  const auto& ctx = a.context();
  if (ctx.domain() != b.context().domain()) throw PreconditionError("multiply: context mismatch");
  const auto& nt = ctx.sdp().normal_table();
  for (auto x : ctx.coefficients()) {
    for (auto y : ctx.coefficients()) {
      if (nt.mul(x, y) != nt.mul(y, x)) throw PreconditionError("multiply: coefficients are not abelian");
    }
  }
  std::vector<std::uint32_t> values(ctx.domain_size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = nt.mul(a.values()[i], b.values()[i]);
  return CrossedHom::unchecked(a.context_ptr(), std::move(values));
}

std::vector<std::uint32_t> complement_indices(const SemidirectProduct& sdp, const PermutationGroup& k) {
  std::vector<std::uint32_t> out;
  for (const auto& x : k.elements()) out.push_back(static_cast<std::uint32_t>(sdp.complement().index_of_checked(x)));
  return sorted_unique(std::move(out));
}

std::vector<std::uint32_t> normal_indices(const SemidirectProduct& sdp, const PermutationGroup& t) {
  std::vector<std::uint32_t> out;
  for (const auto& x : t.elements()) out.push_back(static_cast<std::uint32_t>(sdp.normal().index_of_checked(x)));
  return sorted_unique(std::move(out));
}

// ---------------------------------------------------------------------------
// Decomposition checks

DecompositionReport restriction_product_check(const ContextPtr& ctx, const SylowSystem& sylows,
                                              bool check_homomorphism) {
  DecompositionReport report;
  const auto h = compute_h1(ctx);
  report.h1_size = h.size();

  struct Factor {
    std::uint64_t p;
    std::vector<std::uint32_t> domain;
    PointedH1 h1;
    std::vector<bool> invariant;
  };
  std::vector<Factor> factors;
  std::size_t product = 1;
  for (const auto& [p, sylow] : sylows.per_prime) {
    auto domain = complement_indices(ctx->sdp(), sylow);
    auto h1p = compute_h1(ctx->with_domain(domain));
    std::vector<bool> inv(h1p.size(), false);
    std::size_t inv_count = 0;
    for (auto c : invariant_h1(h1p)) {
      inv[c] = true;
      ++inv_count;
    }
    report.factors[p] = {h1p.size(), inv_count};
    product *= inv_count;
    factors.push_back(Factor{p, std::move(domain), std::move(h1p), std::move(inv)});
  }

  auto fail = [&](std::string why) {
    report.ok = false;
    if (report.failure.empty()) report.failure = std::move(why);
    return report;
  };

  auto tuple_of = [&](const CrossedHom& phi) {
    std::vector<std::size_t> t;
    for (const auto& f : factors) t.push_back(f.h1.class_of(restrict(phi, f.domain)));
    return t;
  };

  std::vector<std::vector<std::size_t>> tuples;
  for (const auto& rep : h.classes()) tuples.push_back(tuple_of(rep));

  for (std::size_t c = 0; c < tuples.size(); ++c) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!factors[i].invariant[tuples[c][i]]) {
        return fail("class " + std::to_string(c) + " restricts outside the invariant part at p = " +
                    std::to_string(factors[i].p));
      }
    }
  }
  for (const auto& phi : h.cocycles()) {
    if (tuple_of(phi) != tuples[h.class_of(phi)]) {
      return fail("restriction is not constant on a cohomology class");
    }
  }
  for (auto v : tuples.front()) {
    if (v != 0) return fail("distinguished class does not map to the distinguished tuple");
  }
  std::set<std::vector<std::size_t>> distinct(tuples.begin(), tuples.end());
  if (distinct.size() != tuples.size()) return fail("restriction map is not injective");
  if (h.size() != product) {
    return fail("cardinality mismatch: |H^1| = " + std::to_string(h.size()) +
                ", product of invariant parts = " + std::to_string(product));
  }
  if (check_homomorphism) {
    for (std::size_t a = 0; a < h.size(); ++a) {
      for (std::size_t b = 0; b < h.size(); ++b) {
        const auto c = h.class_of(multiply(h.classes()[a], h.classes()[b]));
        for (std::size_t i = 0; i < factors.size(); ++i) {
          const auto& fh = factors[i].h1;
          const auto expect = fh.class_of(multiply(fh.classes()[tuples[a][i]], fh.classes()[tuples[b][i]]));
          if (tuples[c][i] != expect) {
            return fail("restriction map is not a homomorphism at p = " + std::to_string(factors[i].p));
          }
        }
      }
    }
  }
  return report;
}

DecompositionReport check_primary_decomposition(const SdpPtr& sdp, const SylowSystem& sylows) {
  if (!sdp->normal().is_abelian()) throw PreconditionError("primary decomposition: N is not abelian");
  if (!(sylows.group == sdp->complement())) {
    throw PreconditionError("primary decomposition: Sylow system is not for J");
  }
  return restriction_product_check(CohomContext::full(sdp), sylows, true);
}

DecompositionReport nilpotent_component_split(const SdpPtr& sdp) {
  const auto& n = sdp->normal();
  const NilpotentDecomposition dec(n);
  DecompositionReport report;
  auto ctx = CohomContext::full(sdp);
  const auto h = compute_h1(ctx);
  report.h1_size = h.size();

  struct Component {
    std::uint64_t p;
    std::vector<std::uint32_t> projection;
    PointedH1 h1;
  };
  std::vector<Component> comps;
  std::size_t product = 1;
  for (const auto& [p, np] : dec.sylows().per_prime) {
    auto pctx = CohomContext::make(sdp, ctx->domain(), normal_indices(*sdp, np));
    std::vector<std::uint32_t> proj(n.order());
    for (std::size_t i = 0; i < n.order(); ++i) {
      proj[i] = static_cast<std::uint32_t>(n.index_of_checked(dec.component(n.element(i), p)));
    }
    auto h1p = compute_h1(pctx);
    report.factors[p] = {h1p.size(), h1p.size()};
    product *= h1p.size();
    comps.push_back(Component{p, std::move(proj), std::move(h1p)});
  }
  auto fail = [&](std::string why) {
    report.ok = false;
    if (report.failure.empty()) report.failure = std::move(why);
    return report;
  };
  auto tuple_of = [&](const CrossedHom& phi) {
    std::vector<std::size_t> t;
    for (const auto& c : comps) {
      std::vector<std::uint32_t> values;
      for (auto v : phi.values()) values.push_back(c.projection[v]);
      if (!is_cocycle(*c.h1.context(), values)) {
        throw TheoremViolation("projection of a cocycle onto N_" + std::to_string(c.p) +
                               " is not a cocycle");
      }
      t.push_back(c.h1.class_of(CrossedHom::unchecked(c.h1.context(), std::move(values))));
    }
    return t;
  };
  std::vector<std::vector<std::size_t>> tuples;
  try {
    for (const auto& rep : h.classes()) tuples.push_back(tuple_of(rep));
    for (const auto& phi : h.cocycles()) {
      if (tuple_of(phi) != tuples[h.class_of(phi)]) return fail("projection is not constant on a class");
    }
  } catch (const TheoremViolation& e) {
    return fail(e.what());
  }
  for (auto v : tuples.front()) {
    if (v != 0) return fail("distinguished class does not map to the distinguished tuple");
  }
  std::set<std::vector<std::size_t>> distinct(tuples.begin(), tuples.end());
  if (distinct.size() != tuples.size()) return fail("component map is not injective");
  if (h.size() != product) {
    return fail("cardinality mismatch: |H^1(J,N)| = " + std::to_string(h.size()) +
                ", product over components = " + std::to_string(product));
  }
  return report;
}

DecompositionReport restriction_iso_check(const SdpPtr& sdp, std::uint64_t p) {
  if (!is_p_group(sdp->normal(), p)) throw PreconditionError("restriction_iso_check: N is not a p-group");
  if (!is_supersoluble(sdp->whole())) throw PreconditionError("restriction_iso_check: G is not supersoluble");
  SylowSystem single{sdp->complement(), {}};
  single.per_prime.emplace(p, sylow_subgroup(sdp->complement(), p));
  return restriction_product_check(CohomContext::full(sdp), single, false);
}

// ---------------------------------------------------------------------------
// Cocycle extensions

namespace {

// Checks J = A x| B internally with A normal; returns A*B factor pairs.
void require_internal_semidirect(const CayleyTable& jt, const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b, const char* what) {
  if (!closed_under(jt, a) || !closed_under(jt, b)) {
    throw PreconditionError(std::string(what) + ": factors are not subgroups");
  }
  if (a.size() * b.size() != jt.order || intersect(a, b).size() != 1) {
    throw PreconditionError(std::string(what) + ": factors do not split J");
  }
  std::vector<bool> in_a(jt.order, false);
  for (auto x : a) in_a[x] = true;
  for (std::uint32_t g = 0; g < jt.order; ++g) {
    for (auto x : a) {
      if (!in_a[jt.mul(jt.mul(jt.inverse[g], x), g)]) {
        throw PreconditionError(std::string(what) + ": first factor is not normal in J");
      }
    }
  }
}

std::vector<std::uint32_t> all_indices(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

CrossedHom extend_cocycle_central_q(const CrossedHom& phi, const std::vector<std::uint32_t>& q) {
  const auto& ctx = phi.context();
  const auto& sdp = ctx.sdp();
  const auto& jt = sdp.complement_table();
  const auto qs = sorted_unique(q);
  require_internal_semidirect(jt, qs, ctx.domain(), "extend_cocycle_central_q");
  for (auto x : qs) {
    for (auto t : ctx.coefficients()) {
      if (sdp.act(x, t) != t) throw PreconditionError("extend_cocycle_central_q: Q acts nontrivially on N");
    }
  }
  auto full = ctx.with_domain(all_indices(jt.order));
  std::vector<std::uint32_t> values(jt.order, kUnset);
  for (auto m : ctx.domain()) {
    for (auto x : qs) values[full->position(jt.mul(x, m))] = phi(m);
  }
  if (!is_cocycle(*full, values)) throw TheoremViolation("extension phi~(qm) = phi(m) is not a cocycle");
  return CrossedHom::unchecked(std::move(full), std::move(values));
}

namespace {

bool pointwise_invariant(const CrossedHom& phi, const std::vector<std::uint32_t>& m) {
  const auto& ctx = phi.context();
  const auto& jt = ctx.sdp().complement_table();
  for (auto mm : m) {
    const auto minv = jt.inverse[mm];
    for (auto h : ctx.domain()) {
      if (phi(jt.mul(jt.mul(mm, h), minv)) != ctx.sdp().act(mm, phi(h))) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<CrossedHom> pointwise_invariant_representative(const CrossedHom& phi,
                                                             const std::vector<std::uint32_t>& m) {
  const auto& jt = phi.context().sdp().complement_table();
  require_internal_semidirect(jt, phi.context().domain(), sorted_unique(m), "pointwise_invariant_representative");
  for (auto n : phi.context().coefficients()) {
    auto psi = coboundary_adjust(phi, n);
    if (pointwise_invariant(psi, m)) return psi;
  }
  return std::nullopt;
}

CrossedHom extend_invariant_cocycle_p(const CrossedHom& phi, const std::vector<std::uint32_t>& m) {
  const auto& ctx = phi.context();
  const auto& jt = ctx.sdp().complement_table();
  const auto ms = sorted_unique(m);
  require_internal_semidirect(jt, ctx.domain(), ms, "extend_invariant_cocycle_p");
  if (!pointwise_invariant(phi, ms)) {
    throw PreconditionError("extend_invariant_cocycle_p: cocycle is not pointwise M-invariant");
  }
  auto full = ctx.with_domain(all_indices(jt.order));
  std::vector<std::uint32_t> values(jt.order, kUnset);
  for (auto h : ctx.domain()) {
    for (auto mm : ms) values[full->position(jt.mul(h, mm))] = phi(h);
  }
  if (!is_cocycle(*full, values)) throw TheoremViolation("extension phi~(hm) = phi(h) is not a cocycle");
  return CrossedHom::unchecked(std::move(full), std::move(values));
}

}  // namespace fixlab
