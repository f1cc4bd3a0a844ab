#include "fixlab/actions.hpp"

#include <algorithm>

#include "fixlab/structure.hpp"

namespace fixlab {

namespace {

constexpr std::size_t kActionTableCap = 20'000'000;
constexpr std::uint32_t kUnset = UINT32_MAX;

bool is_point_permutation(const std::vector<std::uint32_t>& row, std::size_t points) {
  if (row.size() != points) return false;
  std::vector<bool> hit(points, false);
  for (auto w : row) {
    if (w >= points || hit[w]) return false;
    hit[w] = true;
  }
  return true;
}

std::vector<std::size_t> generator_indices(const GAction& action, const PermutationGroup& h) {
  std::vector<std::size_t> out;
  for (const auto& x : h.generators()) {
    auto idx = action.group().index_of(x);
    if (!idx) throw PreconditionError("action: subgroup element outside the acting group");
    out.push_back(*idx);
  }
  return out;
}

}  // namespace

GAction GAction::from_generator_rows(PermutationGroup g, std::size_t points,
                                     const std::vector<std::vector<std::uint32_t>>& rows) {
  if (points == 0) throw PreconditionError("action: empty point set");
  if (rows.size() != g.generators().size()) {
    throw PreconditionError("action: expected " + std::to_string(g.generators().size()) +
                            " generator rows, got " + std::to_string(rows.size()));
  }
  for (const auto& row : rows) {
    if (!is_point_permutation(row, points)) throw PreconditionError("action: generator row is not a permutation");
  }
  if (g.order() * points > kActionTableCap) throw CapExceeded("action: table too large");
  GAction a;
  a.points_ = points;
  a.table_.assign(g.order() * points, kUnset);
  for (std::uint32_t w = 0; w < points; ++w) a.table_[w] = w;
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  std::vector<std::size_t> queue{0};
  const auto& gens = g.generators();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto y = g.index_of_checked(gens[i] * g.element(x));
      const std::uint32_t* src = &a.table_[x * points];
      std::uint32_t* dst = &a.table_[y * points];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
        for (std::size_t w = 0; w < points; ++w) dst[w] = rows[i][src[w]];
      } else {
        for (std::size_t w = 0; w < points; ++w) {
          if (dst[w] != rows[i][src[w]]) throw PreconditionError("action: generator rows are not a homomorphism");
        }
      }
    }
  }
  a.group_ = std::move(g);
  return a;
}

std::uint32_t GAction::act(const Permutation& g, std::uint32_t point) const {
  return act(group_.index_of_checked(g), point);
}

std::vector<std::vector<std::uint32_t>> GAction::generator_rows() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& x : group_.generators()) {
    const auto idx = group_.index_of_checked(x);
    out.emplace_back(table_.begin() + static_cast<std::ptrdiff_t>(idx * points_),
                     table_.begin() + static_cast<std::ptrdiff_t>((idx + 1) * points_));
  }
  return out;
}

GAction coset_action(const PermutationGroup& g, const PermutationGroup& h) {
  if (!is_subgroup(h, g)) throw PreconditionError("coset_action: not a subgroup");
  const auto reps = left_transversal(g, h);
  std::vector<std::uint32_t> coset_of(g.order(), kUnset);
  for (std::uint32_t k = 0; k < reps.size(); ++k) {
    for (const auto& x : h.elements()) coset_of[g.index_of_checked(reps[k] * x)] = k;
  }
  if (coset_of[0] != 0) throw InvariantViolation("coset_action: base coset is not point 0");
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& gen : g.generators()) {
    std::vector<std::uint32_t> row(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) row[k] = coset_of[g.index_of_checked(gen * reps[k])];
    rows.push_back(std::move(row));
  }
  return GAction::from_generator_rows(g, reps.size(), rows);
}

GAction natural_action(const PermutationGroup& g) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& gen : g.generators()) {
    auto im = gen.images();
    rows.emplace_back(im.begin(), im.end());
  }
  return GAction::from_generator_rows(g, g.degree(), rows);
}

std::vector<std::vector<std::uint32_t>> orbits(const GAction& action, const PermutationGroup& h) {
  const auto gens = generator_indices(action, h);
  std::vector<bool> seen(action.points(), false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t start = 0; start < action.points(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orbit{start};
    seen[start] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (auto gi : gens) {
        const auto w = action.act(gi, orbit[q]);
        if (!seen[w]) {
          seen[w] = true;
          orbit.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive_on_restriction(const GAction& action, const PermutationGroup& n) {
  return orbits(action, n).size() == 1;
}

PermutationGroup stabilizer(const GAction& action, std::uint32_t alpha) {
  if (alpha >= action.points()) throw PreconditionError("stabilizer: point out of range");
  const auto& g = action.group();
  std::vector<Permutation> els;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (action.act(i, alpha) == alpha) els.push_back(g.element(i));
  }
  return PermutationGroup::from_elements(g.degree(), std::move(els));
}

std::vector<std::uint32_t> fixed_points(const GAction& action, const PermutationGroup& h) {
  const auto gens = generator_indices(action, h);
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < action.points(); ++w) {
    if (std::all_of(gens.begin(), gens.end(), [&](auto gi) { return action.act(gi, w) == w; })) {
      out.push_back(w);
    }
  }
  return out;
}

const char* finder_outcome_name(FinderOutcome outcome) {
  switch (outcome) {
    case FinderOutcome::FixedPoint:
      return "fixed-point";
    case FinderOutcome::HypothesesUnmet:
      return "hypotheses-unmet";
    case FinderOutcome::TheoremViolation:
      return "theorem-violation";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Finders

namespace {

struct FinderSetup {
  PermutationGroup g;
  PermutationGroup n;
  PermutationGroup j;
  std::uint32_t alpha = 0;
  PermutationGroup stab;
  // Per prime p dividing |J|: the Sylow P of J and n_p in N with P^n_p <= G_alpha.
  std::map<std::uint64_t, std::pair<PermutationGroup, Permutation>> sylow_data;
};

// Fills the setup, or returns a finished result when the hypotheses fail.
std::optional<FinderResult> prepare(const SemidirectProduct& sdp, const GAction& action, FinderSetup& s) {
  if (!(action.group() == sdp.whole())) throw PreconditionError("finder: action is not of N x| J");
  s.g = sdp.whole();
  s.n = sdp.normal_image();
  s.j = sdp.complement_image();
  if (!is_transitive_on_restriction(action, s.n)) throw PreconditionError("finder: N is not transitive");
  s.stab = stabilizer(action, s.alpha);
  for (auto p : prime_divisors(s.j)) {
    auto sp = sylow_subgroup(s.j, p);
    if (fixed_points(action, sp).empty()) {
      FinderResult r;
      r.outcome = FinderOutcome::HypothesesUnmet;
      r.detail = "Sylow " + std::to_string(p) + "-subgroup of J fixes no point";
      return r;
    }
    std::optional<Permutation> np;
    for (const auto& x : s.n.elements()) {
      if (conjugate_contained_in(sp, x, s.stab)) {
        np = x;
        break;
      }
    }
    if (!np) throw InvariantViolation("finder: Sylow fixes a point but no N-conjugate lies in G_alpha");
    s.sylow_data.emplace(p, std::make_pair(std::move(sp), *np));
  }
  return std::nullopt;
}

FinderResult violation(std::string detail) {
  FinderResult r;
  r.outcome = FinderOutcome::TheoremViolation;
  r.detail = std::move(detail);
  return r;
}

FinderResult finish(const GAction& action, const FinderSetup& s, const Permutation& g, FinderResult r) {
  const auto omega = action.act(g, s.alpha);
  const auto fixed = fixed_points(action, s.j);
  if (!std::binary_search(fixed.begin(), fixed.end(), omega)) {
    throw InvariantViolation("finder: constructed point is not fixed by J");
  }
  r.outcome = FinderOutcome::FixedPoint;
  r.point = omega;
  r.conjugator = g;
  return r;
}

}  // namespace

FinderResult find_fixed_point_abelian(const SemidirectProduct& sdp, const GAction& action) {
  if (!sdp.normal().is_abelian()) throw PreconditionError("find_fixed_point_abelian: N is not abelian");
  FinderSetup s;
  if (auto early = prepare(sdp, action, s)) return *early;
  if (!is_supplement(s.g, s.n, s.stab)) return violation("G_alpha does not supplement N");
  const auto n_alpha = intersection(s.n, s.stab);

  // S = L P^n is a Sylow subgroup of G_alpha in which P^n complements L.
  for (const auto& [p, data] : s.sylow_data) {
    const auto pn = subgroup_conjugate(data.first, data.second);
    const auto l = sylow_subgroup(n_alpha, p);
    const auto sp = join(l, pn);
    if (sp.order() != p_part(s.stab.order(), p) || !is_complement(sp, l, pn)) {
      return violation("P^n does not complement L in a Sylow " + std::to_string(p) + "-subgroup of G_alpha");
    }
  }
  if (!splits_gaschutz(s.stab, n_alpha).splits) return violation("G_alpha does not split over N n G_alpha");

  const auto complements = enumerate_complements(s.stab, n_alpha);
  FinderResult r;
  r.complements_total = complements.size();
  if (complements.empty()) return violation("no complement of N n G_alpha in G_alpha");
  for (const auto& c : complements) {
    ++r.complements_examined;
    if (!locally_conjugate(s.j, c, s.g).conjugate) continue;
    try {
      const auto g = conjugacy_via_local_abelian(s.j, c, s.g, s.n);
      return finish(action, s, g, std::move(r));
    } catch (const TheoremViolation& e) {
      auto v = violation(e.what());
      v.complements_examined = r.complements_examined;
      v.complements_total = r.complements_total;
      return v;
    }
  }
  auto v = violation("no complement of N n G_alpha is locally conjugate to J");
  v.complements_examined = r.complements_examined;
  v.complements_total = r.complements_total;
  return v;
}

FinderResult find_fixed_point_nilpotent(const SemidirectProduct& sdp, const GAction& action) {
  if (!is_nilpotent(sdp.normal())) throw PreconditionError("find_fixed_point_nilpotent: N is not nilpotent");
  if (!is_supersoluble(sdp.whole())) {
    throw PreconditionError("find_fixed_point_nilpotent: N x| J is not supersoluble");
  }
  FinderSetup s;
  if (auto early = prepare(sdp, action, s)) return *early;
  if (!is_supplement(s.g, s.n, s.stab)) return violation("G_alpha does not supplement N");
  FinderResult r;
  try {
    const auto g = supplement_contains_conjugate(s.stab, s.g, s.n, s.j, &r.supplement_stats);
    return finish(action, s, g, std::move(r));
  } catch (const TheoremViolation& e) {
    auto v = violation(e.what());
    v.supplement_stats = r.supplement_stats;
    return v;
  }
}

}  // namespace fixlab
