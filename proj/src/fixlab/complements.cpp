#include "fixlab/complements.hpp"

#include <algorithm>
#include <set>

#include "fixlab/cohomology.hpp"

namespace fixlab {

namespace {

void require_normal(const PermutationGroup& n, const PermutationGroup& g, const char* what) {
  if (n.degree() != g.degree()) throw DegreeMismatch(std::string(what) + ": degree mismatch");
  if (!is_normal(n, g)) throw PreconditionError(std::string(what) + ": subgroup is not normal");
}

std::vector<PermutationGroup> lift_search(const PermutationGroup& g, const PermutationGroup& n,
                                          bool first_only) {
  require_normal(n, g, "complement search");
  const std::size_t index = g.order() / n.order();
  if (index == 1) return {PermutationGroup::trivial(g.degree())};
  if (n.is_trivial()) return {g};
  const auto quotient = quotient_representation(g, n);
  std::vector<Permutation> lifts;
  for (const auto& q : quotient.image.small_generators()) lifts.push_back(*quotient.projection.lift(q));

  const auto& ns = n.elements();
  std::vector<std::size_t> choice(lifts.size(), 0);
  std::vector<Permutation> gens(lifts.size());
  std::set<std::vector<Permutation>> found;
  std::vector<PermutationGroup> out;
  while (true) {
    for (std::size_t i = 0; i < lifts.size(); ++i) gens[i] = lifts[i] * ns[choice[i]];
    auto els = closure(g.degree(), gens, index);
    if (els && els->size() == index && found.insert(*els).second) {
      out.push_back(PermutationGroup::generate(g.degree(), gens, index));
      if (first_only) return out;
    }
    std::size_t i = lifts.size();
    while (true) {
      if (i == 0) {
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.elements() < b.elements(); });
        return out;
      }
      --i;
      if (++choice[i] < ns.size()) break;
      choice[i] = 0;
    }
  }
}

}  // namespace

bool is_supplement(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h) {
  require_normal(n, g, "is_supplement");
  if (!is_subgroup(h, g)) throw PreconditionError("is_supplement: not a subgroup");
  return product_order(n, h) == g.order();
}

bool is_complement(const PermutationGroup& g, const PermutationGroup& n, const PermutationGroup& h) {
  return is_supplement(g, n, h) && n.order() * h.order() == g.order();
}

SupplementWitness make_supplement_witness(const PermutationGroup& g, const PermutationGroup& n,
                                          const PermutationGroup& h) {
  if (!is_supplement(g, n, h)) throw PreconditionError("supplement witness: G != NH");
  SupplementWitness w{g, n, h, n.order() * h.order() == g.order(), {}};
  for (auto p : prime_divisors(h)) w.sylows.emplace(p, sylow_subgroup(h, p));
  return w;
}

std::vector<PermutationGroup> enumerate_complements(const SemidirectProduct& sdp) {
  auto ctx = CohomContext::full(std::make_shared<const SemidirectProduct>(sdp));
  std::vector<PermutationGroup> out;
  for (const auto& phi : enumerate_cocycles(ctx)) out.push_back(complement_from_cocycle(phi));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.elements() < b.elements(); });
  return out;
}

std::vector<PermutationGroup> enumerate_complements(const PermutationGroup& g, const PermutationGroup& n) {
  return lift_search(g, n, false);
}

std::optional<PermutationGroup> find_complement(const PermutationGroup& g, const PermutationGroup& n) {
  auto out = lift_search(g, n, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

GaschutzEvidence splits_gaschutz(const PermutationGroup& g, const PermutationGroup& n) {
  require_normal(n, g, "splits_gaschutz");
  if (!n.is_abelian()) throw PreconditionError("splits_gaschutz: normal subgroup is not abelian");
  GaschutzEvidence ev;
  for (auto p : prime_divisors(g)) {
    const auto s = sylow_subgroup(g, p);
    auto c = find_complement(s, intersection(n, s));
    if (!c) ev.splits = false;
    ev.per_prime.emplace(p, std::move(c));
  }
  return ev;
}

LocalConjugacy locally_conjugate(const PermutationGroup& h, const PermutationGroup& h2,
                                 const PermutationGroup& g) {
  LocalConjugacy out;
  if (!is_subgroup(h, g) || !is_subgroup(h2, g)) throw PreconditionError("locally_conjugate: not subgroups");
  if (h.order() != h2.order()) {
    out.conjugate = false;
    return out;
  }
  for (auto p : prime_divisors(h)) {
    auto w = conjugacy_witness(sylow_subgroup(h, p), sylow_subgroup(h2, p), g);
    if (!w) {
      out.conjugate = false;
      return out;
    }
    out.witnesses.emplace(p, *w);
  }
  return out;
}

std::optional<Permutation> conjugacy_witness(const PermutationGroup& h, const PermutationGroup& h2,
                                             const PermutationGroup& g) {
  if (h.order() != h2.order()) return std::nullopt;
  for (const auto& x : g.elements()) {
    if (conjugates_to(h, x, h2)) return x;
  }
  return std::nullopt;
}

std::optional<Permutation> conjugate_into_witness(const PermutationGroup& h, const PermutationGroup& k,
                                                  const PermutationGroup& g) {
  if (k.order() % h.order() != 0) return std::nullopt;
  for (const auto& x : g.elements()) {
    if (conjugate_contained_in(h, x, k)) return x;
  }
  return std::nullopt;
}

namespace {

Permutation scan_normal_for_conjugator(const PermutationGroup& j, const PermutationGroup& j2,
                                       const PermutationGroup& g, const PermutationGroup& n,
                                       const char* what) {
  if (!is_complement(g, n, j) || !is_complement(g, n, j2)) {
    throw PreconditionError(std::string(what) + ": subgroups are not complements");
  }
  if (!locally_conjugate(j, j2, g).conjugate) {
    throw PreconditionError(std::string(what) + ": complements are not locally conjugate");
  }
  for (const auto& x : n.elements()) {
    if (conjugates_to(j, x, j2)) return x;
  }
  throw TheoremViolation(std::string(what) + ": locally conjugate complements with no conjugator in N");
}

}  // namespace

Permutation conjugacy_via_local_abelian(const PermutationGroup& j, const PermutationGroup& j2,
                                        const PermutationGroup& g, const PermutationGroup& n) {
  require_normal(n, g, "conjugacy_via_local_abelian");
  if (!n.is_abelian()) throw PreconditionError("conjugacy_via_local_abelian: N is not abelian");
  return scan_normal_for_conjugator(j, j2, g, n, "conjugacy_via_local_abelian");
}

Permutation conjugacy_via_local_supersoluble(const PermutationGroup& j, const PermutationGroup& j2,
                                             const PermutationGroup& g, const PermutationGroup& n) {
  require_normal(n, g, "conjugacy_via_local_supersoluble");
  if (!is_nilpotent(n)) throw PreconditionError("conjugacy_via_local_supersoluble: N is not nilpotent");
  if (!is_supersoluble(g)) throw PreconditionError("conjugacy_via_local_supersoluble: G is not supersoluble");
  return scan_normal_for_conjugator(j, j2, g, n, "conjugacy_via_local_supersoluble");
}

// ---------------------------------------------------------------------------
// Supplement recursion

namespace {

struct SupplementProblem {
  PermutationGroup g;
  PermutationGroup n;
  PermutationGroup j;
  PermutationGroup h;
};

// Per prime p dividing |j|: x with (Sylow_p j)^x <= h, or nullopt if some
// prime has none.
std::optional<std::map<std::uint64_t, Permutation>> sylow_hypothesis(const SupplementProblem& pr) {
  std::map<std::uint64_t, Permutation> out;
  for (auto p : prime_divisors(pr.j)) {
    auto w = conjugate_into_witness(sylow_subgroup(pr.j, p), pr.h, pr.g);
    if (!w) return std::nullopt;
    out.emplace(p, *w);
  }
  return out;
}

struct QuotientProblem {
  SupplementProblem problem;
  QuotientMap map;
};

QuotientProblem quotient_problem(const SupplementProblem& pr, const PermutationGroup& a) {
  auto q = quotient_representation(pr.g, a);
  SupplementProblem sub{q.image, q.projection.image_of(pr.n), q.projection.image_of(pr.j),
                        q.projection.image_of(pr.h)};
  return {std::move(sub), std::move(q)};
}

Permutation solve(const SupplementProblem& pr, std::size_t depth, SupplementStats& stats);

Permutation solve_checked(const SupplementProblem& pr, std::size_t depth, SupplementStats& stats) {
  auto g = solve(pr, depth, stats);
  if (!conjugate_contained_in(pr.j, g, pr.h)) {
    throw InvariantViolation("supplement recursion returned g with J^g not inside H");
  }
  return g;
}

Permutation solve(const SupplementProblem& pr, std::size_t depth, SupplementStats& stats) {
  stats.max_depth = std::max(stats.max_depth, depth);
  auto hyp = sylow_hypothesis(pr);
  if (!hyp) {
    throw InvariantViolation("supplement recursion: Sylow hypothesis lost at depth " + std::to_string(depth));
  }
  if (product_order(pr.h, pr.n) != pr.g.order()) {
    throw InvariantViolation("supplement recursion: H does not supplement N");
  }

  // J a p-group (or trivial): the hypothesis witness already works.
  const auto jprimes = prime_divisors(pr.j);
  if (jprimes.size() <= 1) {
    ++stats.direct;
    return jprimes.empty() ? pr.g.identity() : hyp->begin()->second;
  }
  if (pr.h.order() == pr.g.order()) {
    ++stats.direct;
    return pr.g.identity();
  }
  if (pr.n.is_trivial() || prime_divisors(pr.h).size() <= 1) {
    ++stats.direct;
    if (auto w = conjugate_into_witness(pr.j, pr.h, pr.g)) return *w;
    throw TheoremViolation("supplement recursion: base case without a conjugate of J in H");
  }

  const auto nprimes = prime_divisors(pr.n);
  if (nprimes.size() > 1) {
    // Smallest p with H N_p < G; recurse in G/N_p, then inside H N_p.
    for (auto p : nprimes) {
      const auto np = sylow_subgroup(pr.n, p);
      if (product_order(pr.h, np) == pr.g.order()) continue;
      ++stats.split_prime;
      const auto qp = quotient_problem(pr, np);
      const auto gbar = solve_checked(qp.problem, depth + 1, stats);
      const auto g1 = *qp.map.projection.lift(gbar);
      const auto hn = join(pr.h, np);
      const auto j1 = subgroup_conjugate(pr.j, g1);
      if (!is_subgroup(j1, hn)) throw InvariantViolation("supplement recursion: lifted J^g not in H N_p");
      SupplementProblem inner{hn, intersection(pr.n, hn), j1, pr.h};
      const auto g2 = solve_checked(inner, depth + 1, stats);
      return g1 * g2;
    }
    throw TheoremViolation("supplement recursion: H N_p = G for every prime p");
  }

  // N is a q-group.
  const auto a = minimal_normal_of_prime_order(pr.g, pr.n);
  if (!a) throw InvariantViolation("supplement recursion: no normal subgroup of prime order in N");
  if (is_subgroup(*a, pr.h)) {
    ++stats.minimal_inside;
    const auto qa = quotient_problem(pr, *a);
    const auto gbar = solve_checked(qa.problem, depth + 1, stats);
    return *qa.map.projection.lift(gbar);
  }

  ++stats.minimal_outside;
  const auto q = prime_divisors(pr.n).primes.front();
  // Replace J by a conjugate whose Sylow q-subgroup lies in H.
  Permutation x = pr.g.identity();
  if (auto it = hyp->find(q); it != hyp->end()) x = it->second;
  const auto j1 = subgroup_conjugate(pr.j, x);
  const auto jq = sylow_subgroup(j1, q);
  if (!is_subgroup(jq, pr.h)) throw InvariantViolation("supplement recursion: J_q not inside H");

  const auto qa = quotient_problem(pr, *a);
  SupplementProblem sub = qa.problem;
  sub.j = qa.map.projection.image_of(j1);
  const auto gbar = solve_checked(sub, depth + 1, stats);
  const auto kbar0 = subgroup_conjugate(sub.j, gbar);
  const auto jqbar = qa.map.projection.image_of(jq);

  // Conjugate of Kbar inside HA/A containing J_q A/A; elements of HA/A first.
  std::optional<PermutationGroup> kbar;
  auto try_conjugator = [&](const Permutation& y) {
    auto cand = subgroup_conjugate(kbar0, y);
    if (is_subgroup(cand, sub.h) && is_subgroup(jqbar, cand)) kbar = std::move(cand);
  };
  for (const auto& y : sub.h.elements()) {
    try_conjugator(y);
    if (kbar) break;
  }
  for (std::size_t i = 0; !kbar && i < sub.g.order(); ++i) try_conjugator(sub.g.element(i));
  if (!kbar) throw TheoremViolation("supplement recursion: no conjugate of Kbar contains J_q A/A");

  std::vector<Permutation> k_elements;
  for (const auto& hh : pr.h.elements()) {
    if (kbar->contains(qa.map.projection(hh))) k_elements.push_back(hh);
  }
  const auto k = PermutationGroup::from_elements(pr.g.degree(), std::move(k_elements));
  if (k.order() != pr.j.order() || !is_complement(pr.g, pr.n, k) || !is_subgroup(jq, k)) {
    throw InvariantViolation("supplement recursion: preimage K is not a complement containing J_q");
  }
  try {
    return conjugacy_via_local_supersoluble(pr.j, k, pr.g, pr.n);
  } catch (const PreconditionError& e) {
    throw TheoremViolation(std::string("supplement recursion: ") + e.what());
  }
}

}  // namespace

Permutation supplement_contains_conjugate(const PermutationGroup& h, const PermutationGroup& g,
                                          const PermutationGroup& n, const PermutationGroup& j,
                                          SupplementStats* stats) {
  require_normal(n, g, "supplement_contains_conjugate");
  if (!is_subgroup(h, g) || !is_subgroup(j, g)) {
    throw PreconditionError("supplement_contains_conjugate: not subgroups of G");
  }
  if (!is_nilpotent(n)) throw PreconditionError("supplement_contains_conjugate: N is not nilpotent");
  if (!is_complement(g, n, j)) throw PreconditionError("supplement_contains_conjugate: J does not complement N");
  if (!is_supersoluble(g)) throw PreconditionError("supplement_contains_conjugate: G is not supersoluble");
  SupplementProblem pr{g, n, j, h};
  if (!sylow_hypothesis(pr)) {
    throw PreconditionError("supplement_contains_conjugate: H misses a conjugate of some Sylow of J");
  }
  SupplementStats local;
  auto out = solve_checked(pr, 0, stats ? *stats : local);
  return out;
}

}  // namespace fixlab
