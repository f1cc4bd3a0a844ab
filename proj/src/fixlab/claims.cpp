#include "fixlab/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "fixlab/actions.hpp"
#include "fixlab/cohomology.hpp"
#include "fixlab/complements.hpp"
#include "fixlab/structure.hpp"

namespace fixlab {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Per-instance bookkeeping

struct Outcome {
  bool tested = false;
  std::string skip_reason;
  std::vector<ClaimFailure> failures;
  std::map<std::string, std::size_t> stats;
  std::vector<json> finds;

  void fail(std::string stage, json witness = json::object()) {
    failures.push_back({"", "", std::move(stage), std::move(witness)});
  }
  void count(const std::string& key, std::size_t k = 1) { stats[key] += k; }
  void skip(std::string reason) {
    tested = false;
    skip_reason = std::move(reason);
  }
};

struct Groups {
  const PermutationGroup& g;
  const PermutationGroup& n;
  const PermutationGroup& j;
};

Groups groups_of(const Instance& inst) {
  return {inst.sdp->whole(), inst.sdp->normal_image(), inst.sdp->complement_image()};
}

json subgroup_json(const PermutationGroup& h) {
  json gens = json::array();
  for (const auto& x : h.small_generators()) gens.push_back(x.to_cycles());
  return json{{"order", h.order()}, {"generators", std::move(gens)}};
}

std::vector<Permutation> sorted_conjugate(const PermutationGroup& h, const Permutation& x) {
  std::vector<Permutation> els;
  els.reserve(h.order());
  for (const auto& e : h.elements()) els.push_back(conjugate_element(e, x));
  std::sort(els.begin(), els.end());
  return els;
}

// Least conjugate of h under g, as a sorted element list.
std::vector<Permutation> canonical_conjugate(const PermutationGroup& h, const PermutationGroup& g) {
  std::vector<Permutation> best = h.elements();
  for (const auto& x : g.elements()) {
    auto c = sorted_conjugate(h, x);
    if (c < best) best = std::move(c);
  }
  return best;
}

// Local signature: least conjugate of each Sylow subgroup.
std::vector<std::vector<Permutation>> local_signature(const PermutationGroup& k, const PermutationGroup& g) {
  std::vector<std::vector<Permutation>> sig;
  for (auto p : prime_divisors(k)) sig.push_back(canonical_conjugate(sylow_subgroup(k, p), g));
  return sig;
}

// Conjugacy class index of each subgroup in a conjugation-closed list.
std::vector<std::size_t> conjugacy_classes(const std::vector<PermutationGroup>& subs, const PermutationGroup& g) {
  std::map<std::vector<Permutation>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i].elements(), i);
  std::vector<std::size_t> cls(subs.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] != SIZE_MAX) continue;
    cls[i] = next;
    std::vector<std::size_t> queue{i};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& s : g.small_generators()) {
        auto it = index.find(sorted_conjugate(subs[queue[q]], s));
        if (it == index.end()) throw InvariantViolation("complement list is not closed under conjugation");
        if (cls[it->second] == SIZE_MAX) {
          cls[it->second] = next;
          queue.push_back(it->second);
        }
      }
    }
    ++next;
  }
  return cls;
}

std::vector<std::size_t> local_classes(const std::vector<PermutationGroup>& subs, const PermutationGroup& g) {
  std::map<std::vector<std::vector<Permutation>>, std::size_t> ids;
  std::vector<std::size_t> out;
  for (const auto& k : subs) out.push_back(ids.emplace(local_signature(k, g), ids.size()).first->second);
  return out;
}

// Subgroups H with G = NH used as point stabilizers of coset actions: G, the
// complements, complements extended by cyclic subgroups of N, and subgroups
// generated by random conjugates of the Sylow subgroups of J.
std::vector<PermutationGroup> supplement_subgroups(const Instance& inst, std::uint64_t seed, std::size_t cap) {
  const auto gr = groups_of(inst);
  std::vector<PermutationGroup> out;
  std::set<std::vector<Permutation>> seen;
  auto add = [&](PermutationGroup h) {
    if (out.size() < cap && seen.insert(h.elements()).second) out.push_back(std::move(h));
  };
  add(gr.j);
  add(gr.g);
  const auto comps = enumerate_complements(*inst.sdp);
  for (std::size_t i = 0; i < comps.size() && i < 4; ++i) add(comps[i]);
  for (std::size_t i = 0; i < comps.size() && i < 2; ++i) {
    std::set<std::vector<Permutation>> cyclic_seen;
    std::size_t used = 0;
    for (const auto& x : gr.n.elements()) {
      if (x.is_identity() || used == 3) continue;
      auto c = cyclic_subgroup(x);
      if (!cyclic_seen.insert(c.elements()).second) continue;
      ++used;
      add(join(comps[i], c));
    }
  }
  std::mt19937_64 rng(seed ^ std::stoull(inst.id, nullptr, 16));
  std::vector<PermutationGroup> sylows;
  for (auto p : prime_divisors(gr.j)) sylows.push_back(sylow_subgroup(gr.j, p));
  for (int t = 0; t < 6 && !sylows.empty(); ++t) {
    std::vector<Permutation> gens;
    for (const auto& s : sylows) {
      const auto& x = gr.g.element(static_cast<std::size_t>(rng() % gr.g.order()));
      for (const auto& y : s.small_generators()) gens.push_back(conjugate_element(y, x));
    }
    add(PermutationGroup::generate(gr.g.degree(), std::move(gens)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Claim checks

void check_local_conjugacy(const Instance& inst, Outcome& out, bool supersoluble_path) {
  const auto gr = groups_of(inst);
  const auto comps = enumerate_complements(*inst.sdp);
  const auto conj = conjugacy_classes(comps, gr.g);
  const auto local = local_classes(comps, gr.g);
  out.tested = true;
  out.count("complements", comps.size());
  const std::size_t nconj = *std::max_element(conj.begin(), conj.end()) + 1;
  out.count("conjugacy_classes", nconj);
  if (nconj >= 2) out.count("instances_multi_class");

  std::map<std::size_t, std::size_t> c2l, l2c;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto [a, fresh_a] = c2l.emplace(conj[i], local[i]);
    auto [b, fresh_b] = l2c.emplace(local[i], conj[i]);
    if (a->second != local[i] || b->second != conj[i]) {
      std::size_t other = 0;
      for (std::size_t k = 0; k < i; ++k) {
        if (conj[k] == conj[i] || local[k] == local[i]) other = k;
      }
      out.fail("local conjugacy differs from conjugacy",
               json{{"complement_a", subgroup_json(comps[other])},
                    {"complement_b", subgroup_json(comps[i])},
                    {"conjugate", conj[other] == conj[i]},
                    {"locally_conjugate", local[other] == local[i]}});
      return;
    }
  }

  std::map<std::size_t, std::size_t> rep;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto [it, fresh] = rep.emplace(local[i], i);
    if (fresh) continue;
    const auto& a = comps[it->second];
    const auto& b = comps[i];
    try {
      const auto x = supersoluble_path ? conjugacy_via_local_supersoluble(a, b, gr.g, gr.n)
                                       : conjugacy_via_local_abelian(a, b, gr.g, gr.n);
      if (!gr.n.contains(x) || !conjugates_to(a, x, b)) {
        out.fail("lemma conjugator invalid", json{{"conjugator", x.to_cycles()}});
        return;
      }
    } catch (const TheoremViolation& e) {
      out.fail("lemma path found no conjugator in N",
               json{{"detail", e.what()}, {"complement_a", subgroup_json(a)}, {"complement_b", subgroup_json(b)}});
      return;
    }
    if (!conjugacy_witness(a, b, gr.g)) {
      out.fail("G-scan oracle disagrees with lemma path", json{{"complement_a", subgroup_json(a)}});
      return;
    }
    out.count("pairs_lemma_checked");
  }
}

void check_lem_ab(const Instance& inst, const ClaimConfig&, Outcome& out) {
  if (!inst.labels.n_abelian) return out.skip("N is not abelian");
  check_local_conjugacy(inst, out, false);
}

void check_lem_nil(const Instance& inst, const ClaimConfig&, Outcome& out) {
  if (!inst.labels.n_nilpotent) return out.skip("N is not nilpotent");
  if (!inst.labels.g_supersoluble) return out.skip("G is not supersoluble");
  check_local_conjugacy(inst, out, true);
}

void check_eq1(const Instance& inst, const ClaimConfig&, Outcome& out) {
  if (!inst.labels.n_abelian) return out.skip("N is not abelian");
  out.tested = true;
  const auto& j = inst.sdp->complement();
  const auto sylows = sylow_system(j);
  const auto rep = check_primary_decomposition(inst.sdp, sylows);
  out.count("h1_total", rep.h1_size);
  if (rep.h1_size > 1) out.count("instances_nontrivial_h1");
  if (!rep.ok) {
    out.fail("primary decomposition", json{{"detail", rep.failure}, {"h1", rep.h1_size}});
    return;
  }

  // Another Sylow system, conjugated inside J.
  SylowSystem alt = sylows;
  bool changed = false;
  for (auto& [p, s] : alt.per_prime) {
    for (const auto& x : j.elements()) {
      auto c = subgroup_conjugate(s, x);
      if (!(c == s)) {
        s = std::move(c);
        changed = true;
        break;
      }
    }
  }
  if (changed) {
    const auto alt_rep = check_primary_decomposition(inst.sdp, alt);
    out.count("alternate_sylow_checks");
    if (!alt_rep.ok || alt_rep.h1_size != rep.h1_size) {
      out.fail("primary decomposition with another Sylow system", json{{"detail", alt_rep.failure}});
      return;
    }
  }

  // Coset representatives suffice for J-invariance.
  const auto full = CohomContext::full(inst.sdp);
  for (const auto& [p, s] : sylows.per_prime) {
    const auto h1p = compute_h1(full->with_domain(complement_indices(*inst.sdp, s)));
    for (const auto& c : h1p.classes()) {
      if (is_J_invariant(c, true) != is_J_invariant(c, false)) {
        out.fail("transversal invariance test disagrees with the all-j test", json{{"prime", p}});
        return;
      }
      out.count("invariance_cross_checks");
    }
  }
}

void check_gaschutz(const Instance& inst, const ClaimConfig&, Outcome& out) {
  const auto gr = groups_of(inst);
  out.tested = true;
  std::vector<PermutationGroup> candidates{gr.n};
  std::set<std::vector<Permutation>> seen{gr.n.elements()};
  std::vector<bool> covered(gr.g.order(), false);
  for (std::size_t i = 1; i < gr.g.order(); ++i) {
    if (covered[i]) continue;
    const Permutation x = gr.g.element(i);
    // conjugates of x share its normal closure
    std::vector<std::size_t> queue{i};
    covered[i] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& c : gr.g.small_generators()) {
        const auto k = gr.g.index_of_checked(conjugate_element(gr.g.element(queue[q]), c));
        if (!covered[k]) {
          covered[k] = true;
          queue.push_back(k);
        }
      }
    }
    auto m = normal_closure(std::span<const Permutation>(&x, 1), gr.g);
    if (!m.is_abelian() || !seen.insert(m.elements()).second) continue;
    candidates.push_back(std::move(m));
  }
  for (const auto& m : candidates) {
    const bool direct = find_complement(gr.g, m).has_value();
    const auto ev = splits_gaschutz(gr.g, m);
    out.count("normal_subgroups_checked");
    if (ev.splits != direct) {
      out.fail("Gaschutz criterion disagrees with complement search",
               json{{"normal_subgroup", subgroup_json(m)}, {"search_splits", direct}, {"gaschutz_splits", ev.splits}});
      return;
    }
    const bool coprime = std::gcd(m.order(), gr.g.order() / m.order()) == 1;
    if (!direct) {
      out.count("nonsplit");
    } else if (!coprime) {
      out.count("split_noncoprime");
    } else {
      out.count("split_coprime");
    }
  }
}

void run_fixed_point_actions(const Instance& inst, const ClaimConfig& cfg, Outcome& out, bool nilpotent) {
  const auto gr = groups_of(inst);
  out.tested = true;
  for (const auto& h : supplement_subgroups(inst, cfg.seed, 16)) {
    const auto action = coset_action(gr.g, h);
    const auto r = nilpotent ? find_fixed_point_nilpotent(*inst.sdp, action)
                             : find_fixed_point_abelian(*inst.sdp, action);
    out.count("actions");
    const auto fixed = fixed_points(action, gr.j);
    switch (r.outcome) {
      case FinderOutcome::FixedPoint:
        out.count("fixed_points");
        if (action.points() > 1) out.count("fixed_points_nontrivial_omega");
        if (!nilpotent && r.complements_examined > 1) out.count("first_complement_not_locally_conjugate");
        break;
      case FinderOutcome::HypothesesUnmet:
        out.count("hypotheses_unmet");
        if (!fixed.empty()) out.count("hypotheses_unmet_but_fixed");
        break;
      case FinderOutcome::TheoremViolation:
        out.fail("finder reported a theorem violation",
                 json{{"detail", r.detail}, {"stabilizer", subgroup_json(h)}, {"points", action.points()}});
        return;
    }
    if (nilpotent) {
      out.count("recursion_direct", r.supplement_stats.direct);
      out.count("recursion_split_prime", r.supplement_stats.split_prime);
      out.count("recursion_minimal_inside", r.supplement_stats.minimal_inside);
      out.count("recursion_minimal_outside", r.supplement_stats.minimal_outside);
      if (inst.labels.n_abelian) {
        const auto ra = find_fixed_point_abelian(*inst.sdp, action);
        if ((ra.outcome == FinderOutcome::FixedPoint) != (r.outcome == FinderOutcome::FixedPoint)) {
          out.fail("abelian and nilpotent finders disagree", json{{"stabilizer", subgroup_json(h)}});
          return;
        }
        out.count("finder_cross_checks");
      }
    }
  }
}

void check_thm_ab(const Instance& inst, const ClaimConfig& cfg, Outcome& out) {
  if (!inst.labels.n_abelian) return out.skip("N is not abelian");
  run_fixed_point_actions(inst, cfg, out, false);
}

void check_thm_nil(const Instance& inst, const ClaimConfig& cfg, Outcome& out) {
  if (!inst.labels.n_nilpotent) return out.skip("N is not nilpotent");
  if (!inst.labels.g_supersoluble) return out.skip("G is not supersoluble");
  run_fixed_point_actions(inst, cfg, out, true);
}

// Corollary hypothesis: for each p, complements of N n S in a Sylow S of G
// are pairwise G-conjugate.
struct CorollaryHypothesis {
  std::optional<std::uint64_t> failing_prime;
  // some S has two or more complements, so the hypothesis has content
  bool nontrivial = false;
  bool conjugate_within_sylow = true;
};

CorollaryHypothesis corollary_hypothesis(const Groups& gr) {
  CorollaryHypothesis h;
  for (auto p : prime_divisors(gr.g)) {
    const auto s = sylow_subgroup(gr.g, p);
    const auto cs = enumerate_complements(s, intersection(gr.n, s));
    if (cs.size() > 1) h.nontrivial = true;
    for (std::size_t i = 1; i < cs.size(); ++i) {
      if (!conjugacy_witness(cs[0], cs[i], gr.g)) {
        h.failing_prime = p;
        return h;
      }
      if (!conjugacy_witness(cs[0], cs[i], s)) h.conjugate_within_sylow = false;
    }
  }
  return h;
}

void check_corollary(const Instance& inst, Outcome& out, bool nilpotent) {
  const auto gr = groups_of(inst);
  const auto hyp = corollary_hypothesis(gr);
  if (hyp.failing_prime) {
    const auto comps = enumerate_complements(*inst.sdp);
    const auto cls = conjugacy_classes(comps, gr.g);
    if (*std::max_element(cls.begin(), cls.end()) == 0) out.count("hypothesis_fails_but_conjugate");
    return out.skip("corollary hypothesis fails at p = " + std::to_string(*hyp.failing_prime));
  }
  out.tested = true;
  if (hyp.nontrivial) out.count("sylow_hypothesis_nontrivial");
  if (!hyp.conjugate_within_sylow) out.count("conjugate_in_G_not_in_S");
  const auto h1 = compute_h1(CohomContext::full(inst.sdp));
  for (const auto& phi : h1.classes()) {
    const auto k = complement_from_cocycle(phi);
    const auto action = coset_action(gr.g, k);
    const auto r = nilpotent ? find_fixed_point_nilpotent(*inst.sdp, action)
                             : find_fixed_point_abelian(*inst.sdp, action);
    if (r.outcome == FinderOutcome::HypothesesUnmet) {
      out.fail("finder hypotheses unmet although the corollary hypothesis holds",
               json{{"complement", subgroup_json(k)}, {"detail", r.detail}});
      return;
    }
    if (r.outcome == FinderOutcome::TheoremViolation) {
      out.fail("finder reported a theorem violation", json{{"complement", subgroup_json(k)}, {"detail", r.detail}});
      return;
    }
    if (!conjugates_to(gr.j, *r.conjugator, k)) {
      out.fail("finder conjugator does not map J onto the complement", json{{"complement", subgroup_json(k)}});
      return;
    }
    if (!conjugacy_witness(gr.j, k, gr.g)) {
      out.fail("G-scan oracle finds no conjugator", json{{"complement", subgroup_json(k)}});
      return;
    }
    out.count("complement_classes_checked");
    if (!phi.is_distinguished()) out.count("nontrivial_classes_checked");
  }
  if (h1.cocycles().size() > 1) out.count("multiple_complements_all_conjugate");
}

void check_cor_ab(const Instance& inst, const ClaimConfig&, Outcome& out) {
  if (!inst.labels.n_abelian) return out.skip("N is not abelian");
  check_corollary(inst, out, false);
}

void check_cor_nil(const Instance& inst, const ClaimConfig&, Outcome& out) {
  if (!inst.labels.n_nilpotent) return out.skip("N is not nilpotent");
  if (!inst.labels.g_supersoluble) return out.skip("G is not supersoluble");
  check_corollary(inst, out, true);
}

void check_eq2(const Instance& inst, const ClaimConfig&, Outcome& out) {
  if (!inst.labels.n_nilpotent) return out.skip("N is not nilpotent");
  out.tested = true;
  const auto rep = nilpotent_component_split(inst.sdp);
  out.count("h1_total", rep.h1_size);
  if (rep.factors.size() > 1) out.count("instances_multiple_components");
  if (!rep.ok) out.fail("component decomposition", json{{"detail", rep.failure}});
}

void check_prop_nilp(const Instance& inst, const ClaimConfig&, Outcome& out) {
  const auto p = prime_of_p_group(inst.n());
  if (!p) return out.skip("N is not a p-group");
  if (!inst.labels.g_supersoluble) return out.skip("G is not supersoluble");
  out.tested = true;
  const auto rep = restriction_iso_check(inst.sdp, *p);
  if (!rep.ok) {
    out.fail("restriction to a Sylow subgroup", json{{"detail", rep.failure}, {"prime", *p}});
    return;
  }
  out.count("restriction_checks");

  const auto& j = inst.j();
  const auto jprimes = prime_divisors(j);
  if (jprimes.empty()) return;
  const auto q = jprimes.primes.back();
  const auto qs = sylow_subgroup(j, q);
  if (!is_normal(qs, j)) {
    out.fail("Sylow subgroup for the largest prime is not normal in J", json{{"prime", q}});
    return;
  }
  const auto m = hall_complement_of_normal_sylow(j, qs);
  const auto& sdp = *inst.sdp;
  const auto full = CohomContext::full(inst.sdp);
  const auto q_idx = complement_indices(sdp, qs);
  const auto m_idx = complement_indices(sdp, m);

  if (q != *p) {
    bool trivial = true;
    for (auto x : q_idx) {
      for (std::uint32_t t = 0; t < sdp.normal().order() && trivial; ++t) trivial = sdp.act(x, t) == t;
    }
    if (!trivial) {
      out.count("central_q_precondition_unmet");
      return;
    }
    for (const auto& phi : enumerate_cocycles(full->with_domain(m_idx))) {
      try {
        const auto ext = extend_cocycle_central_q(phi, q_idx);
        if (!is_cocycle(ext.context(), ext.values()) || !(restrict(ext, m_idx) == phi)) {
          out.fail("central extension does not restrict back");
          return;
        }
      } catch (const TheoremViolation& e) {
        out.fail("central extension is not a cocycle", json{{"detail", e.what()}});
        return;
      }
      out.count("central_q_extensions");
    }
  } else {
    const auto h1 = compute_h1(full->with_domain(q_idx));
    for (auto c : invariant_h1(h1)) {
      const auto rep_phi = pointwise_invariant_representative(h1.classes()[c], m_idx);
      if (!rep_phi) {
        out.count("no_pointwise_invariant_representative");
        continue;
      }
      try {
        const auto ext = extend_invariant_cocycle_p(*rep_phi, m_idx);
        if (!is_cocycle(ext.context(), ext.values()) || !(restrict(ext, q_idx) == *rep_phi)) {
          out.fail("invariant extension does not restrict back");
          return;
        }
      } catch (const TheoremViolation& e) {
        out.fail("invariant extension is not a cocycle", json{{"detail", e.what()}});
        return;
      }
      out.count("p_extensions");
    }
  }
}

void check_prop_nil(const Instance& inst, const ClaimConfig&, Outcome& out) {
  if (!inst.labels.n_nilpotent) return out.skip("N is not nilpotent");
  if (!inst.labels.g_supersoluble) return out.skip("G is not supersoluble");
  out.tested = true;
  const auto rep = restriction_product_check(CohomContext::full(inst.sdp), sylow_system(inst.j()), false);
  out.count("h1_total", rep.h1_size);
  if (rep.h1_size > 1) out.count("instances_nontrivial_h1");
  if (!rep.ok) out.fail("restriction product", json{{"detail", rep.failure}});
}

void check_prop_nil_split(const Instance& inst, const ClaimConfig& cfg, Outcome& out) {
  if (!inst.labels.n_nilpotent) return out.skip("N is not nilpotent");
  if (!inst.labels.g_supersoluble) return out.skip("G is not supersoluble");
  const auto gr = groups_of(inst);
  out.tested = true;
  std::vector<PermutationGroup> sylows;
  for (auto p : prime_divisors(gr.j)) sylows.push_back(sylow_subgroup(gr.j, p));
  for (const auto& h : supplement_subgroups(inst, cfg.seed, 16)) {
    const bool hyp = std::all_of(sylows.begin(), sylows.end(),
                                 [&](const auto& s) { return conjugate_into_witness(s, h, gr.g).has_value(); });
    const auto oracle = conjugate_into_witness(gr.j, h, gr.g);
    if (!hyp) {
      out.count("hypothesis_unmet");
      if (oracle) {
        out.fail("oracle conjugates J into H although a Sylow subgroup cannot be", json{{"h", subgroup_json(h)}});
        return;
      }
      continue;
    }
    SupplementStats stats;
    try {
      const auto g = supplement_contains_conjugate(h, gr.g, gr.n, gr.j, &stats);
      if (!conjugate_contained_in(gr.j, g, h)) {
        out.fail("recursion output does not conjugate J into H", json{{"h", subgroup_json(h)}});
        return;
      }
    } catch (const TheoremViolation& e) {
      out.fail("recursion reported a theorem violation", json{{"detail", e.what()}, {"h", subgroup_json(h)}});
      return;
    }
    if (!oracle) {
      out.fail("brute-force oracle finds no conjugate of J in H", json{{"h", subgroup_json(h)}});
      return;
    }
    if (!find_complement(h, intersection(gr.n, h))) {
      out.fail("H does not split over N n H", json{{"h", subgroup_json(h)}});
      return;
    }
    out.count("supplements_solved");
    if (!is_subgroup(gr.j, h)) out.count("supplements_without_J");
    out.count("recursion_direct", stats.direct);
    out.count("recursion_split_prime", stats.split_prime);
    out.count("recursion_minimal_inside", stats.minimal_inside);
    out.count("recursion_minimal_outside", stats.minimal_outside);
    out.stats["recursion_max_depth"] = std::max(out.stats["recursion_max_depth"], stats.max_depth);
  }
}

void check_coprime(const Instance& inst, const ClaimConfig& cfg, Outcome& out) {
  if (!inst.labels.coprime) return out.skip("|N| and |J| are not coprime");
  const auto gr = groups_of(inst);
  out.tested = true;
  for (const auto& h : supplement_subgroups(inst, cfg.seed, 16)) {
    const auto action = coset_action(gr.g, h);
    out.count("actions");
    if (fixed_points(action, gr.j).empty()) {
      out.fail("coprime action without a J-fixed point", json{{"stabilizer", subgroup_json(h)}});
      return;
    }
    if (inst.labels.n_abelian) {
      const auto r = find_fixed_point_abelian(*inst.sdp, action);
      if (r.outcome != FinderOutcome::FixedPoint) {
        out.fail("abelian finder did not return a fixed point",
                 json{{"outcome", finder_outcome_name(r.outcome)}, {"detail", r.detail}});
        return;
      }
      out.count("abelian_finder_runs");
    }
    if (inst.labels.n_nilpotent && inst.labels.g_supersoluble) {
      const auto r = find_fixed_point_nilpotent(*inst.sdp, action);
      if (r.outcome != FinderOutcome::FixedPoint) {
        out.fail("nilpotent finder did not return a fixed point",
                 json{{"outcome", finder_outcome_name(r.outcome)}, {"detail", r.detail}});
        return;
      }
      out.count("nilpotent_finder_runs");
    }
  }
  if (!inst.labels.n_nilpotent) out.count("non_nilpotent_instances");
}

void check_ls(const Instance& inst, const ClaimConfig&, Outcome& out) {
  if (!inst.labels.n_nilpotent) return out.skip("N is not nilpotent");
  if (!inst.labels.g_soluble) return out.skip("G is not soluble");
  if (inst.labels.g_supersoluble) return out.skip("G is supersoluble: excluded by the supersoluble conjugacy lemma");
  if (!is_supersoluble(inst.j())) return out.skip("J is not supersoluble");
  const auto gr = groups_of(inst);
  out.tested = true;
  const auto comps = enumerate_complements(*inst.sdp);
  const auto conj = conjugacy_classes(comps, gr.g);
  const auto local = local_classes(comps, gr.g);
  out.count("complements", comps.size());
  std::map<std::size_t, std::size_t> first_in_local;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto [it, fresh] = first_in_local.emplace(local[i], i);
    if (fresh || conj[it->second] == conj[i]) continue;
    const auto& a = comps[it->second];
    const auto& b = comps[i];
    // re-verify with the direct searches
    if (!locally_conjugate(a, b, gr.g).conjugate || conjugacy_witness(a, b, gr.g)) {
      out.fail("search hit does not re-verify", json{{"complement_a", subgroup_json(a)}});
      return;
    }
    out.finds.push_back(json{{"instance", instance_to_json(inst)},
                             {"complement_a", subgroup_json(a)},
                             {"complement_b", subgroup_json(b)}});
    out.count("locally_conjugate_not_conjugate");
    return;
  }
}

// ---------------------------------------------------------------------------
// Claim table

using Checker = std::function<void(const Instance&, const ClaimConfig&, Outcome&)>;

struct ClaimSpec {
  std::string id;
  std::size_t default_max;
  bool nilpotent_family;
  bool all_families;
  CoprimeFilter coprime;
  Checker check;
  // Nonvacuity requirements: stat key -> minimum total.
  std::vector<std::pair<std::string, std::size_t>> required;
  bool require_noncoprime = true;
  // Searches may legitimately find nothing to test within small bounds.
  bool allow_empty = false;
};

const std::vector<ClaimSpec>& claim_table() {
  static const std::vector<ClaimSpec> table = {
      {"lem-ab", 48, false, false, CoprimeFilter::Any, check_lem_ab,
       {{"instances_multi_class", 1}, {"pairs_lemma_checked", 1}}},
      {"eq-1", 48, false, false, CoprimeFilter::Any, check_eq1, {{"instances_nontrivial_h1", 1}}},
      {"gaschutz", 96, false, false, CoprimeFilter::Any, check_gaschutz, {{"nonsplit", 1}, {"split_noncoprime", 1}}},
      {"thm-ab", 48, false, false, CoprimeFilter::Any, check_thm_ab,
       {{"fixed_points_nontrivial_omega", 1}, {"hypotheses_unmet", 1}}},
      {"cor-ab", 48, false, false, CoprimeFilter::Any, check_cor_ab, {{"sylow_hypothesis_nontrivial", 1}}},
      {"eq-2", 96, true, false, CoprimeFilter::Any, check_eq2, {{"instances_multiple_components", 1}}},
      {"prop-nilp", 96, true, false, CoprimeFilter::Any, check_prop_nilp,
       {{"central_q_extensions", 1}, {"p_extensions", 1}}},
      {"prop-nil", 96, true, false, CoprimeFilter::Any, check_prop_nil, {{"instances_nontrivial_h1", 1}}},
      {"lem-nil", 96, true, false, CoprimeFilter::Any, check_lem_nil,
       {{"instances_multi_class", 1}, {"pairs_lemma_checked", 1}}},
      {"prop-nil-split", 96, true, false, CoprimeFilter::Any, check_prop_nil_split,
       {{"supplements_without_J", 1}, {"recursion_minimal_outside", 1}}},
      {"thm-nil", 96, true, false, CoprimeFilter::Any, check_thm_nil, {{"fixed_points_nontrivial_omega", 1}}},
      {"cor-nil", 96, true, false, CoprimeFilter::Any, check_cor_nil, {{"sylow_hypothesis_nontrivial", 1}}},
      {"ls-search", 96, true, false, CoprimeFilter::Any, check_ls, {}, false, true},
      {"coprime-sanity", 96, true, true, CoprimeFilter::Coprime, check_coprime, {{"actions", 1}}, false},
  };
  return table;
}

const ClaimSpec& find_spec(const std::string& id) {
  for (const auto& s : claim_table()) {
    if (s.id == id) return s;
  }
  throw PreconditionError("unknown claim '" + id + "'");
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : claim_table()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

bool is_claim_id(const std::string& id) {
  const auto& ids = claim_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::size_t default_max_order(const std::string& id) { return find_spec(id).default_max; }

const Corpus& cached_corpus(const CorpusConfig& config) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<Corpus>> cache;
  const std::string key = std::to_string(config.max_order) + "/" + std::to_string(config.min_order) + "/" +
                          std::to_string(config.abelian_n) + std::to_string(config.nilpotent_n) +
                          std::to_string(config.other_n) + std::to_string(config.require_supersoluble) + "/" +
                          std::to_string(static_cast<int>(config.coprime)) + "/" + std::to_string(config.seed) +
                          "/" + std::to_string(config.max_actions_per_pair) + "/" +
                          std::to_string(config.automorphism_cap);
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<Corpus>(corpus_generate(config));
  return *slot;
}

ClaimReport run_claim(const std::string& id, const ClaimConfig& config) {
  const auto& spec = find_spec(id);
  const auto start = std::chrono::steady_clock::now();
  ClaimReport report;
  report.claim = id;
  report.max_order = config.max_order ? config.max_order : spec.default_max;
  report.seed = config.seed;

  CorpusConfig cc;
  cc.max_order = report.max_order;
  cc.seed = config.seed;
  cc.abelian_n = true;
  cc.nilpotent_n = spec.nilpotent_family || spec.all_families;
  cc.other_n = spec.all_families;
  cc.coprime = spec.coprime;
  const auto& corpus = cached_corpus(cc);
  report.corpus_skips = corpus.skipped;
  const auto& insts = corpus.instances;
  report.considered = insts.size();

  std::vector<Outcome> outcomes(insts.size());
  std::size_t workers = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::max<std::size_t>(1, std::min(workers, insts.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < insts.size(); i = next++) {
      auto& out = outcomes[i];
      try {
        spec.check(insts[i], config, out);
      } catch (const CapExceeded& e) {
        out.skip(std::string("cap exceeded: ") + e.what());
      } catch (const std::exception& e) {
        out.fail("exception", json{{"detail", e.what()}});
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < insts.size(); ++i) {
    auto& out = outcomes[i];
    const auto& inst = insts[i];
    if (!out.failures.empty()) out.tested = true;
    if (out.tested) {
      ++report.tested;
      if (!inst.labels.coprime) ++report.stats["tested_noncoprime"];
    } else {
      report.skipped.push_back({inst.id, inst.name, out.skip_reason.empty() ? "not applicable" : out.skip_reason});
    }
    for (const auto& [k, v] : out.stats) {
      if (k == "recursion_max_depth") {
        report.stats[k] = std::max(report.stats[k], v);
      } else {
        report.stats[k] += v;
      }
    }
    for (auto& f : out.failures) {
      f.instance_id = inst.id;
      f.instance_name = inst.name;
      f.witness["instance"] = instance_to_json(inst);
      report.failures.push_back(std::move(f));
    }
    for (auto& f : out.finds) report.finds.push_back(std::move(f));
  }

  auto suite_failure = [&](std::string why) { report.failures.push_back({"", "", "suite", json{{"detail", why}}}); };
  if (report.tested == 0 && !spec.allow_empty) suite_failure("no instance met the claim's hypotheses");
  if (spec.require_noncoprime && report.stats["tested_noncoprime"] == 0) {
    suite_failure("no non-coprime instance was tested");
  }
  for (const auto& [key, minimum] : spec.required) {
    if (report.stats[key] < minimum) {
      suite_failure("vacuous suite: statistic '" + key + "' is " + std::to_string(report.stats[key]) +
                    ", expected at least " + std::to_string(minimum));
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ClaimReport search_ls_counterexample(const ClaimConfig& config) { return run_claim("ls-search", config); }

json report_to_json(const ClaimReport& report, bool include_timing) {
  json out;
  out["claim"] = report.claim;
  out["status"] = report.passed() ? "pass" : "fail";
  out["config"] = json{{"max_order", report.max_order}, {"seed", report.seed}};
  out["instances"] = json{{"considered", report.considered},
                          {"tested", report.tested},
                          {"skipped", report.skipped.size()},
                          {"failed", report.failures.size()}};
  json skipped = json::array();
  for (const auto& s : report.skipped) {
    skipped.push_back(json{{"instance", s.instance_id}, {"name", s.instance_name}, {"reason", s.reason}});
  }
  out["skipped"] = std::move(skipped);
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(
        json{{"instance", f.instance_id}, {"name", f.instance_name}, {"stage", f.stage}, {"witness", f.witness}});
  }
  out["failures"] = std::move(failures);
  out["stats"] = report.stats;
  out["finds"] = report.finds;
  json corpus_skips = json::array();
  for (const auto& s : report.corpus_skips) corpus_skips.push_back(json{{"pair", s.pair}, {"reason", s.reason}});
  out["corpus_skips"] = std::move(corpus_skips);
  if (include_timing) out["wall_seconds"] = report.wall_seconds;
  return out;
}

}  // namespace fixlab
