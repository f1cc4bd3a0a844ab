#include "fixlab/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fixlab/structure.hpp"

namespace fixlab {

namespace {

// All ways to write p^a as a product of cyclic p-power orders, descending.
void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> abelian_types(std::size_t order) {
  std::vector<std::vector<std::size_t>> types{{}};
  for (auto p : prime_divisors(order)) {
    std::size_t a = 0;
    for (std::size_t m = order; m % p == 0; m /= p) ++a;
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(a, a, cur, parts);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : types) {
      for (const auto& part : parts) {
        auto merged = t;
        for (auto k : part) {
          std::size_t q = 1;
          for (std::size_t i = 0; i < k; ++i) q *= p;
          merged.push_back(q);
        }
        next.push_back(std::move(merged));
      }
    }
    types = std::move(next);
  }
  for (auto& t : types) std::sort(t.begin(), t.end());
  return types;
}

std::string abelian_name(const std::vector<std::size_t>& orders) {
  if (orders.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += "x";
    out += "C" + std::to_string(orders[i]);
  }
  return out;
}

void add_if(std::vector<NamedGroup>& out, std::size_t max_order, std::string name, std::size_t order,
            const std::function<PermutationGroup()>& make) {
  if (order <= max_order) out.push_back({std::move(name), make()});
}

std::string fingerprint(const std::string& pair, const Instance& inst) {
  const auto& sdp = *inst.sdp;
  std::ostringstream fp;
  fp << pair << '|';
  const auto& l = inst.labels;
  fp << l.n_abelian << l.n_nilpotent << l.g_supersoluble << l.g_soluble << l.coprime << '|';
  for (const auto& [o, c] : order_statistics(sdp.whole())) fp << o << ':' << c << ',';
  fp << '|';
  const auto no = sdp.normal().order();
  const auto jo = sdp.complement().order();
  std::size_t centralized = 0;
  for (std::uint32_t n = 0; n < no; ++n) {
    bool fixed = true;
    for (std::uint32_t j = 0; j < jo && fixed; ++j) fixed = sdp.act(j, n) == n;
    if (fixed) ++centralized;
  }
  fp << centralized << '|';
  std::multiset<std::pair<std::size_t, std::size_t>> profile;
  for (std::uint32_t j = 0; j < jo; ++j) {
    std::size_t c = 0;
    for (std::uint32_t n = 0; n < no; ++n) c += sdp.act(j, n) == n;
    profile.emplace(sdp.complement_table().element_order[j], c);
  }
  for (const auto& [o, c] : profile) fp << o << ':' << c << ',';
  return fp.str();
}

bool family_selected(const CorpusConfig& c, bool abelian, bool nilpotent) {
  if (abelian) return c.abelian_n;
  if (nilpotent) return c.nilpotent_n;
  return c.other_n;
}

}  // namespace

std::vector<NamedGroup> abelian_catalog(std::size_t max_order) {
  std::vector<NamedGroup> out;
  for (std::size_t m = 2; m <= max_order; ++m) {
    for (const auto& t : abelian_types(m)) out.push_back({abelian_name(t), abelian_group(t)});
  }
  return out;
}

std::vector<NamedGroup> nonabelian_normal_catalog(std::size_t max_order) {
  std::vector<NamedGroup> out;
  add_if(out, max_order, "S3", 6, [] { return symmetric_group(3); });
  add_if(out, max_order, "D4", 8, [] { return dihedral_group(4); });
  add_if(out, max_order, "Q8", 8, [] { return dicyclic_group(2); });
  add_if(out, max_order, "D5", 10, [] { return dihedral_group(5); });
  add_if(out, max_order, "C2xD4", 16, [] { return direct_product(cyclic_group(2), dihedral_group(4)); });
  add_if(out, max_order, "C2xQ8", 16, [] { return direct_product(cyclic_group(2), dicyclic_group(2)); });
  add_if(out, max_order, "D8", 16, [] { return dihedral_group(8); });
  add_if(out, max_order, "Q16", 16, [] { return dicyclic_group(4); });
  add_if(out, max_order, "C3xD4", 24, [] { return direct_product(cyclic_group(3), dihedral_group(4)); });
  add_if(out, max_order, "C3xQ8", 24, [] { return direct_product(cyclic_group(3), dicyclic_group(2)); });
  return out;
}

std::vector<NamedGroup> complement_catalog(std::size_t max_order) {
  auto out = abelian_catalog(std::min<std::size_t>(max_order, 24));
  add_if(out, max_order, "S3", 6, [] { return symmetric_group(3); });
  add_if(out, max_order, "D4", 8, [] { return dihedral_group(4); });
  add_if(out, max_order, "Q8", 8, [] { return dicyclic_group(2); });
  add_if(out, max_order, "D5", 10, [] { return dihedral_group(5); });
  add_if(out, max_order, "A4", 12, [] { return alternating_group(4); });
  add_if(out, max_order, "D6", 12, [] { return dihedral_group(6); });
  add_if(out, max_order, "Dic3", 12, [] { return dicyclic_group(3); });
  add_if(out, max_order, "S4", 24, [] { return symmetric_group(4); });
  return out;
}

Corpus corpus_generate(const CorpusConfig& config) {
  Corpus corpus;
  const std::size_t half = config.max_order / 2;
  auto normals = abelian_catalog(half);
  for (auto& g : nonabelian_normal_catalog(half)) normals.push_back(std::move(g));
  const auto complements = complement_catalog(half);

  std::set<std::string> fingerprints;
  for (const auto& nn : normals) {
    const bool abelian = nn.group.is_abelian();
    const bool nilpotent = abelian || is_nilpotent(nn.group);
    if (!family_selected(config, abelian, nilpotent)) continue;
    std::optional<PermutationGroup> aut;
    bool aut_failed = false;
    for (const auto& jj : complements) {
      const std::size_t order = nn.group.order() * jj.group.order();
      if (order > config.max_order || order < config.min_order) continue;
      const bool coprime = std::gcd(nn.group.order(), jj.group.order()) == 1;
      if (config.coprime == CoprimeFilter::Coprime && !coprime) continue;
      if (config.coprime == CoprimeFilter::NonCoprime && coprime) continue;
      const std::string pair = nn.name + " x| " + jj.name;
      if (aut_failed) continue;
      if (!aut) {
        try {
          aut = automorphisms(nn.group, kAutomorphismSourceCap, config.automorphism_cap);
        } catch (const CapExceeded& e) {
          aut_failed = true;
          corpus.skipped.push_back({nn.name + " x| *", e.what()});
          continue;
        }
      }
      std::vector<std::vector<Permutation>> actions;
      try {
        actions = enumerate_actions(jj.group, nn.group, *aut);
      } catch (const CapExceeded& e) {
        corpus.skipped.push_back({pair, e.what()});
        continue;
      }
      std::vector<std::size_t> chosen(actions.size());
      std::iota(chosen.begin(), chosen.end(), 0);
      if (actions.size() > config.max_actions_per_pair) {
        ++corpus.sampled_pairs;
        std::mt19937_64 rng(config.seed ^ std::stoull(content_hash(pair), nullptr, 16));
        // partial Fisher-Yates with raw engine output for portability
        for (std::size_t i = 0; i < config.max_actions_per_pair; ++i) {
          const auto k = i + static_cast<std::size_t>(rng() % (chosen.size() - i));
          std::swap(chosen[i], chosen[k]);
        }
        chosen.resize(config.max_actions_per_pair);
        std::sort(chosen.begin(), chosen.end());
      }
      for (auto k : chosen) {
        Instance inst;
        try {
          inst = make_instance(pair + " #" + std::to_string(k),
                               ActionHom::from_automorphisms(jj.group, nn.group, actions[k]));
        } catch (const CapExceeded& e) {
          corpus.skipped.push_back({pair, e.what()});
          continue;
        }
        if (config.require_supersoluble && !inst.labels.g_supersoluble) continue;
        if (!fingerprints.insert(fingerprint(pair, inst)).second) {
          ++corpus.duplicates;
          continue;
        }
        corpus.instances.push_back(std::move(inst));
      }
    }
  }
  std::sort(corpus.instances.begin(), corpus.instances.end(),
            [](const Instance& a, const Instance& b) { return a.id < b.id; });
  return corpus;
}

}  // namespace fixlab
