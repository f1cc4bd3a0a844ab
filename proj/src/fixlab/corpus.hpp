#pragma once

// Deterministic corpus of small semidirect products N x| J.

#include <cstdint>
#include <string>
#include <vector>

#include "fixlab/instance_io.hpp"

namespace fixlab {

struct NamedGroup {
  std::string name;
  PermutationGroup group;
};

// Abelian groups of order at most max_order as products of cyclic groups of
// prime-power order, one per isomorphism type.
std::vector<NamedGroup> abelian_catalog(std::size_t max_order);
// Nonabelian groups used as N: nilpotent ones plus S3 and D5.
std::vector<NamedGroup> nonabelian_normal_catalog(std::size_t max_order);
// Groups used as J.
std::vector<NamedGroup> complement_catalog(std::size_t max_order);

enum class CoprimeFilter { Any, Coprime, NonCoprime };

struct CorpusConfig {
  std::size_t max_order = 48;
  std::size_t min_order = 2;
  bool abelian_n = true;
  // Nonabelian nilpotent N.
  bool nilpotent_n = true;
  // Nonabelian, non-nilpotent N.
  bool other_n = false;
  bool require_supersoluble = false;
  CoprimeFilter coprime = CoprimeFilter::Any;
  std::uint64_t seed = 1;
  // Actions kept per (N, J) pair; larger sets are sampled with the seed.
  std::size_t max_actions_per_pair = 48;
  std::size_t automorphism_cap = 25000;
};

struct CorpusSkip {
  std::string pair;
  std::string reason;
};

struct Corpus {
  std::vector<Instance> instances;  // sorted by id
  std::vector<CorpusSkip> skipped;
  std::size_t duplicates = 0;
  std::size_t sampled_pairs = 0;
};

Corpus corpus_generate(const CorpusConfig& config);

}  // namespace fixlab
