#include "fixlab/structure.hpp"

#include <algorithm>

#include "fixlab/complements.hpp"

namespace fixlab {

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeSet prime_divisors(std::uint64_t n) {
  PrimeSet out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.primes.push_back(n);
  return out;
}

PrimeSet prime_divisors(const PermutationGroup& g) { return prime_divisors(g.order()); }

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_group(const PermutationGroup& g, std::uint64_t p) { return p_part(g.order(), p) == g.order(); }

std::optional<std::uint64_t> prime_of_p_group(const PermutationGroup& g) {
  auto primes = prime_divisors(g);
  if (primes.size() != 1) return std::nullopt;
  return primes.primes.front();
}

const PermutationGroup& SylowSystem::at(std::uint64_t p) const {
  auto it = per_prime.find(p);
  if (it == per_prime.end()) {
    throw PreconditionError("SylowSystem: no Sylow subgroup recorded for p = " + std::to_string(p));
  }
  return it->second;
}

PermutationGroup sylow_subgroup(const PermutationGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  auto sylow = PermutationGroup::trivial(g.degree());
  while (sylow.order() < target) {
    auto norm = normalizer(sylow, g);
    bool grown = false;
    for (const auto& x : norm.elements()) {
      if (sylow.contains(x)) continue;
      // order of x modulo the current p-subgroup
      std::uint64_t k = 1;
      for (Permutation y = x; !sylow.contains(y); y = y * x) ++k;
      if (p_part(k, p) != k) continue;
      auto gens = sylow.small_generators();
      gens.push_back(x);
      sylow = PermutationGroup::generate(g.degree(), std::move(gens));
      grown = true;
      break;
    }
    if (!grown) throw InvariantViolation("sylow_subgroup: normalizer quotient has no p-element");
  }
  return sylow;
}

SylowSystem sylow_system(const PermutationGroup& g) {
  SylowSystem s{g, {}};
  for (auto p : prime_divisors(g)) s.per_prime.emplace(p, sylow_subgroup(g, p));
  return s;
}

bool is_nilpotent(const PermutationGroup& g) {
  for (auto p : prime_divisors(g)) {
    if (!is_normal(sylow_subgroup(g, p), g)) return false;
  }
  return true;
}

bool is_supersoluble(const PermutationGroup& g) {
  if (g.is_trivial()) return true;
  // Quotients of supersoluble groups are supersoluble, so any normal subgroup
  // of prime order may be factored out.
  auto a = minimal_normal_of_prime_order(g);
  if (!a) return false;
  return is_supersoluble(quotient_representation(g, *a).image);
}

bool is_soluble(const PermutationGroup& g) {
  auto current = g;
  while (!current.is_trivial()) {
    auto next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = next;
  }
  return true;
}

std::optional<PermutationGroup> minimal_normal_of_prime_order(const PermutationGroup& g) {
  return minimal_normal_of_prime_order(g, g);
}

std::optional<PermutationGroup> minimal_normal_of_prime_order(const PermutationGroup& g,
                                                              const PermutationGroup& within) {
  std::vector<bool> tried(within.order(), false);
  for (std::size_t i = 1; i < within.order(); ++i) {
    if (tried[i]) continue;
    const auto& x = within.element(i);
    if (!is_prime(x.order())) continue;
    auto a = cyclic_subgroup(x);
    for (const auto& y : a.elements()) {
      if (auto idx = within.index_of(y)) tried[*idx] = true;
    }
    if (is_normal(a, g)) return a;
  }
  return std::nullopt;
}

PermutationGroup hall_complement_of_normal_sylow(const PermutationGroup& j,
                                                 const PermutationGroup& q) {
  if (!is_normal(q, j)) throw PreconditionError("hall_complement: subgroup is not normal");
  auto p = prime_of_p_group(q);
  if (!q.is_trivial() && (!p || p_part(j.order(), *p) != q.order())) {
    throw PreconditionError("hall_complement: subgroup is not a Sylow subgroup");
  }
  auto m = find_complement(j, q);
  if (!m) throw InvariantViolation("hall_complement: normal Sylow subgroup has no complement");
  return *m;
}

NilpotentDecomposition::NilpotentDecomposition(const PermutationGroup& n) : sylows_{n, {}} {
  if (!is_nilpotent(n)) throw PreconditionError("sylow_decomposition: group is not nilpotent");
  sylows_ = sylow_system(n);
  const std::uint64_t order = n.order();
  for (auto p : prime_divisors(n)) {
    // e = 1 mod p^a and e = 0 mod |n| / p^a
    const std::uint64_t pa = p_part(order, p);
    const std::uint64_t rest = order / pa;
    std::uint64_t e = 0;
    for (std::uint64_t t = 0; t < pa; ++t) {
      if ((t * rest) % pa == 1 % pa) {
        e = t * rest;
        break;
      }
    }
    exponents_[p] = e;
  }
}

Permutation NilpotentDecomposition::component(const Permutation& x, std::uint64_t p) const {
  auto it = exponents_.find(p);
  if (it == exponents_.end()) return Permutation::identity(x.degree());
  return power(x, static_cast<long long>(it->second));
}

std::vector<Permutation> NilpotentDecomposition::factorize(const Permutation& x) const {
  if (!sylows_.group.contains(x)) throw PreconditionError("factorize: element not in group");
  std::vector<Permutation> out;
  for (const auto& [p, e] : exponents_) out.push_back(power(x, static_cast<long long>(e)));
  return out;
}

NilpotentDecomposition sylow_decomposition_nilpotent(const PermutationGroup& n) {
  return NilpotentDecomposition(n);
}

}  // namespace fixlab
