#include "fixlab/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace fixlab {

namespace {

// Left regular representation of a group given by a multiplication rule on
// {0..order-1} with identity 0.
PermutationGroup regular_group(std::size_t order,
                               const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                               const std::vector<std::size_t>& generator_labels) {
  std::vector<Permutation> gens;
  for (auto g : generator_labels) {
    std::vector<Point> images(order);
    for (std::size_t y = 0; y < order; ++y) images[y] = static_cast<Point>(mul(g, y));
    gens.emplace_back(std::move(images));
  }
  return PermutationGroup::generate(order, std::move(gens));
}

}  // namespace

PermutationGroup cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic_group: order must be positive");
  if (n == 1) return PermutationGroup::trivial(1);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermutationGroup::generate(n, {Permutation(std::move(images))});
}

PermutationGroup abelian_group(const std::vector<std::size_t>& cyclic_orders) {
  std::size_t degree = 0;
  for (auto m : cyclic_orders) degree += m;
  if (degree == 0) return PermutationGroup::trivial(1);
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto m : cyclic_orders) {
    if (m > 1) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < m; ++i) images[offset + i] = static_cast<Point>(offset + (i + 1) % m);
      gens.emplace_back(std::move(images));
    }
    offset += m;
  }
  return PermutationGroup::generate(degree, std::move(gens));
}

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < a.degree(); ++i) images[i] = g[i];
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < b.degree(); ++i) {
      images[a.degree() + i] = static_cast<Point>(a.degree() + g[i]);
    }
    gens.emplace_back(std::move(images));
  }
  return PermutationGroup::generate(degree, std::move(gens));
}

PermutationGroup dihedral_group(std::size_t n) {
  if (n < 3) throw PreconditionError("dihedral_group: need n >= 3");
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermutationGroup::generate(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermutationGroup dicyclic_group(std::size_t n) {
  if (n < 2) throw PreconditionError("dicyclic_group: need n >= 2");
  const std::size_t m = 2 * n;  // order of a
  // label k + m*e stands for a^k x^e; x a = a^-1 x, x^2 = a^n
  auto mul = [m, n](std::size_t u, std::size_t v) {
    std::size_t k1 = u % m, e1 = u / m, k2 = v % m, e2 = v / m;
    std::size_t k = e1 ? (k1 + m - k2) % m : (k1 + k2) % m;
    std::size_t e = e1 + e2;
    if (e == 2) {
      k = (k + n) % m;
      e = 0;
    }
    return k + m * e;
  };
  return regular_group(2 * m, mul, {1, m});
}

PermutationGroup symmetric_group(std::size_t n) {
  if (n <= 1) return PermutationGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cycle(n), swap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cycle[i] = static_cast<Point>((i + 1) % n);
    swap[i] = static_cast<Point>(i);
  }
  std::swap(swap[0], swap[1]);
  return PermutationGroup::generate(n, {Permutation(std::move(cycle)), Permutation(std::move(swap))});
}

PermutationGroup alternating_group(std::size_t n) {
  if (n < 3) return PermutationGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    gens.push_back(Permutation::from_cycles("(0 1 " + std::to_string(i) + ")", n));
  }
  return PermutationGroup::generate(n, std::move(gens));
}

Permutation automorphism_to_index_permutation(const GroupHom& aut) {
  const auto& n = aut.source();
  std::vector<Point> images(n.order());
  for (std::size_t i = 0; i < n.order(); ++i) images[i] = static_cast<Point>(aut.map_index(i));
  return Permutation(std::move(images));
}

PermutationGroup automorphisms(const PermutationGroup& n, std::size_t source_cap, std::size_t cap) {
  if (n.order() > source_cap) {
    throw CapExceeded("automorphisms: |N| = " + std::to_string(n.order()) + " exceeds cap " +
                      std::to_string(source_cap));
  }
  const auto table = make_cayley_table(n);
  const std::size_t order = n.order();
  std::vector<std::uint32_t> gens;
  for (const auto& g : n.small_generators()) gens.push_back(static_cast<std::uint32_t>(n.index_of_checked(g)));

  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<Permutation> found;
  std::vector<std::uint32_t> gen_images(gens.size());

  // Extends `map` (a homomorphism on <gens[0..level)>) by gens[level] -> x.
  auto extend = [&](std::vector<std::uint32_t>& map, std::size_t level) {
    std::vector<std::uint32_t> queue;
    for (std::uint32_t a = 0; a < order; ++a) {
      if (map[a] != kUnset) queue.push_back(a);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto a = queue[q];
      for (std::size_t t = 0; t <= level; ++t) {
        const auto b = table.mul(a, gens[t]);
        const auto val = table.mul(map[a], gen_images[t]);
        if (map[b] == kUnset) {
          map[b] = val;
          queue.push_back(b);
        } else if (map[b] != val) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t, const std::vector<std::uint32_t>&)> search =
      [&](std::size_t level, const std::vector<std::uint32_t>& map) {
        if (level == gens.size()) {
          std::vector<bool> hit(order, false);
          for (auto v : map) hit[v] = true;
          if (std::find(hit.begin(), hit.end(), false) != hit.end()) return;
          std::vector<Point> images(order);
          for (std::size_t i = 0; i < order; ++i) images[i] = static_cast<Point>(map[i]);
          found.emplace_back(std::move(images));
          if (found.size() > cap) {
            throw CapExceeded("automorphisms: |Aut(N)| exceeds cap " + std::to_string(cap));
          }
          return;
        }
        std::vector<bool> in_image(order, false);
        for (auto v : map) {
          if (v != kUnset) in_image[v] = true;
        }
        for (std::uint32_t x = 1; x < order; ++x) {
          if (in_image[x] || table.element_order[x] != table.element_order[gens[level]]) continue;
          gen_images[level] = x;
          auto next = map;
          if (extend(next, level)) search(level + 1, next);
        }
      };

  std::vector<std::uint32_t> start(order, kUnset);
  start[0] = 0;
  search(0, start);
  return PermutationGroup::from_elements(order, std::move(found));
}

// ---------------------------------------------------------------------------
// ActionHom

namespace {

// Table of act(j, n) from automorphisms (index permutations) attached to
// actor generators; nullopt unless they define a homomorphism J -> Aut(N).
std::optional<std::vector<std::uint32_t>> try_action_table(const PermutationGroup& actor,
                                                           const PermutationGroup& target,
                                                           const std::vector<Permutation>& autos) {
  const auto& gens = actor.generators();
  std::vector<std::optional<Permutation>> map(actor.order());
  map[0] = Permutation::identity(target.order());
  std::vector<std::size_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto y = actor.index_of_checked(actor.element(x) * gens[i]);
      Permutation val = *map[x] * autos[i];
      if (!map[y]) {
        map[y] = std::move(val);
        queue.push_back(y);
      } else if (*map[y] != val) {
        return std::nullopt;
      }
    }
  }
  std::vector<std::uint32_t> table(actor.order() * target.order());
  for (std::size_t j = 0; j < actor.order(); ++j) {
    for (std::size_t n = 0; n < target.order(); ++n) table[j * target.order() + n] = (*map[j])[n];
  }
  return table;
}

std::vector<std::uint32_t> action_table(const PermutationGroup& actor, const PermutationGroup& target,
                                        const std::vector<Permutation>& autos) {
  if (autos.size() != actor.generators().size()) {
    throw PreconditionError("action: expected one automorphism per generator of J");
  }
  for (const auto& a : autos) {
    if (a.degree() != target.order()) throw PreconditionError("action: automorphism degree mismatch");
  }
  auto table = try_action_table(actor, target, autos);
  if (!table) {
    throw PreconditionError("action: generator images do not define a homomorphism J -> Aut(N)");
  }
  return std::move(*table);
}

void check_automorphism(const PermutationGroup& target, const Permutation& aut) {
  // multiplicativity on generators suffices once the map is a bijection
  for (const auto& s : target.small_generators()) {
    const auto si = target.index_of_checked(s);
    for (std::size_t x = 0; x < target.order(); ++x) {
      const auto xs = target.index_of_checked(target.element(x) * s);
      if (target.element(aut[xs]) != target.element(aut[x]) * target.element(aut[si])) {
        throw PreconditionError("action: map is not an automorphism of N");
      }
    }
  }
}

}  // namespace

ActionHom ActionHom::from_generator_images(PermutationGroup actor, PermutationGroup target,
                                           std::vector<std::vector<Permutation>> images) {
  std::vector<Permutation> autos;
  for (auto& im : images) {
    auto hom = GroupHom::from_generator_images(target, target, std::move(im));
    if (!hom.is_injective()) throw PreconditionError("action: generator image is not bijective");
    autos.push_back(automorphism_to_index_permutation(hom));
  }
  return from_automorphisms(std::move(actor), std::move(target), autos);
}

ActionHom ActionHom::from_automorphisms(PermutationGroup actor, PermutationGroup target,
                                        const std::vector<Permutation>& autos) {
  for (const auto& a : autos) check_automorphism(target, a);
  ActionHom h;
  h.table_ = action_table(actor, target, autos);
  h.actor_ = std::move(actor);
  h.target_ = std::move(target);
  return h;
}

ActionHom ActionHom::trivial(PermutationGroup actor, PermutationGroup target) {
  std::vector<Permutation> autos(actor.generators().size(), Permutation::identity(target.order()));
  return from_automorphisms(std::move(actor), std::move(target), autos);
}

Permutation ActionHom::apply(const Permutation& j, const Permutation& n) const {
  auto ji = static_cast<std::uint32_t>(actor_.index_of_checked(j));
  auto ni = static_cast<std::uint32_t>(target_.index_of_checked(n));
  return target_.element(apply(ji, ni));
}

std::vector<std::vector<Permutation>> ActionHom::generator_images() const {
  std::vector<std::vector<Permutation>> out;
  for (const auto& j : actor_.generators()) {
    const auto ji = static_cast<std::uint32_t>(actor_.index_of_checked(j));
    std::vector<Permutation> row;
    for (const auto& n : target_.generators()) {
      row.push_back(target_.element(apply(ji, static_cast<std::uint32_t>(target_.index_of_checked(n)))));
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool ActionHom::is_trivial() const {
  for (std::size_t j = 0; j < actor_.order(); ++j) {
    for (std::size_t n = 0; n < target_.order(); ++n) {
      if (table_[j * target_.order() + n] != n) return false;
    }
  }
  return true;
}

std::vector<std::vector<Permutation>> enumerate_actions(const PermutationGroup& j,
                                                        const PermutationGroup& n,
                                                        const PermutationGroup& aut,
                                                        std::size_t budget) {
  const auto& gens = j.generators();
  if (aut.degree() != n.order()) throw PreconditionError("enumerate_actions: Aut(N) degree mismatch");
  std::vector<std::vector<Permutation>> out;
  if (gens.empty()) {
    out.emplace_back();
    return out;
  }
  // candidates per generator: automorphisms whose order divides the generator's
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  std::vector<std::size_t> aut_order(aut.order());
  for (std::size_t a = 0; a < aut.order(); ++a) aut_order[a] = aut.element(a).order();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = gens[i].order();
    for (std::size_t a = 0; a < aut.order(); ++a) {
      if (ord % aut_order[a] == 0) candidates[i].push_back(a);
    }
  }
  // first generator: one representative per Aut(N)-conjugacy class
  {
    std::vector<bool> seen(aut.order(), false);
    std::vector<std::size_t> reps;
    for (auto a : candidates[0]) {
      if (seen[a]) continue;
      reps.push_back(a);
      std::vector<std::size_t> queue{a};
      seen[a] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& s : aut.small_generators()) {
          auto c = aut.index_of_checked(conjugate_element(aut.element(queue[q]), s));
          if (!seen[c]) {
            seen[c] = true;
            queue.push_back(c);
          }
        }
      }
    }
    candidates[0] = std::move(reps);
  }
  double total = 1;
  for (const auto& c : candidates) total *= static_cast<double>(c.size());
  if (total > static_cast<double>(budget)) {
    throw CapExceeded("enumerate_actions: " + std::to_string(static_cast<long long>(total)) +
                      " candidate assignments exceed budget");
  }
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<Permutation> autos(gens.size());
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) autos[i] = aut.element(candidates[i][choice[i]]);
    if (try_action_table(j, n, autos)) out.push_back(autos);
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++choice[i] < candidates[i].size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
  }
}

// ---------------------------------------------------------------------------
// SemidirectProduct

SemidirectProduct::SemidirectProduct(ActionHom action, std::size_t cap) : action_(std::move(action)) {
  const auto& n = normal();
  const auto& j = complement();
  const std::size_t order = n.order() * j.order();
  if (order > cap) {
    throw CapExceeded("semidirect: |N||J| = " + std::to_string(order) + " exceeds cap " +
                      std::to_string(cap));
  }
  if (order > kMaxDegree) throw CapExceeded("semidirect: regular degree too large");
  normal_table_ = make_cayley_table(n);
  complement_table_ = make_cayley_table(j);

  std::vector<Permutation> gens;
  std::vector<Permutation> n_images, j_images;
  for (const auto& g : n.generators()) {
    n_images.push_back(pair(static_cast<std::uint32_t>(n.index_of_checked(g)), 0));
    gens.push_back(n_images.back());
  }
  for (const auto& g : j.generators()) {
    j_images.push_back(pair(0, static_cast<std::uint32_t>(j.index_of_checked(g))));
    gens.push_back(j_images.back());
  }
  whole_ = PermutationGroup::generate(order, std::move(gens), order);
  if (whole_.order() != order) throw InvariantViolation("semidirect: wrong order");
  embed_normal_ = GroupHom::from_generator_images(n, whole_, std::move(n_images));
  embed_complement_ = GroupHom::from_generator_images(j, whole_, std::move(j_images));
  normal_image_ = embed_normal_.image();
  complement_image_ = embed_complement_.image();
}

Permutation SemidirectProduct::pair(std::uint32_t n, std::uint32_t j) const {
  const std::size_t jo = complement().order();
  const std::size_t no = normal().order();
  std::vector<Point> images(no * jo);
  for (std::uint32_t n2 = 0; n2 < no; ++n2) {
    const auto nn = normal_table_.mul(n, act(j, n2));
    for (std::uint32_t j2 = 0; j2 < jo; ++j2) {
      images[n2 * jo + j2] = static_cast<Point>(nn * jo + complement_table_.mul(j, j2));
    }
  }
  return Permutation::unchecked(std::move(images));
}

std::pair<std::uint32_t, std::uint32_t> SemidirectProduct::factorize(const Permutation& g) const {
  if (!whole_.contains(g)) throw PreconditionError("factorize: element not in the semidirect product");
  const std::size_t jo = complement().order();
  const std::size_t v = g[0];
  return {static_cast<std::uint32_t>(v / jo), static_cast<std::uint32_t>(v % jo)};
}

std::vector<std::pair<std::size_t, std::size_t>> order_statistics(const PermutationGroup& g) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& x : g.elements()) ++counts[x.order()];
  return {counts.begin(), counts.end()};
}

}  // namespace fixlab
