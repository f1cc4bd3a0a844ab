#pragma once

// Permutations and finite permutation groups.
//
// Composition is function composition: (a * b)(i) = a(b(i)), i.e. b is
// applied first. Conjugation follows the exponent convention
// g^c = c^-1 * g * c, which makes it a right action: (g^c)^d = g^(c*d).
// A permutation group acts on its points from the left via g . i = g(i).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fixlab/errors.hpp"

namespace fixlab {

using Point = std::uint16_t;

inline constexpr std::size_t kDefaultOrderCap = 20000;
inline constexpr std::size_t kMaxDegree = 65535;

class Permutation {
 public:
  Permutation() = default;
  // Validates that images is a bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  static Permutation unchecked(std::vector<Point> images);
  // Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Returns gamma^-1 * g * gamma.
Permutation conjugate_element(const Permutation& g, const Permutation& gamma);
// Returns a^-1 * b^-1 * a * b.
Permutation commutator(const Permutation& a, const Permutation& b);
Permutation power(const Permutation& g, long long e);

// Closure of `generators` under composition. Returns nullopt as soon as more
// than `limit` elements are found. Output is sorted canonically.
std::optional<std::vector<Permutation>> closure(std::size_t degree,
                                                std::span<const Permutation> generators,
                                                std::size_t limit);

// An immutable, fully enumerated permutation group. Copies share storage.
class PermutationGroup {
 public:
  PermutationGroup();

  static PermutationGroup generate(std::size_t degree, std::vector<Permutation> generators,
                                   std::size_t cap = kDefaultOrderCap);
  static PermutationGroup trivial(std::size_t degree);
  // `elements` must already be a group; this is checked.
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Permutation>& generators() const;
  // Irredundant generating set, each element outside the span of the previous.
  const std::vector<Permutation>& small_generators() const;
  // Sorted in canonical (lexicographic image) order; element(0) is the identity.
  const std::vector<Permutation>& elements() const;
  const Permutation& element(std::size_t i) const;
  const Permutation& identity() const { return element(0); }

  bool contains(const Permutation& g) const;
  std::optional<std::size_t> index_of(const Permutation& g) const;
  std::size_t index_of_checked(const Permutation& g) const;

  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b);

 private:
  struct Data;
  explicit PermutationGroup(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

// Index-based multiplication table of a group, indices as in elements().
struct CayleyTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> product;  // product[a * order + b] = index of a*b
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint32_t> element_order;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return product[a * order + b]; }
};

inline constexpr std::size_t kCayleyTableCap = 4096;

CayleyTable make_cayley_table(const PermutationGroup& g);

// A homomorphism between permutation groups stored as a full element table.
class GroupHom {
 public:
  GroupHom() = default;
  // Extends the generator images to all of `source`; throws PreconditionError
  // if the extension is not well defined.
  static GroupHom from_generator_images(PermutationGroup source, PermutationGroup target,
                                        std::vector<Permutation> images);
  static GroupHom from_table(PermutationGroup source, PermutationGroup target,
                             std::vector<std::uint32_t> table);

  const PermutationGroup& source() const { return source_; }
  const PermutationGroup& target() const { return target_; }
  const std::vector<Permutation>& generator_images() const { return generator_images_; }

  const Permutation& operator()(const Permutation& g) const;
  std::uint32_t map_index(std::size_t source_index) const { return table_[source_index]; }

  PermutationGroup kernel() const;
  PermutationGroup image() const;
  // Image of a subgroup of the source.
  PermutationGroup image_of(const PermutationGroup& h) const;
  // Full preimage of a subgroup of the target.
  PermutationGroup preimage_of(const PermutationGroup& h) const;
  // First source element (canonical order) mapping to `y`.
  std::optional<Permutation> lift(const Permutation& y) const;
  bool is_injective() const;

 private:
  PermutationGroup source_;
  PermutationGroup target_;
  std::vector<Permutation> generator_images_;
  std::vector<std::uint32_t> table_;
};

bool is_subgroup(const PermutationGroup& h, const PermutationGroup& g);
bool is_normal(const PermutationGroup& h, const PermutationGroup& g);
PermutationGroup subgroup_conjugate(const PermutationGroup& h, const Permutation& g);
// True iff h^g == k. Checks generators only, so both must be groups.
bool conjugates_to(const PermutationGroup& h, const Permutation& g, const PermutationGroup& k);
// True iff h^g <= k.
bool conjugate_contained_in(const PermutationGroup& h, const Permutation& g,
                            const PermutationGroup& k);

// Right coset representatives of h in g, one per coset h*x; first is identity.
std::vector<Permutation> transversal(const PermutationGroup& g, const PermutationGroup& h);
// Left coset representatives x*h, canonical first elements of each coset.
std::vector<Permutation> left_transversal(const PermutationGroup& g, const PermutationGroup& h);

struct QuotientMap {
  PermutationGroup image;  // faithful action of g on the cosets of a
  GroupHom projection;
};
QuotientMap quotient_representation(const PermutationGroup& g, const PermutationGroup& a);

PermutationGroup intersection(const PermutationGroup& a, const PermutationGroup& b);
PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b);
PermutationGroup cyclic_subgroup(const Permutation& g);
// |a * b| for subgroups of a common group.
std::size_t product_order(const PermutationGroup& a, const PermutationGroup& b);
PermutationGroup normalizer(const PermutationGroup& h, const PermutationGroup& g);
PermutationGroup normal_closure(std::span<const Permutation> elements, const PermutationGroup& g);
PermutationGroup derived_subgroup(const PermutationGroup& g);
PermutationGroup center(const PermutationGroup& g);

std::string group_to_string(const PermutationGroup& g);

}  // namespace fixlab
