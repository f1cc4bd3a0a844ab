#include "fixlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace fixlab {

namespace {

void require_same_degree(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DegreeMismatch(std::string(what) + ": degree " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) throw PreconditionError("permutation degree too large");
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw PreconditionError("images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree) throw PreconditionError("permutation degree too large");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return unchecked(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("cycle notation: expected '(' at offset " + std::to_string(pos) +
                       " in \"" + std::string(text) + "\"");
    }
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) throw ParseError("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("cycle notation: unexpected character '" + std::string(1, text[pos]) +
                         "' in \"" + std::string(text) + "\"");
      }
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > kMaxDegree) throw ParseError("cycle notation: point out of range");
        ++pos;
      }
      if (value >= degree) {
        throw ParseError("cycle notation: point " + std::to_string(value) +
                         " outside degree " + std::to_string(degree));
      }
      if (used[value]) {
        throw ParseError("cycle notation: point " + std::to_string(value) + " repeated");
      }
      used[value] = true;
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
    skip_space();
  }
  return unchecked(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return unchecked(std::move(inv));
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require_same_degree(a.degree(), b.degree(), "compose");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  return Permutation::unchecked(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation conjugate_element(const Permutation& g, const Permutation& gamma) {
  require_same_degree(g.degree(), gamma.degree(), "conjugate_element");
  return gamma.inverse() * g * gamma;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation power(const Permutation& g, long long e) {
  Permutation base = e < 0 ? g.inverse() : g;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result = Permutation::identity(g.degree());
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

std::optional<std::vector<Permutation>> closure(std::size_t degree,
                                                std::span<const Permutation> generators,
                                                std::size_t limit) {
  for (const auto& g : generators) require_same_degree(degree, g.degree(), "closure");
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : generators) {
      Permutation y = out[i] * s;
      if (seen.insert(y).second) {
        if (out.size() >= limit) return std::nullopt;
        out.push_back(std::move(y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// PermutationGroup

struct PermutationGroup::Data {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> small_generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
};

namespace {

std::vector<Permutation> greedy_generators(std::size_t degree,
                                           const std::vector<Permutation>& candidates) {
  std::vector<Permutation> small;
  std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(degree)};
  for (const auto& c : candidates) {
    if (span.contains(c)) continue;
    small.push_back(c);
    auto cl = closure(degree, small, std::numeric_limits<std::size_t>::max());
    span = std::unordered_set<Permutation, PermutationHash>(cl->begin(), cl->end());
  }
  return small;
}

}  // namespace

PermutationGroup::PermutationGroup() : PermutationGroup(trivial(0)) {}

PermutationGroup::PermutationGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

PermutationGroup PermutationGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                                            std::size_t cap) {
  for (const auto& g : generators) require_same_degree(degree, g.degree(), "generate");
  auto elements = closure(degree, generators, cap);
  if (!elements) {
    throw CapExceeded("group order exceeds cap of " + std::to_string(cap));
  }
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->small_generators = greedy_generators(degree, generators);
  data->generators = std::move(generators);
  data->elements = std::move(*elements);
  data->index.reserve(data->elements.size());
  for (std::uint32_t i = 0; i < data->elements.size(); ++i) data->index.emplace(data->elements[i], i);
  return PermutationGroup(std::move(data));
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) { return generate(degree, {}); }

PermutationGroup PermutationGroup::from_elements(std::size_t degree,
                                                 std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& g : elements) require_same_degree(degree, g.degree(), "from_elements");
  auto small = greedy_generators(degree, elements);
  auto group = generate(degree, small, elements.size());
  if (group.elements() != elements) throw PreconditionError("from_elements: set is not a group");
  return group;
}

std::size_t PermutationGroup::degree() const { return data_->degree; }
std::size_t PermutationGroup::order() const { return data_->elements.size(); }
const std::vector<Permutation>& PermutationGroup::generators() const { return data_->generators; }
const std::vector<Permutation>& PermutationGroup::small_generators() const {
  return data_->small_generators;
}
const std::vector<Permutation>& PermutationGroup::elements() const { return data_->elements; }
const Permutation& PermutationGroup::element(std::size_t i) const { return data_->elements.at(i); }

bool PermutationGroup::contains(const Permutation& g) const {
  return g.degree() == degree() && data_->index.contains(g);
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& g) const {
  if (g.degree() != degree()) return std::nullopt;
  auto it = data_->index.find(g);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermutationGroup::index_of_checked(const Permutation& g) const {
  auto idx = index_of(g);
  if (!idx) throw PreconditionError("element " + g.to_cycles() + " not in group");
  return *idx;
}

bool PermutationGroup::is_abelian() const {
  const auto& gens = small_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const auto& g : a.small_generators()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

CayleyTable make_cayley_table(const PermutationGroup& g) {
  if (g.order() > kCayleyTableCap) {
    throw CapExceeded("Cayley table requested for group of order " + std::to_string(g.order()));
  }
  CayleyTable t;
  t.order = g.order();
  t.product.resize(t.order * t.order);
  t.inverse.resize(t.order);
  t.element_order.resize(t.order);
  const auto& els = g.elements();
  for (std::size_t a = 0; a < t.order; ++a) {
    for (std::size_t b = 0; b < t.order; ++b) {
      t.product[a * t.order + b] = static_cast<std::uint32_t>(g.index_of_checked(els[a] * els[b]));
    }
  }
  for (std::uint32_t a = 0; a < t.order; ++a) {
    for (std::uint32_t b = 0; b < t.order; ++b) {
      if (t.product[a * t.order + b] == 0) {
        t.inverse[a] = b;
        break;
      }
    }
    std::uint32_t k = 1;
    for (std::uint32_t x = a; x != 0; x = t.product[x * t.order + a]) ++k;
    t.element_order[a] = k;
  }
  return t;
}

// ---------------------------------------------------------------------------
// GroupHom

GroupHom GroupHom::from_generator_images(PermutationGroup source, PermutationGroup target,
                                         std::vector<Permutation> images) {
  const auto& gens = source.generators();
  if (images.size() != gens.size()) {
    throw PreconditionError("homomorphism: expected " + std::to_string(gens.size()) +
                            " generator images, got " + std::to_string(images.size()));
  }
  std::vector<std::uint32_t> image_idx;
  for (const auto& im : images) {
    auto idx = target.index_of(im);
    if (!idx) throw PreconditionError("homomorphism: image " + im.to_cycles() + " not in target");
    image_idx.push_back(static_cast<std::uint32_t>(*idx));
  }
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> table(source.order(), kUnset);
  table[0] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint32_t x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto y = static_cast<std::uint32_t>(source.index_of_checked(source.element(x) * gens[i]));
      auto val = static_cast<std::uint32_t>(
          target.index_of_checked(target.element(table[x]) * target.element(image_idx[i])));
      if (table[y] == kUnset) {
        table[y] = val;
        queue.push_back(y);
      } else if (table[y] != val) {
        throw PreconditionError("homomorphism: generator images do not extend consistently");
      }
    }
  }
  GroupHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.generator_images_ = std::move(images);
  h.table_ = std::move(table);
  return h;
}

GroupHom GroupHom::from_table(PermutationGroup source, PermutationGroup target,
                              std::vector<std::uint32_t> table) {
  if (table.size() != source.order()) throw PreconditionError("homomorphism table size mismatch");
  for (auto v : table) {
    if (v >= target.order()) throw PreconditionError("homomorphism table entry out of range");
  }
  for (const auto& s : source.small_generators()) {
    auto si = source.index_of_checked(s);
    for (std::size_t x = 0; x < source.order(); ++x) {
      auto xs = source.index_of_checked(source.element(x) * s);
      if (target.element(table[xs]) != target.element(table[x]) * target.element(table[si])) {
        throw PreconditionError("homomorphism table is not multiplicative");
      }
    }
  }
  GroupHom h;
  for (const auto& g : source.generators()) {
    h.generator_images_.push_back(target.element(table[source.index_of_checked(g)]));
  }
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.table_ = std::move(table);
  return h;
}

const Permutation& GroupHom::operator()(const Permutation& g) const {
  return target_.element(table_[source_.index_of_checked(g)]);
}

PermutationGroup GroupHom::kernel() const {
  std::vector<Permutation> els;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == 0) els.push_back(source_.element(i));
  }
  return PermutationGroup::from_elements(source_.degree(), std::move(els));
}

PermutationGroup GroupHom::image() const { return image_of(source_); }

PermutationGroup GroupHom::image_of(const PermutationGroup& h) const {
  std::vector<Permutation> els;
  for (const auto& g : h.elements()) els.push_back((*this)(g));
  return PermutationGroup::from_elements(target_.degree(), std::move(els));
}

PermutationGroup GroupHom::preimage_of(const PermutationGroup& h) const {
  std::vector<Permutation> els;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (h.contains(target_.element(table_[i]))) els.push_back(source_.element(i));
  }
  return PermutationGroup::from_elements(source_.degree(), std::move(els));
}

std::optional<Permutation> GroupHom::lift(const Permutation& y) const {
  auto yi = target_.index_of(y);
  if (!yi) return std::nullopt;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == *yi) return source_.element(i);
  }
  return std::nullopt;
}

bool GroupHom::is_injective() const {
  return std::count(table_.begin(), table_.end(), 0u) == 1;
}

// ---------------------------------------------------------------------------
// Subgroup operations

bool is_subgroup(const PermutationGroup& h, const PermutationGroup& g) {
  require_same_degree(h.degree(), g.degree(), "is_subgroup");
  if (g.order() % h.order() != 0) return false;
  for (const auto& x : h.small_generators()) {
    if (!g.contains(x)) return false;
  }
  return true;
}

bool is_normal(const PermutationGroup& h, const PermutationGroup& g) {
  if (!is_subgroup(h, g)) return false;
  for (const auto& x : h.small_generators()) {
    for (const auto& s : g.small_generators()) {
      if (!h.contains(conjugate_element(x, s))) return false;
    }
  }
  return true;
}

PermutationGroup subgroup_conjugate(const PermutationGroup& h, const Permutation& g) {
  require_same_degree(h.degree(), g.degree(), "subgroup_conjugate");
  Permutation ginv = g.inverse();
  std::vector<Permutation> gens;
  for (const auto& x : h.small_generators()) gens.push_back(ginv * x * g);
  return PermutationGroup::generate(h.degree(), std::move(gens), h.order());
}

bool conjugates_to(const PermutationGroup& h, const Permutation& g, const PermutationGroup& k) {
  return h.order() == k.order() && conjugate_contained_in(h, g, k);
}

bool conjugate_contained_in(const PermutationGroup& h, const Permutation& g,
                            const PermutationGroup& k) {
  require_same_degree(h.degree(), g.degree(), "conjugate_contained_in");
  if (k.order() % h.order() != 0) return false;
  Permutation ginv = g.inverse();
  for (const auto& x : h.small_generators()) {
    if (!k.contains(ginv * x * g)) return false;
  }
  return true;
}

std::vector<Permutation> transversal(const PermutationGroup& g, const PermutationGroup& h) {
  if (!is_subgroup(h, g)) throw PreconditionError("transversal: not a subgroup");
  std::vector<bool> covered(g.order(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    const auto& x = g.element(i);
    reps.push_back(x);
    for (const auto& y : h.elements()) covered[g.index_of_checked(y * x)] = true;
  }
  return reps;
}

std::vector<Permutation> left_transversal(const PermutationGroup& g, const PermutationGroup& h) {
  if (!is_subgroup(h, g)) throw PreconditionError("left_transversal: not a subgroup");
  std::vector<bool> covered(g.order(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    const auto& x = g.element(i);
    reps.push_back(x);
    for (const auto& y : h.elements()) covered[g.index_of_checked(x * y)] = true;
  }
  return reps;
}

QuotientMap quotient_representation(const PermutationGroup& g, const PermutationGroup& a) {
  if (!is_normal(a, g)) throw PreconditionError("quotient_representation: subgroup is not normal");
  std::vector<std::uint32_t> label(g.order(), UINT32_MAX);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (label[i] != UINT32_MAX) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (const auto& y : a.elements()) label[g.index_of_checked(g.element(i) * y)] = c;
  }
  const std::size_t k = reps.size();
  std::vector<Permutation> perms;
  perms.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<Point> images(k);
    for (std::size_t c = 0; c < k; ++c) {
      images[c] = static_cast<Point>(label[g.index_of_checked(g.element(x) * g.element(reps[c]))]);
    }
    perms.push_back(Permutation::unchecked(std::move(images)));
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.small_generators()) gens.push_back(perms[g.index_of_checked(s)]);
  auto image = PermutationGroup::generate(k, std::move(gens), k);
  std::vector<std::uint32_t> table(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    table[x] = static_cast<std::uint32_t>(image.index_of_checked(perms[x]));
  }
  auto projection = GroupHom::from_table(g, image, std::move(table));
  return QuotientMap{std::move(image), std::move(projection)};
}

PermutationGroup intersection(const PermutationGroup& a, const PermutationGroup& b) {
  require_same_degree(a.degree(), b.degree(), "intersection");
  const auto& small = a.order() <= b.order() ? a : b;
  const auto& big = a.order() <= b.order() ? b : a;
  std::vector<Permutation> els;
  for (const auto& x : small.elements()) {
    if (big.contains(x)) els.push_back(x);
  }
  return PermutationGroup::from_elements(a.degree(), std::move(els));
}

PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b) {
  require_same_degree(a.degree(), b.degree(), "join");
  std::vector<Permutation> gens = a.small_generators();
  gens.insert(gens.end(), b.small_generators().begin(), b.small_generators().end());
  return PermutationGroup::generate(a.degree(), std::move(gens));
}

PermutationGroup cyclic_subgroup(const Permutation& g) {
  return PermutationGroup::generate(g.degree(), {g});
}

std::size_t product_order(const PermutationGroup& a, const PermutationGroup& b) {
  return a.order() * b.order() / intersection(a, b).order();
}

PermutationGroup normalizer(const PermutationGroup& h, const PermutationGroup& g) {
  std::vector<Permutation> els;
  for (const auto& x : g.elements()) {
    if (conjugates_to(h, x, h)) els.push_back(x);
  }
  return PermutationGroup::from_elements(g.degree(), std::move(els));
}

PermutationGroup normal_closure(std::span<const Permutation> elements, const PermutationGroup& g) {
  std::vector<Permutation> gens(elements.begin(), elements.end());
  auto h = PermutationGroup::generate(g.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& x : std::vector<Permutation>(h.small_generators())) {
      for (const auto& s : g.small_generators()) {
        auto c = conjugate_element(x, s);
        if (!h.contains(c)) {
          gens = h.small_generators();
          gens.push_back(c);
          h = PermutationGroup::generate(g.degree(), gens);
          changed = true;
        }
      }
    }
  }
  return h;
}

PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.small_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(comms, g);
}

PermutationGroup center(const PermutationGroup& g) {
  std::vector<Permutation> els;
  for (const auto& x : g.elements()) {
    bool central = true;
    for (const auto& s : g.small_generators()) {
      if (x * s != s * x) {
        central = false;
        break;
      }
    }
    if (central) els.push_back(x);
  }
  return PermutationGroup::from_elements(g.degree(), std::move(els));
}

std::string group_to_string(const PermutationGroup& g) {
  std::ostringstream os;
  os << "<";
  bool first = true;
  for (const auto& s : g.small_generators()) {
    if (!first) os << ", ";
    os << s.to_cycles();
    first = false;
  }
  os << "> (degree " << g.degree() << ", order " << g.order() << ")";
  return os.str();
}

}  // namespace fixlab
