#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bracoid {

class FiniteGroup;

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products compose right to left: (a * b)(x) = a(b(x)). With this convention
/// a left action g ↦ λ(g) satisfies λ(gh) = λ(g) * λ(h).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a bijection of its index set.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t fixed_points() const;
  std::string cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A subgroup of Sym(degree), stored as its full element list sorted
/// lexicographically by image array. The identity is always element 0, and two
/// PermGroups on the same degree are equal iff their element lists are equal.
class PermGroup {
 public:
  /// Enumerates the group generated by `gens`. Throws InvalidArgument on a
  /// degree mismatch.
  static PermGroup closure(std::size_t degree, const std::vector<Permutation>& gens);
  /// Wraps a set that is already closed under composition; verified.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);
  /// Wraps a complete element list of a group (e.g. one enumerated as
  /// products of known subgroups); only sorted, not re-closed.
  static PermGroup from_group_elements(std::size_t degree, std::vector<Permutation> elements);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }

  /// A small generating set, chosen greedily in element order.
  std::vector<Permutation> generators() const;

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  bool contains(const PermGroup& other) const;

  std::vector<Point> orbit(Point p) const;
  bool is_transitive() const;
  /// Transitive with trivial point stabilizers.
  bool is_regular() const;

  /// {θ σ θ⁻¹ : σ ∈ this}.
  PermGroup conjugate(const Permutation& theta) const;
  /// Whether θ · this · θ⁻¹ = this.
  bool normalized_by(const Permutation& theta) const;

  /// Cayley table of this group; abstract element i is elements()[i].
  FiniteGroup as_finite_group() const;
  /// The subgroup made of the listed element indices (ascending, and closed
  /// under composition, e.g. a subgroup of as_finite_group()).
  PermGroup sub(const std::vector<std::uint32_t>& indices) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }
  friend auto operator<=>(const PermGroup& a, const PermGroup& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> sorted)
      : degree_(degree), elements_(std::move(sorted)) {}

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

}  // namespace bracoid
