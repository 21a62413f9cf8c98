#include "bracoid/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "bracoid/errors.hpp"
#include "bracoid/group.hpp"

namespace bracoid {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw InvalidArgument("image array is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  return Permutation(std::move(im), Trusted{});
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("bad character in cycle notation: " + std::string(text));
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > (1u << 24)) throw ParseError("point out of range");
        ++pos;
      }
      if (v >= degree) throw ParseError("point " + std::to_string(v) + " outside degree " + std::to_string(degree));
      if (moved[v]) throw ParseError("point " + std::to_string(v) + " repeated in cycle notation");
      moved[v] = true;
      cycle.push_back(static_cast<Point>(v));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) im[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(im), Trusted{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Trusted{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::fixed_points() const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) k += images_[i] == i;
  return k;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("composing permutations of different degree");
  std::vector<Point> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.images_[b.images_[i]];
  return Permutation(std::move(im), Permutation::Trusted{});
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup PermGroup::closure(std::size_t degree, const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw InvalidArgument("generator degree does not match group degree");
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elems{Permutation::identity(degree)};
  seen.insert(elems.front());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation p = g * elems[i];
      if (seen.insert(p).second) elems.push_back(std::move(p));
    }
  }
  std::sort(elems.begin(), elems.end());
  return PermGroup(degree, std::move(elems));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup closed = closure(degree, elements);
  if (closed.elements_ != elements) throw InvalidArgument("element list is not closed under composition");
  return closed;
}

PermGroup PermGroup::from_group_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity() || elements.front().degree() != degree)
    throw InvalidArgument("element list does not contain the identity of the given degree");
  return PermGroup(degree, std::move(elements));
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {Permutation::identity(degree)}); }

std::vector<Permutation> PermGroup::generators() const {
  std::vector<Permutation> gens;
  PermGroup current = trivial(degree_);
  for (const auto& p : elements_) {
    if (current.order() == order()) break;
    if (current.contains(p)) continue;
    gens.push_back(p);
    current = closure(degree_, gens);
  }
  return gens;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::contains(const PermGroup& other) const {
  if (other.degree_ != degree_) return false;
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

std::vector<Point> PermGroup::orbit(Point p) const {
  std::vector<bool> hit(degree_, false);
  for (const auto& g : elements_) hit[g(p)] = true;
  std::vector<Point> out;
  for (std::size_t i = 0; i < degree_; ++i)
    if (hit[i]) out.push_back(static_cast<Point>(i));
  return out;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

bool PermGroup::is_regular() const { return is_transitive() && order() == degree_; }

PermGroup PermGroup::conjugate(const Permutation& theta) const {
  Permutation inv = theta.inverse();
  std::vector<Permutation> out;
  out.reserve(elements_.size());
  for (const auto& s : elements_) out.push_back(theta * s * inv);
  std::sort(out.begin(), out.end());
  return PermGroup(degree_, std::move(out));
}

bool PermGroup::normalized_by(const Permutation& theta) const {
  Permutation inv = theta.inverse();
  for (const auto& s : elements_)
    if (!contains(theta * s * inv)) return false;
  return true;
}

FiniteGroup PermGroup::as_finite_group() const {
  const std::size_t n = elements_.size();
  std::unordered_map<Permutation, Elem, PermutationHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements_[i], static_cast<Elem>(i));
  std::vector<Elem> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = index.at(elements_[i] * elements_[j]);
  return FiniteGroup::build(n, std::move(flat), {});
}

PermGroup PermGroup::sub(const std::vector<std::uint32_t>& indices) const {
  std::vector<Permutation> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(elements_.at(i));
  return PermGroup(degree_, std::move(out));
}

}  // namespace bracoid
