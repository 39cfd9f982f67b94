#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace steiner3 {

using Point = std::uint32_t;

// A bijection of {0..n-1}. Products compose left to right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  Permutation inverse() const;

  // 1-based disjoint cycle notation, "()" for the identity.
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// Generators of a permutation group of the given degree. An empty list is
// the trivial group.
struct GeneratorSet {
  std::size_t degree = 0;
  std::vector<Permutation> gens;

  GeneratorSet() = default;
  // Throws InvalidArgument if a generator has the wrong degree.
  GeneratorSet(std::size_t degree, std::vector<Permutation> gens);
};

struct GroupSummary {
  std::uint64_t order = 1;
  std::vector<Point> base;
  // |G|, |G_{b1}|, |G_{b1 b2}|, ..., 1; one entry more than base.
  std::vector<std::uint64_t> stabilizer_orders;
  // Fundamental orbit length at each base point.
  std::vector<std::uint64_t> orbit_lengths;
};

// Breadth-first closure of seed under act(generator, state); result sorted.
template <class State, class Act>
std::vector<State> orbit(const GeneratorSet& group, const State& seed, Act&& act) {
  std::set<State> seen{seed};
  std::deque<State> queue{seed};
  while (!queue.empty()) {
    State cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : group.gens) {
      State next = act(g, cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Point> point_orbit(const GeneratorSet& group, Point seed);

// Image of a set of points, sorted.
std::vector<Point> image_of_set(const Permutation& g, std::span<const Point> set);

// Orbit of a point set under the induced action on sets; each entry sorted.
std::vector<std::vector<Point>> set_orbit(const GeneratorSet& group, std::vector<Point> seed);

/// Exact order and stabilizer chain by deterministic Schreier-Sims.
///
/// The base starts with base_prefix (possibly fixed points, giving trivial
/// levels) and is then extended greedily by the smallest point moved by the
/// first generator or Schreier residue that fixes the current base.
GroupSummary group_order(const GeneratorSet& group, std::span<const Point> base_prefix = {});

// Generators of the index <= 2 subgroup of even permutations (Schreier
// generators for the sign homomorphism).
GeneratorSet even_subgroup(const GeneratorSet& group);

}  // namespace steiner3
