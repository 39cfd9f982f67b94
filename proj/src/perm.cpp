#include "steiner3/perm.hpp"

#include <algorithm>
#include <optional>

#include "steiner3/arith.hpp"
#include "steiner3/error.hpp"

namespace steiner3 {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || hit[x]) throw InvalidArgument("image list is not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("degree mismatch in permutation product");
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

GeneratorSet::GeneratorSet(std::size_t degree_, std::vector<Permutation> gens_)
    : degree(degree_), gens(std::move(gens_)) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InvalidArgument("generator degree does not match group degree");
  }
}

std::vector<Point> point_orbit(const GeneratorSet& group, Point seed) {
  if (seed >= group.degree) throw InvalidArgument("orbit seed out of range");
  std::vector<bool> seen(group.degree, false);
  std::vector<Point> out{seed};
  seen[seed] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : group.gens) {
      const Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> image_of_set(const Permutation& g, std::span<const Point> set) {
  std::vector<Point> out;
  out.reserve(set.size());
  for (Point x : set) out.push_back(g(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> set_orbit(const GeneratorSet& group, std::vector<Point> seed) {
  std::sort(seed.begin(), seed.end());
  return orbit(group, seed, [](const Permutation& g, const std::vector<Point>& s) { return image_of_set(g, s); });
}

namespace {

std::optional<Point> smallest_moved(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g(static_cast<Point>(i)) != i) return static_cast<Point>(i);
  }
  return std::nullopt;
}

struct Level {
  Point base_point = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<int> position;  // index into orbit/transversal, -1 if absent
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;

  void rebuild(std::size_t degree) {
    orbit.assign(1, base_point);
    position.assign(degree, -1);
    position[base_point] = 0;
    transversal.assign(1, Permutation::identity(degree));
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& s : gens) {
        const Point y = s(orbit[i]);
        if (position[y] >= 0) continue;
        position[y] = static_cast<int>(orbit.size());
        orbit.push_back(y);
        transversal.push_back(transversal[i] * s);
      }
    }
    inverse_transversal.clear();
    for (const auto& u : transversal) inverse_transversal.push_back(u.inverse());
  }
};

class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Point> prefix, const std::vector<Permutation>& gens)
      : degree_(degree) {
    std::vector<Point> base(prefix.begin(), prefix.end());
    // Greedy: the smallest point moved by any generator fixing the base so far.
    while (true) {
      std::optional<Point> next;
      for (const auto& g : gens) {
        if (!std::all_of(base.begin(), base.end(), [&](Point b) { return g(b) == b; })) continue;
        const Point m = *smallest_moved(g);
        if (!next || m < *next) next = m;
      }
      if (!next) break;
      base.push_back(*next);
    }
    for (Point b : base) {
      Level level;
      level.base_point = b;
      levels_.push_back(std::move(level));
    }
    for (const auto& g : gens) {
      for (std::size_t l = 0; l < levels_.size(); ++l) {
        levels_[l].gens.push_back(g);
        if (g(levels_[l].base_point) != levels_[l].base_point) break;
      }
    }
    for (auto& level : levels_) level.rebuild(degree_);
  }

  void complete() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      if (auto drop = check_level(static_cast<std::size_t>(i))) {
        i = static_cast<std::ptrdiff_t>(*drop);
      } else {
        --i;
      }
    }
  }

  const std::vector<Level>& levels() const { return levels_; }

 private:
  // Tests every Schreier generator of level i; on the first non-sifting one,
  // installs the residue and returns the level to resume from.
  std::optional<std::size_t> check_level(std::size_t i) {
    Level& level = levels_[i];
    for (std::size_t j = 0; j < level.orbit.size(); ++j) {
      for (std::size_t s = 0; s < level.gens.size(); ++s) {
        const Permutation& gen = level.gens[s];
        const Point image = gen(level.orbit[j]);
        Permutation us = level.transversal[j] * gen;
        const std::size_t pos = static_cast<std::size_t>(level.position[image]);
        if (us == level.transversal[pos]) continue;
        Permutation h = us * level.inverse_transversal[pos];
        auto [residue, drop] = sift(std::move(h), i + 1);
        if (residue.is_identity()) continue;
        if (drop == levels_.size()) {
          Level extra;
          extra.base_point = *smallest_moved(residue);
          levels_.push_back(std::move(extra));
        }
        for (std::size_t l = i + 1; l <= drop; ++l) {
          levels_[l].gens.push_back(residue);
          levels_[l].rebuild(degree_);
        }
        return drop;
      }
    }
    return std::nullopt;
  }

  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const Level& level = levels_[l];
      const int pos = level.position[h(level.base_point)];
      if (pos < 0) return {std::move(h), l};
      h = h * level.inverse_transversal[static_cast<std::size_t>(pos)];
      if (h.is_identity()) return {std::move(h), l};
    }
    return {std::move(h), levels_.size()};
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace

GroupSummary group_order(const GeneratorSet& group, std::span<const Point> base_prefix) {
  std::vector<bool> used(group.degree, false);
  for (Point b : base_prefix) {
    if (b >= group.degree || used[b]) throw InvalidArgument("base prefix points must be distinct and in range");
    used[b] = true;
  }
  std::vector<Permutation> gens;
  for (const auto& g : group.gens) {
    if (g.degree() != group.degree) throw InvalidArgument("generator degree does not match group degree");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  StabilizerChain chain(group.degree, base_prefix, gens);
  chain.complete();

  GroupSummary summary;
  const auto& levels = chain.levels();
  summary.stabilizer_orders.assign(levels.size() + 1, 1);
  for (std::size_t l = levels.size(); l-- > 0;) {
    summary.stabilizer_orders[l] = arith::checked_mul(summary.stabilizer_orders[l + 1], levels[l].orbit.size());
  }
  for (const auto& level : levels) {
    summary.base.push_back(level.base_point);
    summary.orbit_lengths.push_back(level.orbit.size());
  }
  summary.order = summary.stabilizer_orders.front();
  return summary;
}

GeneratorSet even_subgroup(const GeneratorSet& group) {
  const Permutation* odd = nullptr;
  for (const auto& g : group.gens) {
    if (!g.is_even()) {
      odd = &g;
      break;
    }
  }
  if (odd == nullptr) return group;
  const Permutation t = *odd;
  const Permutation t_inv = t.inverse();
  std::vector<Permutation> out;
  auto push = [&](Permutation p) {
    if (!p.is_identity() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  for (const auto& s : group.gens) {
    if (s.is_even()) {
      push(s);
      push(t * s * t_inv);
    } else {
      push(s * t_inv);
      push(t * s);
    }
  }
  return GeneratorSet(group.degree, std::move(out));
}

}  // namespace steiner3
