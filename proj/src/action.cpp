#include "steiner3/action.hpp"

#include <algorithm>
#include <numeric>

#include "steiner3/error.hpp"

namespace steiner3 {

SetNotPreserved::SetNotPreserved(std::vector<std::uint32_t> block, std::vector<std::uint32_t> image)
    : Error("permutation does not preserve the block set"), block_(std::move(block)), image_(std::move(image)) {}

Permutation block_action(const Design& design, const Permutation& g) {
  if (g.degree() != design.v()) throw InvalidArgument("permutation degree differs from the number of points");
  std::vector<Point> images(design.b());
  for (std::size_t i = 0; i < design.b(); ++i) {
    auto image = image_of_set(g, design.blocks()[i]);
    auto j = design.find_block(image);
    if (!j) throw SetNotPreserved(design.blocks()[i], std::move(image));
    images[i] = static_cast<Point>(*j);
  }
  return Permutation(std::move(images));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FlagReport is_flag_transitive(const Design& design, const GeneratorSet& group) {
  if (group.degree != design.v()) throw InvalidArgument("group degree differs from the number of points");
  const std::size_t v = design.v();
  const std::size_t b = design.b();
  std::vector<Permutation> on_blocks;
  for (const auto& g : group.gens) on_blocks.push_back(block_action(design, g));

  FlagReport report;
  report.preserves_blocks = true;
  report.flag_count = static_cast<std::uint64_t>(b) * design.k();

  if (b > 0) {
    std::vector<bool> seen(v * b, false);
    std::vector<std::size_t> queue{std::size_t{design.blocks()[0][0]} * b};
    seen[queue[0]] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Point x = static_cast<Point>(queue[i] / b);
      const Point blk = static_cast<Point>(queue[i] % b);
      for (std::size_t g = 0; g < on_blocks.size(); ++g) {
        const std::size_t next = std::size_t{group.gens[g](x)} * b + on_blocks[g](blk);
        if (!seen[next]) {
          seen[next] = true;
          queue.push_back(next);
        }
      }
    }
    report.flag_orbit_size = queue.size();

    UnionFind blocks(b);
    for (const auto& h : on_blocks) {
      for (std::size_t i = 0; i < b; ++i) blocks.unite(i, h(static_cast<Point>(i)));
    }
    std::vector<std::uint64_t> size(b, 0);
    for (std::size_t i = 0; i < b; ++i) ++size[blocks.find(i)];
    for (auto s : size) {
      if (s > 0) report.block_orbit_sizes.push_back(s);
    }
    std::sort(report.block_orbit_sizes.begin(), report.block_orbit_sizes.end());
    report.block_orbit_count = report.block_orbit_sizes.size();
  }

  UnionFind points(v);
  UnionFind pairs(v * v);
  for (const auto& g : group.gens) {
    for (std::size_t x = 0; x < v; ++x) {
      points.unite(x, g(static_cast<Point>(x)));
      for (std::size_t y = 0; y < v; ++y) {
        if (x != y) pairs.unite(x * v + y, std::size_t{g(static_cast<Point>(x))} * v + g(static_cast<Point>(y)));
      }
    }
  }
  for (std::size_t x = 0; x < v; ++x) {
    report.point_orbit_count += points.find(x) == x;
    for (std::size_t y = 0; y < v; ++y) {
      if (x != y) report.point_pair_orbit_count += pairs.find(x * v + y) == x * v + y;
    }
  }

  report.flag_transitive = b > 0 && report.flag_orbit_size == report.flag_count;
  report.block_transitive = report.block_orbit_count == 1;
  report.point_transitive = report.point_orbit_count == 1;
  report.point_2_transitive = report.point_pair_orbit_count == 1;
  return report;
}

namespace {

using Mask = std::uint64_t;
constexpr int kUnmapped = -1;

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Design& design, const AutSearchOptions& options)
      : design_(design), v_(design.v()), budget_(options.node_budget) {
    through_.resize(v_);
    for (std::size_t i = 0; i < design.b(); ++i) {
      Mask m = 0;
      for (Point x : design.blocks()[i]) {
        m |= Mask{1} << x;
        through_[x].push_back(i);
      }
      masks_.push_back(m);
    }
    coblock_.assign(v_, std::vector<std::uint32_t>(v_, 0));
    for (const auto& block : design.blocks()) {
      for (Point x : block) {
        for (Point y : block) ++coblock_[x][y];
      }
    }
    // Refinement signature: degree plus the sorted co-block profile.
    for (std::size_t x = 0; x < v_; ++x) {
      auto row = coblock_[x];
      std::sort(row.begin(), row.end());
      signature_.push_back(std::move(row));
    }
  }

  GeneratorSet run() {
    std::vector<Permutation> found;
    for (std::size_t level = v_; level-- > 0;) {
      const Point base_point = static_cast<Point>(level);
      // Generators found at deeper levels fix 0..level-1.
      GeneratorSet current(v_, found);
      auto orbit = point_orbit(current, base_point);
      std::vector<bool> in_orbit(v_, false);
      for (Point c : orbit) in_orbit[c] = true;
      for (Point c = 0; c < v_; ++c) {
        if (in_orbit[c] || c < level) continue;
        if (signature_[c] != signature_[base_point]) continue;
        bool compatible = true;
        for (Point a = 0; a < level && compatible; ++a) compatible = coblock_[a][base_point] == coblock_[a][c];
        if (!compatible) continue;
        if (auto g = extend(level, c)) {
          found.push_back(std::move(*g));
          current = GeneratorSet(v_, found);
          for (Point y : point_orbit(current, base_point)) in_orbit[y] = true;
        }
      }
    }
    return GeneratorSet(v_, std::move(found));
  }

 private:
  // Search for an automorphism fixing 0..level-1 and sending level to c.
  std::optional<Permutation> extend(std::size_t level, Point c) {
    fwd_.assign(v_, kUnmapped);
    bwd_.assign(v_, kUnmapped);
    dom_ = 0;
    rng_ = 0;
    for (Point a = 0; a < level; ++a) assign(a, a);
    if (!consistent(static_cast<Point>(level), c)) return std::nullopt;
    assign(static_cast<Point>(level), c);
    if (!backtrack(level + 1)) return std::nullopt;
    std::vector<Point> images(v_);
    for (std::size_t x = 0; x < v_; ++x) images[x] = static_cast<Point>(fwd_[x]);
    return Permutation(std::move(images));
  }

  bool backtrack(std::size_t next) {
    if (next == v_) {
      std::vector<Point> images(v_);
      for (std::size_t x = 0; x < v_; ++x) images[x] = static_cast<Point>(fwd_[x]);
      try {
        block_action(design_, Permutation(std::move(images)));
        return true;
      } catch (const SetNotPreserved&) {
        return false;
      }
    }
    const Point x = static_cast<Point>(next);
    for (Point y = 0; y < v_; ++y) {
      if (bwd_[y] != kUnmapped) continue;
      if (++nodes_ > budget_) throw BudgetExceeded("automorphism search exceeded its node budget");
      if (!consistent(x, y)) continue;
      assign(x, y);
      if (backtrack(next + 1)) return true;
      unassign(x, y);
    }
    return false;
  }

  void assign(Point x, Point y) {
    fwd_[x] = static_cast<int>(y);
    bwd_[y] = static_cast<int>(x);
    dom_ |= Mask{1} << x;
    rng_ |= Mask{1} << y;
  }

  void unassign(Point x, Point y) {
    fwd_[x] = kUnmapped;
    bwd_[y] = kUnmapped;
    dom_ &= ~(Mask{1} << x);
    rng_ &= ~(Mask{1} << y);
  }

  static Mask map_mask(Mask m, const std::vector<int>& f) {
    Mask out = 0;
    while (m != 0) {
      const int bit = __builtin_ctzll(m);
      m &= m - 1;
      out |= Mask{1} << f[bit];
    }
    return out;
  }

  // Would x -> y keep the partial map extendable as far as local checks see?
  bool consistent(Point x, Point y) {
    if (signature_[x] != signature_[y]) return false;
    for (std::size_t a = 0; a < v_; ++a) {
      if (fwd_[a] != kUnmapped && coblock_[a][x] != coblock_[fwd_[a]][y]) return false;
    }
    assign(x, y);
    const bool ok = blocks_match(x, y, masks_, fwd_, dom_, rng_) && blocks_match(y, x, masks_, bwd_, rng_, dom_);
    unassign(x, y);
    return ok;
  }

  // Every block through x must meet the mapped points in a set whose image
  // is exactly the mapped part of some block through y.
  bool blocks_match(Point x, Point y, const std::vector<Mask>& masks, const std::vector<int>& f, Mask dom, Mask rng) const {
    for (std::size_t bi : through_[x]) {
      const Mask part = masks[bi] & dom;
      if ((part & (part - 1)) == 0) continue;
      const Mask image = map_mask(part, f);
      bool hit = false;
      for (std::size_t bj : through_[y]) {
        if ((masks[bj] & rng) == image) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  }

  const Design& design_;
  std::size_t v_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> masks_;
  std::vector<std::vector<std::size_t>> through_;
  std::vector<std::vector<std::uint32_t>> coblock_;
  std::vector<std::vector<std::uint32_t>> signature_;
  std::vector<int> fwd_, bwd_;
  Mask dom_ = 0, rng_ = 0;
};

}  // namespace

GeneratorSet automorphism_group(const Design& design, const AutSearchOptions& options) {
  if (design.v() > options.max_points || design.v() > 64) {
    throw BudgetExceeded("automorphism search supports at most " + std::to_string(std::min<std::uint32_t>(options.max_points, 64)) + " points");
  }
  if (design.v() == 0) return GeneratorSet(0, {});
  return AutomorphismSearch(design, options).run();
}

}  // namespace steiner3
