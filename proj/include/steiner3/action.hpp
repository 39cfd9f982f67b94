#pragma once

#include <cstdint>
#include <vector>

#include "steiner3/design.hpp"
#include "steiner3/perm.hpp"

namespace steiner3 {

// The permutation induced on block indices. Throws SetNotPreserved with the
// first offending block when g is not an automorphism.
Permutation block_action(const Design& design, const Permutation& g);

struct FlagReport {
  bool preserves_blocks = false;
  std::uint64_t flag_count = 0;       // b k
  std::uint64_t flag_orbit_size = 0;  // orbit of (blocks[0][0], block 0)
  std::uint64_t block_orbit_count = 0;
  std::vector<std::uint64_t> block_orbit_sizes;  // ascending
  std::uint64_t point_orbit_count = 0;
  std::uint64_t point_pair_orbit_count = 0;  // ordered pairs of distinct points
  bool flag_transitive = false;
  bool block_transitive = false;
  bool point_transitive = false;
  bool point_2_transitive = false;
};

FlagReport is_flag_transitive(const Design& design, const GeneratorSet& group);

struct AutSearchOptions {
  std::uint32_t max_points = 64;
  std::uint64_t node_budget = 200'000'000;
};

/// Generators of the full automorphism group of a design with v <= 64.
///
/// Works along the base 0, 1, ..., v-1 from the last level upward: at level
/// i, every candidate image of point i outside the orbit generated so far is
/// tested by a backtracking search for an automorphism fixing 0..i-1, and
/// each hit becomes a new generator. Candidates are filtered by block degree and the co-block count
/// profile, and partial maps are pruned by requiring every block through a
/// newly mapped point to meet the image side in a matching block.
GeneratorSet automorphism_group(const Design& design, const AutSearchOptions& options = {});

}  // namespace steiner3
