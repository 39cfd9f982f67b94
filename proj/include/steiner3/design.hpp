#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steiner3/gf.hpp"
#include "steiner3/perm.hpp"

namespace steiner3 {

using Block = std::vector<Point>;

/// A Steiner t-design given by its explicit block list.
///
/// Blocks are stored as strictly increasing tuples and the list is sorted
/// lexicographically, so block lookup is a binary search and serialisation
/// is canonical. All blocks have the same size k.
class Design {
 public:
  Design() = default;
  // Canonicalises the blocks; throws InvalidArgument on out-of-range points,
  // repeated points, non-uniform block size or duplicate blocks.
  Design(std::uint32_t v, std::uint32_t t, std::vector<Block> blocks, std::vector<std::string> labels = {});

  std::uint32_t v() const { return v_; }
  std::uint32_t t() const { return t_; }
  std::uint32_t k() const { return blocks_.empty() ? 0 : static_cast<std::uint32_t>(blocks_.front().size()); }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of the block equal to the given sorted tuple.
  std::optional<std::size_t> find_block(std::span<const Point> sorted) const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::uint32_t v_ = 0;
  std::uint32_t t_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::string> labels_;
};

struct DesignParams {
  std::uint32_t t = 0;
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 1;
  std::uint64_t b = 0;
  std::uint64_t r = 0;
  std::uint64_t lambda2 = 0;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

// b, r and lambda2 from the block list and the counting identities
// bk = vr, b C(k,t) = C(v,t), r(k-1) = lambda2 (v-1) and, for t = 3,
// (k-2) lambda2 = v-2; each cross-checked against a direct incidence count.
// Throws ConsistencyError when an identity fails.
DesignParams params_of(const Design& design);

struct SteinerReport {
  bool ok = false;
  std::vector<Point> witness;  // first t-subset not covered exactly once
  std::uint64_t witness_count = 0;
};

inline constexpr std::uint64_t kSteinerCheckBudget = 50'000'000;

// Exhaustive check that every t-subset lies in exactly one block.
// Requires v <= 128 and C(v,t) within kSteinerCheckBudget.
SteinerReport verify_steiner(const Design& design, std::uint32_t t);

// Blocks through x with x removed; points above x shift down by one.
Design derived_design(const Design& design, Point x);

// True iff every block is a coset D = b + GF(q) u inside GF(q^e), with
// points read as element indices of ctx.
bool is_affine_line_system(const Design& derived, const gf::FieldContext& ctx, std::uint64_t q);

enum class CameronKind { strict, equality, violated };

struct CameronResult {
  CameronKind kind = CameronKind::strict;
  bool bound_a = true;
  bool bound_b = true;  // vacuous for t <= 2
  bool equality_b = false;
  bool in_equality_list = false;
};

// v >= (t+1)(k-t+1) and, for t > 2, v-t+1 >= (k-t+2)(k-t+1).
CameronResult cameron_check(std::uint64_t t, std::uint64_t k, std::uint64_t v);

std::string_view to_string(CameronKind kind);

// floor(sqrt(v) + 3/2), i.e. the largest k with (2k-3)^2 <= 4v.
std::uint64_t blocksize_bound(std::uint64_t v);

// Design JSON: {"v", "t", "lambda": 1, "labels" (optional), "blocks"}.
std::string design_to_json(const Design& design);
Design design_from_json(std::string_view text);
Design read_design(const std::filesystem::path& path);
void write_design(const std::filesystem::path& path, const Design& design);

}  // namespace steiner3
