#include "steiner3/design.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "steiner3/arith.hpp"
#include "steiner3/error.hpp"

namespace steiner3 {

Design::Design(std::uint32_t v, std::uint32_t t, std::vector<Block> blocks, std::vector<std::string> labels)
    : v_(v), t_(t), blocks_(std::move(blocks)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != v_) {
    throw InvalidArgument("label count " + std::to_string(labels_.size()) + " differs from v = " + std::to_string(v_));
  }
  for (auto& block : blocks_) {
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) throw InvalidArgument("block with repeated point");
    if (!block.empty() && block.back() >= v_) throw InvalidArgument("block point out of range");
    if (block.size() != blocks_.front().size()) throw InvalidArgument("blocks are not of uniform size");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end()) throw InvalidArgument("duplicate block");
}

std::optional<std::size_t> Design::find_block(std::span<const Point> sorted) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), sorted, [](const Block& a, std::span<const Point> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  if (it == blocks_.end() || !std::equal(it->begin(), it->end(), sorted.begin(), sorted.end())) return std::nullopt;
  return static_cast<std::size_t>(it - blocks_.begin());
}

DesignParams params_of(const Design& design) {
  if (design.v() < 2 || design.b() == 0) throw InvalidArgument("params_of needs v >= 2 and at least one block");
  DesignParams p;
  p.t = design.t();
  p.v = design.v();
  p.k = design.k();
  p.b = design.b();
  auto fail = [&](const std::string& what) {
    throw ConsistencyError("design " + std::to_string(p.t) + "-(" + std::to_string(p.v) + "," + std::to_string(p.k) + ",1): " + what);
  };

  const std::uint64_t bk = arith::checked_mul(p.b, p.k);
  if (bk % p.v != 0) fail("bk is not divisible by v");
  p.r = bk / p.v;
  const std::uint64_t r_num = arith::checked_mul(p.r, p.k - 1);
  if (r_num % (p.v - 1) != 0) fail("r(k-1) is not divisible by v-1");
  p.lambda2 = r_num / (p.v - 1);

  if (arith::checked_mul(p.b, arith::binomial(p.k, p.t)) != arith::binomial(p.v, p.t)) fail("b C(k,t) != C(v,t)");
  if (p.t == 3 && (p.k - 2) * p.lambda2 != p.v - 2) fail("(k-2) lambda2 != v-2");

  std::uint64_t direct_r = 0, direct_l2 = 0;
  for (const auto& block : design.blocks()) {
    const bool has0 = std::binary_search(block.begin(), block.end(), Point{0});
    const bool has1 = std::binary_search(block.begin(), block.end(), Point{1});
    direct_r += has0;
    direct_l2 += has0 && has1;
  }
  if (direct_r != p.r) fail("replication number of point 0 is " + std::to_string(direct_r) + ", expected " + std::to_string(p.r));
  if (direct_l2 != p.lambda2) fail("pair {0,1} lies in " + std::to_string(direct_l2) + " blocks, expected " + std::to_string(p.lambda2));
  return p;
}

SteinerReport verify_steiner(const Design& design, std::uint32_t t) {
  const std::uint32_t v = design.v();
  if (v > 128) throw BudgetExceeded("verify_steiner supports v <= 128");
  if (t < 1 || t > v) throw InvalidArgument("strength t must satisfy 1 <= t <= v");
  const std::uint64_t total = arith::binomial(v, t);
  if (total > kSteinerCheckBudget) throw BudgetExceeded("C(v,t) exceeds the verification budget");

  // Colexicographic rank of a sorted t-subset: sum_i C(s_i, i+1).
  std::vector<std::vector<std::uint64_t>> binom(v + 1, std::vector<std::uint64_t>(t + 1, 0));
  for (std::uint32_t n = 0; n <= v; ++n) {
    for (std::uint32_t j = 0; j <= t; ++j) binom[n][j] = arith::binomial(n, j);
  }
  std::vector<std::uint8_t> count(total, 0);
  std::vector<std::size_t> pick(t);
  for (const auto& block : design.blocks()) {
    const std::size_t k = block.size();
    if (k < t) break;
    for (std::size_t i = 0; i < t; ++i) pick[i] = i;
    while (true) {
      std::uint64_t rank = 0;
      for (std::size_t i = 0; i < t; ++i) rank += binom[block[pick[i]]][i + 1];
      if (count[rank] < 255) ++count[rank];
      std::size_t i = t;
      while (i > 0 && pick[i - 1] == k - t + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  SteinerReport report;
  report.ok = true;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    if (count[rank] == 1) continue;
    report.ok = false;
    report.witness_count = count[rank];
    std::uint64_t rest = rank;
    report.witness.resize(t);
    for (std::uint32_t i = t; i-- > 0;) {
      Point s = i;
      while (s + 1 <= v && binom[s + 1][i + 1] <= rest) ++s;
      report.witness[i] = s;
      rest -= binom[s][i + 1];
    }
    break;
  }
  return report;
}

Design derived_design(const Design& design, Point x) {
  if (design.t() < 2) throw InvalidArgument("derived design needs t >= 2");
  if (x >= design.v()) throw InvalidArgument("derivation point out of range");
  std::vector<Block> blocks;
  for (const auto& block : design.blocks()) {
    if (!std::binary_search(block.begin(), block.end(), x)) continue;
    Block reduced;
    for (Point y : block) {
      if (y != x) reduced.push_back(y > x ? y - 1 : y);
    }
    blocks.push_back(std::move(reduced));
  }
  std::vector<std::string> labels;
  if (!design.labels().empty()) {
    labels = design.labels();
    labels.erase(labels.begin() + x);
  }
  return Design(design.v() - 1, design.t() - 1, std::move(blocks), std::move(labels));
}

bool is_affine_line_system(const Design& derived, const gf::FieldContext& ctx, std::uint64_t q) {
  if (derived.v() != ctx.order()) throw InvalidArgument("derived design size does not match the field order");
  if (derived.k() != q) throw InvalidArgument("block size does not match q");
  const auto scalars = ctx.fixed_points_of_power(q);
  for (const auto& block : derived.blocks()) {
    const gf::FieldElement base{block[0]};
    const gf::FieldElement dir = ctx.sub(gf::FieldElement{block[1]}, base);
    std::vector<Point> line;
    for (auto s : scalars) line.push_back(ctx.add(base, ctx.mul(s, dir)).index);
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    if (line != block) return false;
  }
  return true;
}

CameronResult cameron_check(std::uint64_t t, std::uint64_t k, std::uint64_t v) {
  if (!(t < k && k < v)) throw InvalidArgument("cameron_check needs a non-trivial design, t < k < v");
  using i128 = __int128;
  CameronResult r;
  r.bound_a = i128(v) >= i128(t + 1) * i128(k - t + 1);
  if (t > 2) {
    const i128 lhs = i128(v) - i128(t) + 1;
    const i128 rhs = i128(k - t + 2) * i128(k - t + 1);
    r.bound_b = lhs >= rhs;
    r.equality_b = lhs == rhs;
  }
  static constexpr std::uint64_t kEquality[][3] = {{3, 4, 8}, {3, 6, 22}, {3, 12, 112}, {4, 7, 23}, {5, 8, 24}};
  for (const auto& e : kEquality) {
    if (e[0] == t && e[1] == k && e[2] == v) r.in_equality_list = true;
  }
  if (!r.bound_a || !r.bound_b) {
    r.kind = CameronKind::violated;
  } else if (r.equality_b) {
    r.kind = CameronKind::equality;
  }
  return r;
}

std::string_view to_string(CameronKind kind) {
  switch (kind) {
    case CameronKind::strict:
      return "strict";
    case CameronKind::equality:
      return "equality";
    case CameronKind::violated:
      return "violated";
  }
  return "?";
}

std::uint64_t blocksize_bound(std::uint64_t v) {
  if (v < 4) throw InvalidArgument("blocksize_bound needs v >= 4");
  // Start from the integer square root and adjust by exact comparisons.
  using u128 = unsigned __int128;
  std::uint64_t k = arith::isqrt(v) + 1;
  auto fits = [&](std::uint64_t kk) {
    const u128 s = 2 * u128(kk) - 3;
    return s * s <= 4 * u128(v);
  };
  while (fits(k + 1)) ++k;
  while (!fits(k)) --k;
  return k;
}

std::string design_to_json(const Design& design) {
  std::ostringstream out;
  out << "{\n  \"v\": " << design.v() << ",\n  \"t\": " << design.t() << ",\n  \"lambda\": 1,\n";
  if (!design.labels().empty()) {
    out << "  \"labels\": [";
    for (std::size_t i = 0; i < design.labels().size(); ++i) {
      if (i > 0) out << ", ";
      out << nlohmann::json(design.labels()[i]).dump();
    }
    out << "],\n";
  }
  out << "  \"blocks\": [";
  for (std::size_t i = 0; i < design.blocks().size(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [");
    const auto& block = design.blocks()[i];
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j > 0) out << ", ";
      out << block[j];
    }
    out << ']';
  }
  out << (design.blocks().empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

Design design_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("design JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw FormatError("design JSON: top level must be an object");
    for (const char* key : {"v", "t", "blocks"}) {
      if (!doc.contains(key)) throw FormatError(std::string("design JSON: missing key '") + key + "'");
    }
    if (doc.contains("lambda") && doc.at("lambda").get<std::int64_t>() != 1) {
      throw FormatError("design JSON: only lambda = 1 is supported");
    }
    const auto v = doc.at("v").get<std::uint32_t>();
    const auto t = doc.at("t").get<std::uint32_t>();
    auto blocks = doc.at("blocks").get<std::vector<Block>>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return Design(v, t, std::move(blocks), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("design JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("design JSON: ") + e.what());
  }
}

Design read_design(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open design file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return design_from_json(buf.str());
}

void write_design(const std::filesystem::path& path, const Design& design) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write design file " + path.string());
  out << design_to_json(design);
}

}  // namespace steiner3
