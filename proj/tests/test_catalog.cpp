#include <doctest.h>

#include <array>
#include <filesystem>
#include <fstream>

#include "steiner3/action.hpp"
#include "steiner3/arith.hpp"
#include "steiner3/catalog.hpp"
#include "steiner3/error.hpp"

using namespace steiner3;
using namespace steiner3::catalog;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t expected_blocks(std::uint64_t v, std::uint64_t k) { return choose(v, 3) / choose(k, 3); }

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("steiner3_test_" + name);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("boolean affine designs") {
  for (auto [d, b] : {std::pair{3u, 14u}, {4u, 140u}, {5u, 1240u}}) {
    const auto des = construct_boolean_affine(d);
    CHECK(des.v() == (1u << d));
    CHECK(des.k() == 4);
    CHECK(des.b() == b);
    CHECK(des.b() == expected_blocks(des.v(), 4));
    for (const auto& block : des.blocks()) CHECK((block[0] ^ block[1] ^ block[2] ^ block[3]) == 0);
  }
  CHECK(construct_boolean_affine(3).labels().front() == "000");
  CHECK_THROWS_AS(construct_boolean_affine(2), InvalidArgument);
  CHECK_THROWS_AS(construct_boolean_affine(8), InvalidArgument);
}

TEST_CASE("spherical designs") {
  for (auto [q, e, b] : {std::tuple{3u, 2u, 30u}, {3u, 3u, 819u}, {4u, 2u, 68u}, {5u, 2u, 130u}}) {
    const auto des = construct_spherical(q, e);
    std::uint32_t qe = 1;
    for (unsigned i = 0; i < e; ++i) qe *= q;
    CHECK(des.v() == qe + 1);
    CHECK(des.k() == q + 1);
    CHECK(des.b() == b);
    CHECK(des.b() == expected_blocks(qe + 1, q + 1));
    CHECK(des.labels().back() == "inf");
  }
  CHECK_THROWS_AS(construct_spherical(2, 3), InvalidArgument);
  CHECK_THROWS_AS(construct_spherical(6, 2), InvalidArgument);
  CHECK_THROWS_AS(construct_spherical(3, 1), InvalidArgument);
  CHECK_THROWS_AS(construct_spherical(3, 5), InvalidArgument);
}

TEST_CASE("spherical base block stabilised by the subfield affine group and inversion") {
  for (auto [q, e] : {std::pair{3u, 2u}, {3u, 3u}, {4u, 2u}, {5u, 2u}}) {
    const auto des = construct_spherical(q, e);
    std::uint32_t qe = 1;
    for (unsigned i = 0; i < e; ++i) qe *= q;
    const auto pp = arith::prime_power(qe);
    const ProjectiveLine line{gf::FieldContext(static_cast<std::uint32_t>(pp->first), pp->second)};
    const auto& f = line.field();
    const auto sub = f.fixed_points_of_power(q);
    std::vector<Point> base;
    for (auto s : sub) base.push_back(line.id(s));
    base.push_back(line.infinity());
    std::sort(base.begin(), base.end());
    const auto base_index = des.find_block(base);
    REQUIRE(base_index.has_value());

    std::vector<Permutation> stab;
    for (auto a : sub) {
      if (a == f.zero()) continue;
      for (auto b : sub) stab.push_back(line.mobius(a, b, f.zero(), f.one()));
    }
    stab.push_back(line.mobius(f.zero(), f.one(), f.one(), f.zero()));
    for (const auto& g : stab) {
      const auto induced = block_action(des, g);
      CHECK(induced(static_cast<Point>(*base_index)) == *base_index);
    }
  }
}

TEST_CASE("netto extensions") {
  for (auto [q, b] : {std::pair{7u, 14u}, {19u, 285u}, {31u, 1240u}, {43u, 3311u}}) {
    const auto des = construct_netto_extension(q);
    CHECK(des.v() == q + 1);
    CHECK(des.k() == 4);
    CHECK(des.b() == b);
    CHECK(des.b() == expected_blocks(q + 1, 4));
  }
  CHECK(params_of(construct_netto_extension(7)) == params_of(construct_boolean_affine(3)));
  CHECK_THROWS_AS(construct_netto_extension(6), InvalidArgument);
  CHECK_THROWS_AS(construct_netto_extension(11), InvalidArgument);
  CHECK_THROWS_AS(construct_netto_extension(55), InvalidArgument);
  CHECK_THROWS_AS(construct_netto_extension(139), InvalidArgument);
}

TEST_CASE("Golay lexicode and Witt pipeline") {
  const auto code = golay_lexicode();
  CHECK(code.size() == 4096);
  std::array<int, 25> weights{};
  for (auto w : code) ++weights[__builtin_popcount(w)];
  CHECK(weights[0] == 1);
  CHECK(weights[8] == 759);
  CHECK(weights[12] == 2576);
  CHECK(weights[16] == 759);
  CHECK(weights[24] == 1);
  // Linear: closed under XOR.
  for (std::size_t i = 0; i < code.size(); i += 97)
    for (std::size_t j = 0; j < code.size(); j += 89) CHECK(std::binary_search(code.begin(), code.end(), code[i] ^ code[j]));

  const auto pipe = witt_pipeline(code);
  CHECK(pipe.codewords == 4096);
  CHECK(pipe.octads.b() == 759);
  CHECK(verify_steiner(pipe.octads, 5).ok);
  CHECK(pipe.derived1.v() == 23);
  CHECK(pipe.derived1.b() == 253);
  CHECK(verify_steiner(pipe.derived1, 4).ok);
  CHECK(pipe.witt22.v() == 22);
  CHECK(pipe.witt22.b() == 77);
  CHECK(verify_steiner(pipe.witt22, 3).ok);
  CHECK(pipe.witt22 == construct_witt_22());
}

TEST_CASE("corrupted Golay codes abort the pipeline") {
  auto code = golay_lexicode();
  auto short_code = code;
  short_code.pop_back();
  CHECK_THROWS_AS(witt_pipeline(short_code), ConsistencyError);

  // Same size, but one octad replaced by a weight-10 word.
  auto swapped = code;
  auto it = std::find_if(swapped.begin(), swapped.end(), [](std::uint32_t w) { return __builtin_popcount(w) == 8; });
  *it = 0x3FFu;  // weight 10, not in the code
  CHECK_THROWS_WITH_AS(witt_pipeline(swapped), doctest::Contains("octad"), ConsistencyError);

  std::vector<std::uint32_t> empty;
  CHECK_THROWS_WITH_AS(witt_pipeline(empty), doctest::Contains("codeword"), ConsistencyError);
}

TEST_CASE("affine group generators") {
  CHECK(group_order(affine_group_generators(AffineGroup::AGL_d_2, 3)).order == 1344);
  CHECK(group_order(affine_group_generators(AffineGroup::AGL_1, 3)).order == 56);
  CHECK(group_order(affine_group_generators(AffineGroup::AGammaL_1, 3)).order == 168);
  CHECK(group_order(affine_group_generators(AffineGroup::AGammaL_1, 5)).order == 4960);
  CHECK(group_order(affine_group_generators(AffineGroup::AGL_d_2, 4)).order == 322560);
  CHECK(group_order(affine_group_generators(AffineGroup::T_A7, 4)).order == 40320);
  CHECK_THROWS_AS(affine_group_generators(AffineGroup::T_A7, 3), InvalidArgument);
}

TEST_CASE("A7 data file") {
  const auto a7 = load_matrix_generators(default_data_dir() / "a7_gl42.gens");
  CHECK(a7.degree == 16);
  const auto summary = group_order(a7);
  CHECK(summary.order == 2520);
  for (const auto& g : a7.gens) {
    CHECK(g(0) == 0);
    // Linear: g(x ^ y) = g(x) ^ g(y).
    for (Point x = 0; x < 16; ++x)
      for (Point y = 0; y < 16; ++y) CHECK(g(x ^ y) == (g(x) ^ g(y)));
  }
}

TEST_CASE("missing or corrupt data files") {
  const auto empty_dir = scratch_dir("missing");
  std::filesystem::remove(empty_dir / "a7_gl42.gens");
  CHECK_THROWS_AS(affine_group_generators(AffineGroup::T_A7, 4, empty_dir), FormatError);

  const auto bad_dir = scratch_dir("corrupt");
  const auto write = [&](const std::string& text) {
    std::ofstream(bad_dir / "a7_gl42.gens") << text;
  };
  write("dim: 4\nmat: 1011 0100 1110\n");
  CHECK_THROWS_AS(affine_group_generators(AffineGroup::T_A7, 4, bad_dir), FormatError);
  write("dim: 4\nmat: 1000 1000 0010 0001\n");  // singular
  CHECK_THROWS_AS(affine_group_generators(AffineGroup::T_A7, 4, bad_dir), FormatError);
  write("dim: 4\nmat: 1002 0100 0010 0001\n");
  CHECK_THROWS_AS(affine_group_generators(AffineGroup::T_A7, 4, bad_dir), FormatError);
  write("dim: 3\nmat: 100 010 001\n");
  CHECK_THROWS_AS(affine_group_generators(AffineGroup::T_A7, 4, bad_dir), FormatError);
  write("# nothing\n");
  CHECK_THROWS_AS(affine_group_generators(AffineGroup::T_A7, 4, bad_dir), FormatError);
  std::filesystem::remove_all(bad_dir);
  std::filesystem::remove_all(empty_dir);
}

TEST_CASE("projective group generators") {
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PGL, 3, 2)).order == 720);
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PSL, 3, 2)).order == 360);
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PGammaL, 3, 2)).order == 1440);
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PSL, 19, 1)).order == 3420);
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PSL, 3, 3)).order == 9828);
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PSL, 4, 2)).order == 4080);
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PGL, 4, 2)).order == 4080);
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PGammaL, 4, 2)).order == 16320);
  CHECK(group_order(projective_group_generators(ProjectiveGroup::PSigmaL, 19, 1)).order == 3420);
  CHECK_THROWS_AS(projective_group_generators(ProjectiveGroup::PSL, 6, 1), InvalidArgument);
  CHECK_THROWS_AS(projective_group_generators(ProjectiveGroup::PSL, 2, 7), InvalidArgument);
}

TEST_CASE("projective line conventions") {
  const ProjectiveLine line{gf::FieldContext(3, 2)};
  const auto& f = line.field();
  const auto inv = line.mobius(f.zero(), f.one(), f.one(), f.zero());
  CHECK(inv(line.id(f.zero())) == line.infinity());
  CHECK(inv(line.infinity()) == line.id(f.zero()));
  const auto shift = line.mobius(f.one(), f.one(), f.zero(), f.one());
  CHECK(shift(line.infinity()) == line.infinity());
  CHECK(line.frobenius()(line.infinity()) == line.infinity());
  CHECK_THROWS_AS(line.mobius(f.one(), f.one(), f.one(), f.one()), InvalidArgument);
}

TEST_CASE("classify") {
  const auto r8 = classify(8, 4);
  REQUIRE(r8.size() == 2);
  CHECK(r8[0].family == Family::affine);
  CHECK(r8[0].part == 1);
  CHECK(r8[0].d == 3);
  CHECK(r8[1].family == Family::netto);
  CHECK(r8[1].part == 3);
  CHECK(r8[1].q == 7);

  const auto r22 = classify(22, 6);
  REQUIRE(r22.size() == 1);
  CHECK(r22[0].part == 4);

  CHECK(classify(12, 4).empty());
  const auto r28 = classify(28, 4);
  REQUIRE(r28.size() == 1);
  CHECK(r28[0].family == Family::spherical);
  CHECK(r28[0].q == 3);
  CHECK(r28[0].e == 3);
  CHECK(classify(10, 4).size() == 1);
  CHECK(classify(20, 4).size() == 1);
  CHECK(classify(32, 4).size() == 2);  // 2^5 and q = 31
  CHECK(classify(17, 5).size() == 1);
  CHECK(classify(9, 4).empty());
  CHECK_THROWS_AS(classify(8, 3), InvalidArgument);
  CHECK_THROWS_AS(classify(8, 8), InvalidArgument);
}

TEST_CASE("classify agrees with a parameter-arithmetic oracle") {
  // Rows predicted from the four family definitions, written out separately.
  auto is_pp = [](std::uint64_t n) { return arith::prime_power(n).has_value(); };
  for (std::uint64_t v = 5; v <= 600; ++v) {
    for (std::uint64_t k = 4; k < v && k <= 30; ++k) {
      std::size_t want = 0;
      bool pow2 = false;
      for (std::uint64_t d = 3; (1ull << d) <= v; ++d) pow2 |= (1ull << d) == v;
      if (k == 4 && pow2) ++want;
      bool sph = false;
      if (k >= 4 && is_pp(k - 1)) {
        std::uint64_t p = (k - 1) * (k - 1);
        while (p < v - 1) p *= (k - 1);
        sph = p == v - 1;
      }
      if (sph) ++want;
      if (k == 4 && (v - 1) % 12 == 7 && is_pp(v - 1)) ++want;
      if (v == 22 && k == 6) ++want;
      CHECK(classify(v, k).size() == want);
    }
  }
}
