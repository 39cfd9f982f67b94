#include <doctest.h>

#include <numeric>
#include <random>

#include "steiner3/action.hpp"
#include "steiner3/catalog.hpp"
#include "steiner3/error.hpp"
#include "steiner3/gens_io.hpp"

using namespace steiner3;
using namespace steiner3::catalog;

namespace {

struct Pair {
  std::string name;
  Design design;
  GeneratorSet group;
};

std::vector<Pair> flag_transitive_pairs() {
  std::vector<Pair> out;
  const auto a3 = construct_boolean_affine(3), a4 = construct_boolean_affine(4), a5 = construct_boolean_affine(5);
  out.push_back({"AGL(3,2) on AG(3,2)", a3, affine_group_generators(AffineGroup::AGL_d_2, 3)});
  out.push_back({"AGL(1,8) on AG(3,2)", a3, affine_group_generators(AffineGroup::AGL_1, 3)});
  out.push_back({"AGammaL(1,8) on AG(3,2)", a3, affine_group_generators(AffineGroup::AGammaL_1, 3)});
  out.push_back({"AGL(4,2) on AG(4,2)", a4, affine_group_generators(AffineGroup::AGL_d_2, 4)});
  out.push_back({"2^4:A7 on AG(4,2)", a4, affine_group_generators(AffineGroup::T_A7, 4)});
  out.push_back({"AGammaL(1,32) on AG(5,2)", a5, affine_group_generators(AffineGroup::AGammaL_1, 5)});
  out.push_back({"AGL(5,2) on AG(5,2)", a5, affine_group_generators(AffineGroup::AGL_d_2, 5)});
  for (auto [q, e] : {std::pair{3u, 2u}, {3u, 3u}, {4u, 2u}, {5u, 2u}}) {
    const auto sph = construct_spherical(q, e);
    const std::string tag = "(" + std::to_string(q) + "," + std::to_string(e) + ")";
    out.push_back({"PGL on spherical" + tag, sph, projective_group_generators(ProjectiveGroup::PGL, q, e)});
    out.push_back({"PGammaL on spherical" + tag, sph, projective_group_generators(ProjectiveGroup::PGammaL, q, e)});
    if (e % 2 == 1) {
      out.push_back({"PSL on spherical" + tag, sph, projective_group_generators(ProjectiveGroup::PSL, q, e)});
      out.push_back({"PSigmaL on spherical" + tag, sph, projective_group_generators(ProjectiveGroup::PSigmaL, q, e)});
    }
  }
  for (std::uint32_t q : {7u, 19u, 31u, 43u}) {
    const auto net = construct_netto_extension(q);
    out.push_back({"PSL on netto(" + std::to_string(q) + ")", net, projective_group_generators(ProjectiveGroup::PSL, q, 1)});
    out.push_back({"PSigmaL on netto(" + std::to_string(q) + ")", net,
                   projective_group_generators(ProjectiveGroup::PSigmaL, q, 1)});
  }
  return out;
}

// Automorphisms of a design counted over all v! permutations. Test oracle only.
std::uint64_t brute_force_automorphism_count(const Design& d) {
  std::vector<Point> perm(d.v());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& block : d.blocks()) {
      Block img;
      for (auto x : block) img.push_back(perm[x]);
      std::sort(img.begin(), img.end());
      if (!d.find_block(img)) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("block_action") {
  const auto a3 = construct_boolean_affine(3);
  const auto id = block_action(a3, Permutation::identity(8));
  CHECK(id.is_identity());
  CHECK(id.degree() == 14);

  const Permutation shift({1, 0, 3, 2, 5, 4, 7, 6});  // x -> x xor 1
  CHECK(block_action(a3, shift).degree() == 14);

  const Permutation swap({1, 0, 2, 3, 4, 5, 6, 7});
  try {
    block_action(a3, swap);
    FAIL("expected SetNotPreserved");
  } catch (const SetNotPreserved& e) {
    const auto& img = e.image();
    CHECK((img[0] ^ img[1] ^ img[2] ^ img[3]) != 0);
    CHECK(a3.find_block(e.block()).has_value());
  }
  CHECK_THROWS_AS(block_action(a3, Permutation::identity(9)), InvalidArgument);
}

TEST_CASE("block_action is a homomorphism on random words") {
  std::mt19937 rng(5);
  std::vector<Pair> samples;
  samples.push_back({"", construct_spherical(3, 2), projective_group_generators(ProjectiveGroup::PGammaL, 3, 2)});
  samples.push_back({"", construct_witt_22(), automorphism_group(construct_witt_22())});
  samples.push_back({"", construct_boolean_affine(4), affine_group_generators(AffineGroup::T_A7, 4)});
  for (const auto& s : samples) {
    std::uniform_int_distribution<std::size_t> pick(0, s.group.gens.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const int len = 1 + trial % 8;
      Permutation word = Permutation::identity(s.design.v());
      Permutation induced = Permutation::identity(s.design.b());
      for (int i = 0; i < len; ++i) {
        const auto& g = s.group.gens[pick(rng)];
        word = word * g;
        induced = induced * block_action(s.design, g);
      }
      CHECK(block_action(s.design, word) == induced);
    }
  }
}

TEST_CASE("flag transitivity of every catalogue pair") {
  for (const auto& p : flag_transitive_pairs()) {
    CAPTURE(p.name);
    const auto rep = is_flag_transitive(p.design, p.group);
    CHECK(rep.preserves_blocks);
    CHECK(rep.flag_count == p.design.b() * p.design.k());
    CHECK(rep.flag_orbit_size == rep.flag_count);
    CHECK(rep.flag_transitive);
    // Point 2-transitivity follows from flag-transitivity.
    CHECK(rep.point_pair_orbit_count == 1);
    CHECK(rep.point_2_transitive);
    // Block-transitive implies point-transitive.
    if (rep.block_orbit_count == 1) CHECK(rep.point_orbit_count == 1);
    // The flag orbit cannot exceed the group.
    CHECK(group_order(p.group).order % rep.flag_orbit_size == 0);
  }
}

TEST_CASE("regular action of AGL(1,8) on flags") {
  const auto rep = is_flag_transitive(construct_boolean_affine(3), affine_group_generators(AffineGroup::AGL_1, 3));
  CHECK(rep.flag_transitive);
  CHECK(rep.flag_orbit_size == 56);
}

TEST_CASE("PSL(2,q^e) with e even splits the spherical blocks") {
  const auto rep = is_flag_transitive(construct_spherical(3, 2), projective_group_generators(ProjectiveGroup::PSL, 3, 2));
  CHECK(rep.preserves_blocks);
  CHECK_FALSE(rep.flag_transitive);
  CHECK(rep.block_orbit_count == 2);
  CHECK(rep.block_orbit_sizes == std::vector<std::uint64_t>{15, 15});
  CHECK(rep.point_transitive);

  const auto rep5 = is_flag_transitive(construct_spherical(5, 2), projective_group_generators(ProjectiveGroup::PSL, 5, 2));
  CHECK_FALSE(rep5.flag_transitive);
  CHECK(rep5.block_orbit_count == 2);
  CHECK(rep5.block_orbit_sizes == std::vector<std::uint64_t>{65, 65});

  // Block-transitive implies point-transitive holds here too.
  for (const auto& r : {rep, rep5})
    if (r.block_orbit_count == 1) CHECK(r.point_orbit_count == 1);
}

TEST_CASE("trivial and foreign groups") {
  const auto a3 = construct_boolean_affine(3);
  const auto rep = is_flag_transitive(a3, GeneratorSet(8, {}));
  CHECK_FALSE(rep.flag_transitive);
  CHECK(rep.flag_orbit_size == 1);
  CHECK(rep.block_orbit_count == 14);
  CHECK(rep.point_orbit_count == 8);

  // PSL(2,7) on netto(7) labels, applied to the affine design, is not an automorphism group.
  CHECK_THROWS_AS(is_flag_transitive(a3, projective_group_generators(ProjectiveGroup::PSL, 7, 1)), SetNotPreserved);
}

TEST_CASE("automorphism groups") {
  const auto a3 = construct_boolean_affine(3);
  CHECK(brute_force_automorphism_count(a3) == 1344);
  CHECK(group_order(automorphism_group(a3)).order == 1344);

  const auto n7 = construct_netto_extension(7);
  CHECK(group_order(automorphism_group(n7)).order == brute_force_automorphism_count(n7));

  CHECK(group_order(automorphism_group(construct_spherical(3, 2))).order == 1440);
  CHECK(group_order(automorphism_group(construct_spherical(4, 2))).order == 16320);
  CHECK(group_order(automorphism_group(construct_boolean_affine(4))).order == 322560);

  const auto witt = construct_witt_22();
  const auto aut = automorphism_group(witt);
  CHECK(group_order(aut).order == 887040);
  for (const auto& g : aut.gens) CHECK_NOTHROW(block_action(witt, g));
  CHECK(is_flag_transitive(witt, aut).flag_transitive);

  const auto m22 = even_subgroup(aut);
  CHECK(group_order(m22).order == 443520);
  CHECK(is_flag_transitive(witt, m22).flag_transitive);

  // Deterministic output.
  CHECK(automorphism_group(witt).gens == aut.gens);
}

TEST_CASE("automorphism search limits") {
  CHECK_THROWS_AS(automorphism_group(construct_spherical(4, 3)), BudgetExceeded);
  AutSearchOptions tight;
  tight.node_budget = 10;
  CHECK_THROWS_AS(automorphism_group(construct_witt_22(), tight), BudgetExceeded);
}

TEST_CASE("bundled M22 generators") {
  const auto m22 = read_generators(default_data_dir() / "m22.gens");
  const auto witt = construct_witt_22();
  CHECK(group_order(m22).order == 443520);
  for (const auto& g : m22.gens) CHECK(g.is_even());
  const auto rep = is_flag_transitive(witt, m22);
  CHECK(rep.flag_transitive);
  CHECK(rep.point_2_transitive);
}
