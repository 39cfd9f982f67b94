#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "steiner3/design.hpp"
#include "steiner3/gf.hpp"
#include "steiner3/perm.hpp"

namespace steiner3::catalog {

// GF(Q) u {inf} with element index i as point i and inf as point Q.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(gf::FieldContext ctx);

  const gf::FieldContext& field() const { return ctx_; }
  std::size_t size() const { return ctx_.order() + 1; }
  Point infinity() const { return ctx_.order(); }
  Point id(gf::FieldElement a) const { return a.index; }
  std::vector<std::string> labels() const;

  // x -> (a x + b) / (c x + d) with ad - bc != 0.
  Permutation mobius(gf::FieldElement a, gf::FieldElement b, gf::FieldElement c, gf::FieldElement d) const;
  // x -> x^p, fixing inf.
  Permutation frobenius() const;

 private:
  gf::FieldContext ctx_;
};

// Points and planes of AG(d,2): 4-sets of d-bit vectors with zero XOR sum.
Design construct_boolean_affine(unsigned d);

// Images of GF(q) u {inf} under PGL(2, q^e).
Design construct_spherical(std::uint32_t q, std::uint32_t e);

// Images of {0, 1, eps, inf} under PSL(2, q), eps a primitive sixth root of 1.
Design construct_netto_extension(std::uint32_t q);

// Intermediate stages of the Witt design construction.
struct WittPipeline {
  std::size_t codewords = 0;
  Design octads;    // 5-(24,8,1)
  Design derived1;  // 4-(23,7,1), derived at point 23
  Design witt22;    // 3-(22,6,1), derived again at point 22
};

// Length-24 binary lexicode of minimum distance 8, sorted. Greedy in
// increasing word order; words whose coset is already decided are skipped.
std::vector<std::uint32_t> golay_lexicode();

// Throws ConsistencyError unless the code yields 4096 words, 759 octads,
// then 253 and 77 blocks.
WittPipeline witt_pipeline(std::span<const std::uint32_t> code);
Design construct_witt_22();

enum class AffineGroup { AGL_d_2, AGL_1, AGammaL_1, T_A7 };
enum class ProjectiveGroup { PSL, PGL, PSigmaL, PGammaL };

// Directory holding bundled data files: $STEINER3_DATA_DIR if set, otherwise
// the source tree's data/ directory.
std::filesystem::path default_data_dir();

// Matrix generators from a "dim:"/"mat:" file as permutations of GF(2)^dim.
GeneratorSet load_matrix_generators(const std::filesystem::path& path);

GeneratorSet affine_group_generators(AffineGroup kind, unsigned d,
                                     const std::filesystem::path& data_dir = default_data_dir());

// Acting on the projective line over GF(q^e). For even q, PSL and PGL coincide.
GeneratorSet projective_group_generators(ProjectiveGroup kind, std::uint32_t q, std::uint32_t e);

enum class Family { affine, spherical, netto, witt };

std::string to_string(Family family);
std::string to_string(AffineGroup kind);
std::string to_string(ProjectiveGroup kind);

struct GroupEntry {
  std::string name;
  std::string construction;
};

struct CatalogueEntry {
  Family family = Family::affine;
  unsigned part = 0;  // 1..4 in the classification
  std::uint32_t d = 0;
  std::uint32_t q = 0;
  std::uint32_t e = 0;
  std::vector<GroupEntry> groups;
};

// All catalogue rows with parameters (v, k); empty means no flag-transitive
// Steiner 3-design has these parameters. Requires 3 < k < v.
std::vector<CatalogueEntry> classify(std::uint64_t v, std::uint64_t k);

}  // namespace steiner3::catalog
