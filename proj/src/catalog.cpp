#include "steiner3/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "steiner3/arith.hpp"
#include "steiner3/error.hpp"

#ifndef STEINER3_DATA_DIR
#define STEINER3_DATA_DIR "data"
#endif

namespace steiner3::catalog {

namespace {

using gf::FieldContext;
using gf::FieldElement;

constexpr std::uint64_t kMaxPoints = 128;

// GF(q^e) for a prime power q.
FieldContext extension_field(std::uint32_t q, std::uint32_t e) {
  auto pp = arith::prime_power(q);
  if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return FieldContext(static_cast<std::uint32_t>(pp->first), pp->second * e);
}

}  // namespace

ProjectiveLine::ProjectiveLine(gf::FieldContext ctx) : ctx_(std::move(ctx)) {}

std::vector<std::string> ProjectiveLine::labels() const {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < ctx_.order(); ++i) out.push_back(ctx_.to_string(FieldElement{i}));
  out.emplace_back("inf");
  return out;
}

Permutation ProjectiveLine::mobius(FieldElement a, FieldElement b, FieldElement c, FieldElement d) const {
  if (ctx_.sub(ctx_.mul(a, d), ctx_.mul(b, c)) == ctx_.zero()) throw InvalidArgument("singular Mobius transformation");
  std::vector<Point> images(size());
  for (std::uint32_t i = 0; i < ctx_.order(); ++i) {
    const FieldElement x{i};
    const FieldElement den = ctx_.add(ctx_.mul(c, x), d);
    images[i] = den == ctx_.zero() ? infinity() : id(ctx_.div(ctx_.add(ctx_.mul(a, x), b), den));
  }
  images[infinity()] = c == ctx_.zero() ? infinity() : id(ctx_.div(a, c));
  return Permutation(std::move(images));
}

Permutation ProjectiveLine::frobenius() const {
  std::vector<Point> images(size());
  for (std::uint32_t i = 0; i < ctx_.order(); ++i) images[i] = id(ctx_.frobenius(FieldElement{i}, ctx_.characteristic()));
  images[infinity()] = infinity();
  return Permutation(std::move(images));
}

Design construct_boolean_affine(unsigned d) {
  if (d < 3 || d > 7) throw InvalidArgument("boolean affine design needs 3 <= d <= 7");
  const Point v = Point{1} << d;
  std::vector<Block> blocks;
  for (Point x = 0; x < v; ++x) {
    for (Point y = x + 1; y < v; ++y) {
      for (Point z = y + 1; z < v; ++z) {
        const Point w = x ^ y ^ z;
        if (w > z) blocks.push_back({x, y, z, w});
      }
    }
  }
  std::vector<std::string> labels;
  for (Point x = 0; x < v; ++x) {
    std::string s;
    for (unsigned i = d; i-- > 0;) s += ((x >> i) & 1) ? '1' : '0';
    labels.push_back(std::move(s));
  }
  return Design(v, 3, std::move(blocks), std::move(labels));
}

Design construct_spherical(std::uint32_t q, std::uint32_t e) {
  if (q < 3 || !arith::prime_power(q)) throw InvalidArgument("spherical design needs a prime power q >= 3");
  if (e < 2) throw InvalidArgument("spherical design needs e >= 2");
  const std::uint64_t qe = arith::checked_pow(q, e);
  if (qe + 1 > kMaxPoints) throw InvalidArgument("spherical design needs q^e + 1 <= 128");
  ProjectiveLine line(extension_field(q, e));
  std::vector<Point> base;
  for (auto s : line.field().fixed_points_of_power(q)) base.push_back(line.id(s));
  base.push_back(line.infinity());
  if (base.size() != q + 1) throw ConsistencyError("subfield GF(q) has the wrong size");
  auto blocks = set_orbit(projective_group_generators(ProjectiveGroup::PGL, q, e), base);
  return Design(static_cast<std::uint32_t>(line.size()), 3, std::move(blocks), line.labels());
}

Design construct_netto_extension(std::uint32_t q) {
  if (q % 12 != 7 || !arith::prime_power(q)) throw InvalidArgument("netto extension needs a prime power q = 7 (mod 12)");
  if (q + 1 > kMaxPoints) throw InvalidArgument("netto extension needs q + 1 <= 128");
  ProjectiveLine line(extension_field(q, 1));
  const auto& f = line.field();
  std::vector<Point> base{line.id(f.zero()), line.id(f.one()), line.id(gf::primitive_sixth_root(f)), line.infinity()};
  auto blocks = set_orbit(projective_group_generators(ProjectiveGroup::PSL, q, 1), base);
  return Design(static_cast<std::uint32_t>(line.size()), 3, std::move(blocks), line.labels());
}

std::vector<std::uint32_t> golay_lexicode() {
  constexpr std::uint32_t kLength = 24;
  constexpr int kDistance = 8;
  std::vector<std::uint32_t> code{0};
  std::uint32_t leading = 0;
  for (std::uint32_t w = 1; w < (std::uint32_t{1} << kLength); ++w) {
    // w with a leading bit of the current basis shares its coset with a
    // smaller word that was already accepted or rejected.
    if (w & leading) continue;
    const bool far = std::all_of(code.begin(), code.end(), [&](std::uint32_t c) { return __builtin_popcount(w ^ c) >= kDistance; });
    if (!far) continue;
    leading |= std::uint32_t{1} << (31 - __builtin_clz(w));
    const std::size_t n = code.size();
    for (std::size_t i = 0; i < n; ++i) code.push_back(code[i] ^ w);
  }
  std::sort(code.begin(), code.end());
  return code;
}

WittPipeline witt_pipeline(std::span<const std::uint32_t> code) {
  auto expect = [](std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
      throw ConsistencyError(std::string("Golay pipeline: ") + what + " count is " + std::to_string(got) + ", expected " + std::to_string(want));
    }
  };
  WittPipeline out;
  out.codewords = code.size();
  expect(code.size(), 4096, "codeword");
  std::vector<Block> octads;
  for (std::uint32_t w : code) {
    if (__builtin_popcount(w) != 8) continue;
    Block block;
    for (Point i = 0; i < 24; ++i) {
      if ((w >> i) & 1) block.push_back(i);
    }
    octads.push_back(std::move(block));
  }
  expect(octads.size(), 759, "octad");
  out.octads = Design(24, 5, std::move(octads));
  out.derived1 = derived_design(out.octads, 23);
  expect(out.derived1.b(), 253, "first derivation block");
  out.witt22 = derived_design(out.derived1, 22);
  expect(out.witt22.b(), 77, "second derivation block");
  return out;
}

Design construct_witt_22() { return witt_pipeline(golay_lexicode()).witt22; }

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("STEINER3_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return STEINER3_DATA_DIR;
}

GeneratorSet load_matrix_generators(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("missing data file " + path.string());
  unsigned dim = 0;
  std::vector<Permutation> gens;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw FormatError(path.filename().string() + " line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head)) continue;
    if (head == "dim:") {
      if (!(tokens >> dim) || dim < 1 || dim > 7) fail("bad dimension");
    } else if (head == "mat:") {
      if (dim == 0) fail("'mat:' before 'dim:'");
      std::vector<Point> rows;
      std::string row;
      while (tokens >> row) {
        if (row.size() != dim || row.find_first_not_of("01") != std::string::npos) fail("bad matrix row '" + row + "'");
        Point bits = 0;
        for (unsigned j = 0; j < dim; ++j) bits |= Point(row[j] == '1') << j;
        rows.push_back(bits);
      }
      if (rows.size() != dim) fail("matrix needs " + std::to_string(dim) + " rows");
      std::vector<Point> images(std::size_t{1} << dim);
      for (Point x = 0; x < images.size(); ++x) {
        Point y = 0;
        for (unsigned i = 0; i < dim; ++i) {
          if ((x >> i) & 1) y ^= rows[i];
        }
        images[x] = y;
      }
      try {
        gens.emplace_back(std::move(images));
      } catch (const InvalidArgument&) {
        fail("singular matrix");
      }
    } else {
      fail("unknown entry '" + head + "'");
    }
  }
  if (dim == 0 || gens.empty()) throw FormatError(path.string() + ": no matrix generators");
  return GeneratorSet(std::size_t{1} << dim, std::move(gens));
}

GeneratorSet affine_group_generators(AffineGroup kind, unsigned d, const std::filesystem::path& data_dir) {
  if (d < 1 || d > 7) throw InvalidArgument("affine groups need 1 <= d <= 7");
  const Point v = Point{1} << d;
  auto by_rule = [v](auto rule) {
    std::vector<Point> images(v);
    for (Point x = 0; x < v; ++x) images[x] = rule(x);
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  auto add_translations = [&] {
    for (unsigned i = 0; i < d; ++i) gens.push_back(by_rule([i](Point x) { return x ^ (Point{1} << i); }));
  };

  switch (kind) {
    case AffineGroup::AGL_d_2:
      add_translations();
      // Elementary transvections x_j += x_i generate GL(d,2).
      for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = 0; j < d; ++j) {
          if (i != j) gens.push_back(by_rule([i, j](Point x) { return x ^ (((x >> i) & 1) << j); }));
        }
      }
      break;
    case AffineGroup::AGL_1:
    case AffineGroup::AGammaL_1: {
      const FieldContext f(2, d);
      gens.push_back(by_rule([](Point x) { return x ^ 1; }));
      gens.push_back(by_rule([&f](Point x) { return f.mul(f.omega(), FieldElement{x}).index; }));
      if (kind == AffineGroup::AGammaL_1) gens.push_back(by_rule([&f](Point x) { return f.frobenius(FieldElement{x}, 2).index; }));
      break;
    }
    case AffineGroup::T_A7: {
      if (d != 4) throw InvalidArgument("2^4:A7 needs d = 4");
      add_translations();
      const auto a7 = load_matrix_generators(data_dir / "a7_gl42.gens");
      if (a7.degree != v) throw FormatError("a7_gl42.gens is not over GF(2)^4");
      gens.insert(gens.end(), a7.gens.begin(), a7.gens.end());
      break;
    }
  }
  return GeneratorSet(v, std::move(gens));
}

GeneratorSet projective_group_generators(ProjectiveGroup kind, std::uint32_t q, std::uint32_t e) {
  if (e < 1) throw InvalidArgument("extension degree must be at least 1");
  if (!arith::prime_power(q)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (arith::checked_pow(q, e) + 1 > kMaxPoints) throw InvalidArgument("projective groups need q^e + 1 <= 128");
  const ProjectiveLine line(extension_field(q, e));
  const auto& f = line.field();
  const FieldElement zero = f.zero(), one = f.one(), w = f.omega();
  std::vector<Permutation> gens;
  gens.push_back(line.mobius(one, one, zero, one));
  if (kind == ProjectiveGroup::PGL || kind == ProjectiveGroup::PGammaL) {
    gens.push_back(line.mobius(w, zero, zero, one));
    gens.push_back(line.mobius(zero, one, one, zero));
  } else {
    gens.push_back(line.mobius(f.mul(w, w), zero, zero, one));
    gens.push_back(line.mobius(zero, f.neg(one), one, zero));
  }
  if ((kind == ProjectiveGroup::PSigmaL || kind == ProjectiveGroup::PGammaL) && f.degree() > 1) {
    gens.push_back(line.frobenius());
  }
  return GeneratorSet(line.size(), std::move(gens));
}

std::string to_string(Family family) {
  switch (family) {
    case Family::affine:
      return "affine";
    case Family::spherical:
      return "spherical";
    case Family::netto:
      return "netto";
    case Family::witt:
      return "witt";
  }
  return "?";
}

std::string to_string(AffineGroup kind) {
  switch (kind) {
    case AffineGroup::AGL_d_2:
      return "AGL_d_2";
    case AffineGroup::AGL_1:
      return "AGL_1";
    case AffineGroup::AGammaL_1:
      return "AGammaL_1";
    case AffineGroup::T_A7:
      return "T_A7";
  }
  return "?";
}

std::string to_string(ProjectiveGroup kind) {
  switch (kind) {
    case ProjectiveGroup::PSL:
      return "PSL";
    case ProjectiveGroup::PGL:
      return "PGL";
    case ProjectiveGroup::PSigmaL:
      return "PSigmaL";
    case ProjectiveGroup::PGammaL:
      return "PGammaL";
  }
  return "?";
}

std::vector<CatalogueEntry> classify(std::uint64_t v, std::uint64_t k) {
  if (!(3 < k && k < v)) throw InvalidArgument("classify needs 3 < k < v");
  std::vector<CatalogueEntry> rows;

  if (k == 4 && v >= 8 && (v & (v - 1)) == 0) {
    CatalogueEntry row;
    row.family = Family::affine;
    row.part = 1;
    row.d = static_cast<std::uint32_t>(__builtin_ctzll(v));
    const std::string dd = std::to_string(row.d);
    row.groups.push_back({"AGL(" + dd + ",2)", "affine AGL_d_2"});
    if (row.d == 3) {
      row.groups.push_back({"AGL(1,8)", "affine AGL_1"});
      row.groups.push_back({"AGammaL(1,8)", "affine AGammaL_1"});
    } else if (row.d == 4) {
      row.groups.push_back({"2^4:A7", "affine T_A7"});
    } else if (row.d == 5) {
      row.groups.push_back({"AGammaL(1,32)", "affine AGammaL_1"});
    }
    rows.push_back(std::move(row));
  }

  const std::uint64_t q = k - 1;
  if (q >= 3 && arith::prime_power(q)) {
    std::uint64_t power = q;
    std::uint32_t e = 1;
    while (power < v - 1 && power <= (v - 1) / q) {
      power *= q;
      ++e;
    }
    if (power == v - 1 && e >= 2) {
      CatalogueEntry row;
      row.family = Family::spherical;
      row.part = 2;
      row.q = static_cast<std::uint32_t>(q);
      row.e = e;
      const std::string qe = std::to_string(q) + "^" + std::to_string(e);
      row.groups.push_back({"PGL(2," + qe + ")", "projective PGL"});
      row.groups.push_back({"PGammaL(2," + qe + ")", "projective PGammaL"});
      if (e % 2 == 1 && q % 2 == 1) {
        row.groups.push_back({"PSL(2," + qe + ")", "projective PSL"});
        row.groups.push_back({"PSigmaL(2," + qe + ")", "projective PSigmaL"});
      }
      rows.push_back(std::move(row));
    }
  }

  if (k == 4 && (v - 1) % 12 == 7 && arith::prime_power(v - 1)) {
    CatalogueEntry row;
    row.family = Family::netto;
    row.part = 3;
    row.q = static_cast<std::uint32_t>(v - 1);
    row.e = 1;
    const std::string qs = std::to_string(row.q);
    row.groups.push_back({"PSL(2," + qs + ")", "projective PSL"});
    if (!arith::is_prime(row.q)) row.groups.push_back({"PSigmaL(2," + qs + ")", "projective PSigmaL"});
    rows.push_back(std::move(row));
  }

  if (v == 22 && k == 6) {
    CatalogueEntry row;
    row.family = Family::witt;
    row.part = 4;
    row.groups.push_back({"Aut(W22) = M22:2", "automorphism search"});
    row.groups.push_back({"M22", "even part of the automorphism group"});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace steiner3::catalog
