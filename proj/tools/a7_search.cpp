// Offline generator for data/a7_gl42.gens: draws random pairs of invertible
// 4x4 matrices over GF(2) and keeps the first pair whose generated group has
// order 2520 (the order of A7; every subgroup of that order in
// GL(4,2) = A8 is an A7).

#include <array>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "steiner3/perm.hpp"

namespace {

using Matrix = std::array<std::uint32_t, 4>;  // row i = image of e_i

steiner3::Permutation as_permutation(const Matrix& m) {
  std::vector<steiner3::Point> images(16);
  for (std::uint32_t x = 0; x < 16; ++x) {
    std::uint32_t y = 0;
    for (unsigned i = 0; i < 4; ++i) {
      if ((x >> i) & 1) y ^= m[i];
    }
    images[x] = y;
  }
  return steiner3::Permutation(std::move(images));
}

bool invertible(const Matrix& m) {
  std::vector<bool> hit(16, false);
  for (std::uint32_t x = 0; x < 16; ++x) {
    std::uint32_t y = 0;
    for (unsigned i = 0; i < 4; ++i) {
      if ((x >> i) & 1) y ^= m[i];
    }
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::string row_string(std::uint32_t row) {
  std::string s;
  for (unsigned j = 0; j < 4; ++j) s += ((row >> j) & 1) ? '1' : '0';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search GL(4,2) for a generating pair of A7"};
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  auto random_matrix = [&] {
    Matrix m;
    do {
      for (auto& row : m) row = static_cast<std::uint32_t>(rng() & 0xF);
    } while (!invertible(m));
    return m;
  };

  for (std::uint64_t trial = 1;; ++trial) {
    const Matrix a = random_matrix(), b = random_matrix();
    steiner3::GeneratorSet g(16, {as_permutation(a), as_permutation(b)});
    if (steiner3::group_order(g).order != 2520) continue;
    std::cout << "# Generators of a subgroup A7 <= GL(4,2).\n"
              << "# Produced by tools/a7_search --seed " << seed << " (trial " << trial << "): random pairs of\n"
              << "# invertible matrices, kept when Schreier-Sims gives order 2520.\n"
              << "# Row i is the image of the unit vector e_i, coordinates e_0..e_3 left to right;\n"
              << "# a vector x maps to the sum of the rows selected by its coordinates.\n"
              << "dim: 4\n";
    for (const Matrix& m : {a, b}) {
      std::cout << "mat:";
      for (auto row : m) std::cout << ' ' << row_string(row);
      std::cout << '\n';
    }
    return 0;
  }
}
