#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "steiner3/perm.hpp"

namespace steiner3 {

// Text format: '#' starts a comment; the first non-comment line is
// "degree: n"; every further line is one permutation, either 1-based cycle
// notation "(1 2 3)(5 6)" or a 0-based image list "img: 2,0,1,...".
GeneratorSet parse_generators(std::string_view text);
GeneratorSet read_generators(const std::filesystem::path& path);

// Canonical form: "degree: n" followed by one "img:" line per generator.
std::string format_generators(const GeneratorSet& group);
void write_generators(const std::filesystem::path& path, const GeneratorSet& group);

}  // namespace steiner3
