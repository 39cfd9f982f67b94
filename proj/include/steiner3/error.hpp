#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steiner3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or parameter-range violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed design JSON, generator file or data file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal self-check failed (wrong codeword count, non-integral
// stabilizer order, ...). Indicates a bug or a violated assumption.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A permutation maps some block onto a set that is not a block.
class SetNotPreserved : public Error {
 public:
  SetNotPreserved(std::vector<std::uint32_t> block, std::vector<std::uint32_t> image);

  const std::vector<std::uint32_t>& block() const { return block_; }
  const std::vector<std::uint32_t>& image() const { return image_; }

 private:
  std::vector<std::uint32_t> block_;
  std::vector<std::uint32_t> image_;
};

}  // namespace steiner3
