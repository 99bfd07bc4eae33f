#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ckdual {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotIrreducible : public Error {
 public:
  NotIrreducible() : Error("matrix is not irreducible") {}
};

class IsPermutation : public Error {
 public:
  IsPermutation() : Error("matrix is a permutation matrix") {}
};

class TailNotCovered : public Error {
 public:
  explicit TailNotCovered(std::size_t level)
      : Error("tail rule does not cover level " + std::to_string(level)),
        level_(level) {}
  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

class HypothesisNotCertified : public Error {
 public:
  using Error::Error;
};

class InvalidSeed : public Error {
 public:
  using Error::Error;
};

class MalformedDocument : public Error {
 public:
  using Error::Error;
};

}  // namespace ckdual
