#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad index, non-finite value, bad option).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not produce a meaningful answer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Design matrix loses full column rank when the k-th column is added.
class RankDeficientError : public NumericalError {
 public:
  explicit RankDeficientError(std::size_t k)
      : NumericalError("design matrix is rank deficient at k = " + std::to_string(k)), k_(k) {}
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

/// Residual sum of squares vanished, so -2 log likelihood is unbounded below.
class ZeroResidualError : public NumericalError {
 public:
  explicit ZeroResidualError(std::size_t k)
      : NumericalError("zero residual sum of squares at k = " + std::to_string(k) +
                       " (perfect fit, log-likelihood unbounded)"),
        k_(k) {}
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

class NotPsdError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace sic
