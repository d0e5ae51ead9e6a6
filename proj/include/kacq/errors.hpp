#pragma once

#include <stdexcept>
#include <string>

namespace kacq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpecMismatchError : public Error {
 public:
  using Error::Error;
};

// Geometric series or infinite product with no convergent grading.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

class NotAQSeriesError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class LevelMismatchError : public Error {
 public:
  using Error::Error;
};

// A factor or lattice vector does not fit in the requested box.
class BoxOverflowError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace kacq
