#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jchroma {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The (n, k, t) triple itself is malformed (k > n, t out of range, ...).
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// A vertex, vertex set, permutation or other argument does not satisfy the
// operation's precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// An operation was called on a point where it is mathematically undefined
// (e.g. the most-significant-differing-bit of two equal numbers).
class UndefinedInputError : public Error {
 public:
  using Error::Error;
};

// A coordinate-to-subset assignment is not injective or not shaped correctly.
class InvalidAssignmentError : public Error {
 public:
  using Error::Error;
};

// A closed-form bound or construction was requested for a (k, t) family it
// does not cover.
class UnsupportedFamilyError : public Error {
 public:
  using Error::Error;
};

// A size or time budget would be (or was) exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// An enumeration grew past the caller-supplied cap; carries how far it got.
class EnumerationError : public Error {
 public:
  EnumerationError(const std::string& what, std::uint64_t count)
      : Error(what), count(count) {}
  std::uint64_t count;
};

// A coloring leaves some vertex of the graph without a color.
class MissingVertexError : public Error {
 public:
  using Error::Error;
};

}  // namespace jchroma
