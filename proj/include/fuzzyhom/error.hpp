#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyhom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: lattice expressions, project files, CSV.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands drawn from two different lattices.
class LatticeMismatch : public Error {
 public:
  LatticeMismatch() : Error("lattice values belong to different lattices") {}
};

/// Arguments that violate an operation's precondition (shapes, ranges,
/// non-cycles handed to class_of_cycle, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The computation is well defined but refused: zero is not meet-prime in
/// the lattice, or an enumeration cap would be exceeded.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzyhom
