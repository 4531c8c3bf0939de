#pragma once

#include <stdexcept>
#include <string>

namespace heegaard {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter names a generator outside 1..2g.
class InvalidWord : public Error {
 public:
  using Error::Error;
};

/// A prefix or suffix position lies outside 0..length.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatches and objects that do not belong to the diagram at hand.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A diagram violates a structural invariant (curve count, ranges, labels).
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

/// Maslov parity was requested for generators in different classes.
class NoWhitneyDisk : public Error {
 public:
  using Error::Error;
};

}  // namespace heegaard
