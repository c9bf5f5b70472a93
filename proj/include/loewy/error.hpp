#pragma once

#include <stdexcept>
#include <string>

namespace loewy {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("inverse of zero in a finite field") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The ground field does not split the algebra (some simple module has
/// End(L) of dimension > 1). Retrying over GF(p^k) with larger k may help.
class NotSplit : public Error {
 public:
  using Error::Error;
};

class NoInvolution : public Error {
 public:
  NoInvolution() : Error("algebra carries no anti-involution") {}
};

class NotDeltaFiltered : public Error {
 public:
  using Error::Error;
};

class ChainFailure : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label) : Error("unknown label '" + label + "'") {}
};

class LabelError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (bad JSON, schema violation).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace loewy
