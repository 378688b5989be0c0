#pragma once

#include <stdexcept>
#include <string>

namespace wotboost {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyDataset : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

class SingleClass : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  using Error::Error;
};

class NotEnoughNeighbors : public Error {
 public:
  using Error::Error;
};

class AllZeroWeights : public Error {
 public:
  using Error::Error;
};

class EmptyEnsemble : public Error {
 public:
  using Error::Error;
};

class DegenerateNormalizer : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by the CSV loader; carries a human-readable location.
class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownLabelValue : public Error {
 public:
  using Error::Error;
};

/// Raised when the configured minority value labels the larger class.
class InvertedClasses : public Error {
 public:
  using Error::Error;
};

}  // namespace wotboost
