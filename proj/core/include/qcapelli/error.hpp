#pragma once

#include <stdexcept>
#include <string>

namespace qcapelli {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Raised for u = ±v in phi and for identically-zero denominator series.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Series errors: truncation budget exhausted, bad valuation, unrepresentable root.
class SeriesError : public Error {
 public:
  using Error::Error;
};

// Precondition violation by the caller (bad partition, index out of range, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcapelli
