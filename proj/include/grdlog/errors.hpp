#pragma once

#include <stdexcept>
#include <string>

namespace grdlog {

// Raised when a DLP target is provably outside the cyclic group of the base.
class NotInSubgroupError : public std::runtime_error {
 public:
  explicit NotInSubgroupError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by CRT recombination when residues disagree on a shared factor.
class InconsistentSystemError : public std::runtime_error {
 public:
  explicit InconsistentSystemError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the attack when the challenge pair is not a genuine power pair.
class NotPowerPairError : public std::runtime_error {
 public:
  explicit NotPowerPairError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the shipped generator data file is missing, malformed or corrupted.
class DataFileError : public std::runtime_error {
 public:
  explicit DataFileError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed user-supplied input files (bad JSON, wrong format version).
class MalformedInputError : public std::runtime_error {
 public:
  explicit MalformedInputError(const std::string& what) : std::runtime_error(what) {}
};

// An invariant the code itself guarantees was observed broken.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace grdlog
