#pragma once

#include <stdexcept>
#include <string>

namespace occupancy {

// Input violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SumMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyRealization : public DomainError {
 public:
  using DomainError::DomainError;
};

class TooManySlots : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroWeight : public DomainError {
 public:
  using DomainError::DomainError;
};

class LengthMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured size guard refused the request. Nothing was computed.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputTooLarge : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

class SearchSpaceTooLarge : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

class OracleTooLarge : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

}  // namespace occupancy
