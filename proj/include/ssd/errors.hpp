#pragma once

#include <stdexcept>
#include <string>

namespace ssd {

// Malformed user input: sequence literals, partition specs, parameter sets.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size/time guard would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedPartition : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

// Alice and Bob computed different outputs.
class SoundnessError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

class RunawayProtocol : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

// An exhaustively checked claim failed at a concrete size.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssd
