#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rx3 {

/// Malformed or out-of-domain input (bad pair, id out of range, bad file).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run above its practical size cap.
class CapExceededError : public InputError {
 public:
  using InputError::InputError;
};

/// The operation requires a connected graph.
class DisconnectedError : public InputError {
 public:
  DisconnectedError() : InputError("graph is not connected") {}
  using InputError::InputError;
};

/// The input violates an algorithm's forbidden-subgraph hypothesis.
/// `witness` lists the vertices of an induced copy of `forbidden`.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string forbidden, std::vector<int> witness)
      : std::runtime_error(describe(forbidden, witness)),
        forbidden_(std::move(forbidden)),
        witness_(std::move(witness)) {}

  const std::string& forbidden() const noexcept { return forbidden_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const std::string& forbidden,
                              const std::vector<int>& witness) {
    std::string msg = "graph contains an induced " + forbidden + " on {";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) msg += ",";
      msg += std::to_string(witness[i]);
    }
    return msg + "}";
  }

  std::string forbidden_;
  std::vector<int> witness_;
};

/// An internal invariant failed. Signals a bug, not bad input.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rx3
