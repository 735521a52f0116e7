#ifndef SEET_ERRORS_HPP
#define SEET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seet {

struct InvalidState : std::runtime_error {
  explicit InvalidState(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidParameter : std::runtime_error {
  explicit InvalidParameter(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotSingleErrorType : std::runtime_error {
  explicit NotSingleErrorType(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidWeights : std::runtime_error {
  explicit InvalidWeights(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonConvexSpec : std::runtime_error {
  explicit NonConvexSpec(const std::string& msg) : std::runtime_error(msg) {}
};

struct TruncationTooSmall : std::runtime_error {
  explicit TruncationTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

struct IllConditioned : std::runtime_error {
  explicit IllConditioned(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateOutcome : std::runtime_error {
  explicit DegenerateOutcome(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleProtocol : std::runtime_error {
  explicit InfeasibleProtocol(const std::string& msg) : std::runtime_error(msg) {}
};

struct BoundViolated : std::runtime_error {
  explicit BoundViolated(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace seet

#endif
