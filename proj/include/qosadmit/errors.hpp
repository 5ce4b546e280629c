#ifndef QOSADMIT_ERRORS_HPP
#define QOSADMIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qosadmit {

/// Input violates an operation's precondition (bad node id, self-loop, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured instance-size cap.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what_is_bounded, std::size_t size, std::size_t cap)
      : std::length_error(what_is_bounded + " has size " + std::to_string(size) +
                          ", above the configured cap of " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// Malformed text input (graph, line-network, demand files; rational literals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qosadmit

#endif  // QOSADMIT_ERRORS_HPP
