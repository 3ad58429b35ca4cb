#ifndef TREEFPP_ERRORS_HPP
#define TREEFPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treefpp {

/// Malformed or out-of-range textual input (permutations, flags, numbers).
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit parse_error(const std::string& what)
      : std::runtime_error(what), position_(0) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// An enumeration or exact-integer budget would be exceeded.
class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (e.g. Q not normal in P).
class precondition_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace treefpp

#endif
