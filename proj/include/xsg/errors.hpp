#ifndef XSG_ERRORS_HPP
#define XSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xsg {

/// Thrown when an operation is called with arguments outside its contract
/// (dimension mismatches, elements outside a family, non-central twists, ...).
class precondition_error : public std::invalid_argument {
public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Thrown by the text-format readers; carries the 1-based input line.
class parse_error : public std::runtime_error {
public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

} // namespace xsg

#endif
