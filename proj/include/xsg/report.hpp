#ifndef XSG_REPORT_HPP
#define XSG_REPORT_HPP

#include <string>
#include <vector>

namespace xsg {

/// Outcome of a validator: passes iff the issue list is empty.
struct Report {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
  void fail(std::string what) { issues.push_back(std::move(what)); }
};

} // namespace xsg

#endif
