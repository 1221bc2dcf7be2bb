#include "rtint/report.hpp"

#include <sstream>

namespace rtint {

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << title << (passed() ? "  [PASS]" : "  [FAIL]") << "\n";
  for (const auto& c : checks) {
    os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  -- " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace rtint
