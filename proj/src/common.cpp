#include "heapmod/common.hpp"

#include <sstream>

namespace heapmod {

std::string Violation::to_string() const {
  std::ostringstream os;
  os << law << " at (";
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i) os << ",";
    os << witness[i];
  }
  os << ")";
  if (!detail.empty()) os << " [" << detail << "]";
  return os.str();
}

}  // namespace heapmod
