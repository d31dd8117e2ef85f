#include "arbopack/limits.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace arbopack {

Limits Limits::from_env() {
  Limits limits;
  const char* raw = std::getenv("ARBOPACK_LIMITS");
  if (raw == nullptr) return limits;

  std::istringstream stream(raw);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    int value = std::atoi(item.c_str() + eq + 1);
    if (value <= 0) continue;
    if (key == "subpartitions") limits.max_subpartition_vertices = value;
    if (key == "subsets") limits.max_subset_vertices = value;
  }
  return limits;
}

}  // namespace arbopack
