#include "canvas_forge/caps.hpp"

#include <cstdlib>

namespace canvas_forge {

int hard_cap(int fallback) {
  if (const char* env = std::getenv("CANVAS_FORGE_CAP")) {
    int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return fallback;
}

}  // namespace canvas_forge
