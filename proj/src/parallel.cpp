#include "spancalc/parallel.hpp"

#include <cstdlib>
#include <cstring>

namespace spancalc {

namespace {
int override_mode = -1;
}

bool parallel_enabled() {
  if (override_mode >= 0) return override_mode == 1;
  static const bool serial = [] {
    const char* v = std::getenv("SPANCALC_SERIAL");
    return v != nullptr && std::strcmp(v, "1") == 0;
  }();
  return !serial;
}

void set_parallel_override(int mode) { override_mode = mode; }

}  // namespace spancalc
