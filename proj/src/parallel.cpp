#include "frl/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace frl {

std::size_t worker_count() {
  if (const char* env = std::getenv("FRL_THREADS")) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *end == '\0' && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace frl
