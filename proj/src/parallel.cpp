#include "cuecast/parallel.hpp"

#include <cstdlib>
#include <string>

#include "cuecast/io_util.hpp"

namespace cuecast {

std::size_t thread_cap() {
  if (const char* env = std::getenv("CUECAST_THREADS")) {
    // Unparseable or non-positive values fall through to the hardware
    // default rather than failing the whole run.
    if (const auto parsed = parse_int_strict(env); parsed && *parsed >= 1) {
      return static_cast<std::size_t>(*parsed);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw < 1 ? 1 : hw;
}

}  // namespace cuecast
