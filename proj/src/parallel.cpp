#include "framex/parallel.hpp"

#include <cstdlib>
#include <string>

namespace framex {

int thread_count() {
  int count = static_cast<int>(std::thread::hardware_concurrency());
  if (count < 1) count = 1;
  if (const char* env = std::getenv("FRAMEX_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) count = std::min(count, cap);
    } catch (const std::exception&) {
      // Unparseable values leave the default in place.
    }
  }
  return count;
}

}  // namespace framex
