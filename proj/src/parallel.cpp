#include "breadthkit/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include <omp.h>

namespace breadthkit {

std::optional<int> apply_thread_limit_from_env() {
  const char* raw = std::getenv("BREADTHKIT_THREADS");
  if (raw == nullptr) return std::nullopt;
  const std::string_view text(raw);
  int cap = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc{} || ptr != text.data() + text.size() || cap <= 0) return std::nullopt;
  if (cap < omp_get_max_threads()) omp_set_num_threads(cap);
  return cap;
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace breadthkit
