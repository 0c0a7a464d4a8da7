#pragma once

#include <optional>

namespace breadthkit {

/// Caps the OpenMP worker count at BREADTHKIT_THREADS when that variable
/// holds a positive integer. Returns the cap that was applied, if any.
std::optional<int> apply_thread_limit_from_env();

int worker_count();

}  // namespace breadthkit
