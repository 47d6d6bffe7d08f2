#pragma once

#include <cstddef>
#include <functional>

namespace sicforge {

// Worker cap: hardware concurrency, reduced by the SICFORGE_THREADS
// environment variable when set. Always >= 1.
int max_threads();

// Static partition over [0, n); f(i) must only write to slot i so results do
// not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

} // namespace sicforge
