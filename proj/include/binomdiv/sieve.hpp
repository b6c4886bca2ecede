#pragma once

#include "binomdiv/checked.hpp"

#include <memory>
#include <vector>

namespace binomdiv::ratio {

// All primes <= limit, ascending. Backed by a process-wide grow-only cache:
// the returned snapshot may extend past `limit` and stays valid while the
// caller holds it. Growth is serialized; readers never block each other.
std::shared_ptr<const std::vector<i64>> primes_up_to(i64 limit);

} // namespace binomdiv::ratio
