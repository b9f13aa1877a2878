#pragma once

#include <cstdint>
#include <ostream>

namespace defq {

// Randomized exact checks of library identities. Returns true when every
// case passes. The same seed replays the same cases.
bool run_selftest(std::ostream& out, std::uint64_t seed, int count, bool json);

}  // namespace defq
