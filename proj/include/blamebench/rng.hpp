#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace blamebench {

using Rng = std::mt19937_64;

// Master seed for a whole run. Every random draw in the harness flows
// through a stream derived from (master_seed, module tag, instance index);
// there is no global RNG state anywhere.
struct RunSeed {
  std::uint64_t master_seed = 0;
};

// Deterministic, collision-resistant stream derivation. Same inputs give the
// same stream; any change to seed, tag or index gives an unrelated stream.
Rng derive_stream(RunSeed seed, std::string_view tag, std::uint64_t index);

// The raw 64-bit mix behind derive_stream, exposed for seeding sub-streams.
std::uint64_t derive_seed(RunSeed seed, std::string_view tag, std::uint64_t index);

}  // namespace blamebench
