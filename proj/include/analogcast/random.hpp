#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace analogcast {

using Rng = std::mt19937_64;

// Derives an independent seed for a named consumer ("generator", "restarts",
// "realizations", ...) from a single root seed.
std::uint64_t substream_seed(std::uint64_t root, std::string_view name);

inline Rng make_rng(std::uint64_t root, std::string_view name)
{
    return Rng(substream_seed(root, name));
}

} // namespace analogcast
