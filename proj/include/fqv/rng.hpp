#pragma once

#include <array>
#include <cstdint>

namespace fqv {

// Counter-based generator: Philox4x32-10. A draw is a pure function of
// (seed, stream_id, index), so replicate streams are reproducible across
// any worker count and scheduling order.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    std::array<std::uint32_t, 4> block(std::uint64_t index) const;

    // 53-bit uniforms in (0,1)
    double uniform(std::uint64_t index) const;

    // standard normal, one value per index (Box-Muller, cosine branch)
    double normal(std::uint64_t index) const;
};

} // namespace fqv
