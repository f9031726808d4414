#include "fqv/rng.hpp"

#include <cmath>

namespace fqv {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline std::uint32_t mulhi(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) >> 32);
}

} // namespace

std::array<std::uint32_t, 4> RngStream::block(std::uint64_t index) const {
    std::uint32_t c0 = static_cast<std::uint32_t>(index);
    std::uint32_t c1 = static_cast<std::uint32_t>(index >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream_id);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream_id >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);

    for (int round = 0; round < 10; ++round) {
        const std::uint32_t hi0 = mulhi(kPhiloxM0, c0);
        const std::uint32_t lo0 = kPhiloxM0 * c0;
        const std::uint32_t hi1 = mulhi(kPhiloxM1, c2);
        const std::uint32_t lo1 = kPhiloxM1 * c2;
        const std::uint32_t n0 = hi1 ^ c1 ^ k0;
        const std::uint32_t n1 = lo1;
        const std::uint32_t n2 = hi0 ^ c3 ^ k1;
        const std::uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {c0, c1, c2, c3};
}

double RngStream::uniform(std::uint64_t index) const {
    const auto b = block(index);
    const std::uint64_t u =
        ((static_cast<std::uint64_t>(b[0]) << 32) | b[1]) >> 11;
    return (static_cast<double>(u) + 0.5) * 0x1p-53;
}

double RngStream::normal(std::uint64_t index) const {
    const auto b = block(index);
    const std::uint64_t w1 =
        ((static_cast<std::uint64_t>(b[0]) << 32) | b[1]) >> 11;
    const std::uint64_t w2 =
        ((static_cast<std::uint64_t>(b[2]) << 32) | b[3]) >> 11;
    const double u1 = (static_cast<double>(w1) + 0.5) * 0x1p-53;
    const double u2 = (static_cast<double>(w2) + 0.5) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

} // namespace fqv
