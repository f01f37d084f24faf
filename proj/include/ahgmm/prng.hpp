#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace ahgmm {

/// 256-bit secret key for the hopping stream. Parsed from 64 hex digits.
struct SeedKey {
    std::array<std::uint8_t, 32> bytes{};

    static SeedKey from_hex(std::string_view hex);
    std::string to_hex() const;

    /// Truncated non-reversible digest for reports and logs; the raw key
    /// itself must never be printed.
    std::string redacted() const;

    bool operator==(const SeedKey&) const = default;
};

/// Deterministic keyed byte stream: ChaCha20 in counter mode with an
/// all-zero nonce. The same key always yields the same stream, and the
/// draw helpers below define the canonical encoding used by the hopping
/// plan derivation.
class KeyedStream {
public:
    explicit KeyedStream(const SeedKey& key);

    /// Next 8 keystream bytes, little-endian.
    std::uint64_t next_u64();

    /// Uniform draw in [0, 1): top 53 bits of one next_u64().
    double next_unit();

    /// Sign draw from one next_u64(): low bit 0 -> +1, 1 -> -1.
    int next_sign();

private:
    void refill();

    std::array<std::uint32_t, 16> state_{};
    std::array<std::uint8_t, 64> block_{};
    std::size_t pos_ = 64;
};

/// FNV-1a 64-bit digest, used only for redaction and checksums of small
/// buffers.
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

} // namespace ahgmm
