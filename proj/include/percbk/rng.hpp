#pragma once

#include <cstdint>

namespace percbk {

// Philox4x32-10 counter-based generator. Stateless: the output is a pure
// function of (key, counter), so parallel chains and parallel sweeps can
// draw reproducible numbers without shared state. Streams are keyed by
// (seed, stream id); within a stream, draws are addressed by (block, slot),
// e.g. (sweep index, edge index) for a Glauber chain.
struct Philox4x32 {
    static constexpr std::uint32_t mul_a = 0xD2511F53u;
    static constexpr std::uint32_t mul_b = 0xCD9E8D57u;
    static constexpr std::uint32_t weyl_a = 0x9E3779B9u;
    static constexpr std::uint32_t weyl_b = 0xBB67AE85u;

    struct Block {
        std::uint32_t x[4];
    };

    static inline std::uint32_t mulhi(std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) >> 32);
    }

    static Block generate(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
                          std::uint32_t c3, std::uint32_t k0, std::uint32_t k1) {
        for (int round = 0; round < 10; ++round) {
            const std::uint32_t hi0 = mulhi(mul_a, c0);
            const std::uint32_t lo0 = mul_a * c0;
            const std::uint32_t hi1 = mulhi(mul_b, c2);
            const std::uint32_t lo1 = mul_b * c2;
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += weyl_a;
            k1 += weyl_b;
        }
        return Block{{c0, c1, c2, c3}};
    }
};

// One logical stream of reproducible randomness. Addressed draws return the
// same value for the same (seed, stream, block, slot) on every platform.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t bits64(std::uint64_t block, std::uint64_t slot) const {
        const Philox4x32::Block b = Philox4x32::generate(
            static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
            static_cast<std::uint32_t>(slot), static_cast<std::uint32_t>(slot >> 32),
            static_cast<std::uint32_t>(seed_ ^ stream_),
            static_cast<std::uint32_t>((seed_ >> 32) ^ (stream_ >> 21)));
        return (static_cast<std::uint64_t>(b.x[0]) << 32) | b.x[1];
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform(std::uint64_t block, std::uint64_t slot) const {
        return static_cast<double>(bits64(block, slot) >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

// Sequential facade over CounterRng for utility sampling (random events,
// random bases). Deterministic for a fixed (seed, stream).
class SequenceRng {
  public:
    explicit SequenceRng(std::uint64_t seed, std::uint64_t stream = 0)
        : rng_(seed, stream), counter_(0) {}

    std::uint64_t bits64() { return rng_.bits64(counter_++, 0); }

    double uniform() { return static_cast<double>(bits64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n) via rejection-free 128-bit scaling.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(bits64()) * n) >> 64);
    }

  private:
    CounterRng rng_;
    std::uint64_t counter_;
};

}  // namespace percbk
