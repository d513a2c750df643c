#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace olymp {

/**
 * Deterministic, splittable random source.
 *
 * One master seed governs every randomized component.  Independent streams
 * are derived with split(), never by sharing a generator, so adding draws in
 * one component cannot perturb another.  All distribution helpers are
 * implemented on top of raw 64-bit draws: the mt19937_64 engine is specified
 * bit-exactly by the standard, but std::uniform_int_distribution and friends
 * are not, and reports must be reproducible across platforms.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }

    /** Child generator for an independently named stream. */
    Rng split(std::string_view label) const {
        return Rng(mix(seed_ ^ fnv1a(label)));
    }

    /** Child generator for the i-th element of a stream (fuzz cases, restarts). */
    Rng split(std::uint64_t index) const {
        return Rng(mix(seed_ ^ mix(index + 0x9e3779b97f4a7c15ULL)));
    }

    std::uint64_t next_u64() { return engine_(); }

    /** Unbiased draw from {0, 1, ..., bound-1}; bound must be positive. */
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) {
            throw std::invalid_argument("Rng::below: bound must be positive");
        }
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t draw = next_u64();
        while (draw >= limit) {
            draw = next_u64();
        }
        return draw % bound;
    }

    /** Uniform integer in the inclusive range [lo, hi]. */
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) {
            throw std::invalid_argument("Rng::uniform_int: empty range");
        }
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        // span == 0 means the full 64-bit range.
        const std::uint64_t draw = span == 0 ? next_u64() : below(span);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw);
    }

    /** Uniform double in [0, 1) with 53 random bits. */
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /** Uniform double in [lo, hi). */
    double uniform(double lo, double hi) {
        if (!(lo < hi)) {
            throw std::invalid_argument("Rng::uniform: empty range");
        }
        return lo + (hi - lo) * uniform();
    }

    bool coin_flip() { return (next_u64() & 1) != 0; }

    /** Fisher-Yates shuffle with draws from this generator. */
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(values[i - 1], values[j]);
        }
    }

private:
    static constexpr std::uint64_t fnv1a(std::string_view text) {
        std::uint64_t hash = 0xcbf29ce484222325ULL;
        for (const char ch : text) {
            hash ^= static_cast<unsigned char>(ch);
            hash *= 0x100000001b3ULL;
        }
        return hash;
    }

    // splitmix64 finalizer; decorrelates adjacent seeds before they reach the engine.
    static constexpr std::uint64_t mix(std::uint64_t value) {
        value += 0x9e3779b97f4a7c15ULL;
        value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
        value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
        return value ^ (value >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace olymp
