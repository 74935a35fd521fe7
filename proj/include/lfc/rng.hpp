#pragma once

#include <cstdint>
#include <random>

namespace lfc {

// splitmix64 step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for case `index` of a suite seeded with `suite_seed`. Any case is
// reproducible from these two numbers alone.
inline std::uint64_t case_seed(std::uint64_t suite_seed, std::uint64_t index) {
    return splitmix64(suite_seed ^ splitmix64(index + 1));
}

// Deterministic uniform generator over mt19937_64. The bit-to-double
// mapping is spelled out here instead of going through
// std::uniform_real_distribution, whose output is implementation-defined;
// results must be bit-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Uniform index in [0, n). n is tiny everywhere this is used, so the
    // modulo bias (< n / 2^64) is irrelevant.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace lfc
