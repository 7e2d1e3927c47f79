#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace cbamnet {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a (base, index) pair, e.g. one
// shuffle stream per epoch or one model seed per CV fold.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base;
    std::uint64_t a = splitmix64(s);
    s ^= index * 0xD1B54A32D192ED03ull;
    return a ^ splitmix64(s);
}

// Deterministic random source. std::mt19937_64 output is pinned by the
// standard; the value mappings below are ours, so every draw is
// bit-reproducible across platforms (the std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal(double mean, double stddev) {
        // Box-Muller, first branch only; u1 in (0, 1] so the log is finite.
        double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
        double u2 = uniform();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
        return mean + stddev * z;
    }

    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace cbamnet
