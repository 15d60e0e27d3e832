#ifndef UWT_CORE_RNG_HPP
#define UWT_CORE_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace uwt {

/// xoshiro256** seeded through splitmix64. Self-contained so that streams are
/// bit-reproducible across platforms and trivially serializable into
/// checkpoints (std:: distributions give no such guarantee).
class Rng {
public:
    explicit Rng(uint64_t seed = 0) { reseed(seed); }

    void reseed(uint64_t seed) {
        uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
        have_gauss_ = false;
        gauss_ = 0;
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        // rejection sampling to avoid modulo bias
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    /// Standard normal via Box-Muller (cached pair member).
    double normal() {
        if (have_gauss_) {
            have_gauss_ = false;
            return gauss_;
        }
        double u1 = 0;
        do {
            u1 = uniform();
        } while (u1 <= 0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        gauss_ = r * std::sin(a);
        have_gauss_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<size_t>(below(i))]);
    }

    std::vector<long> permutation(long n) {
        std::vector<long> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0L);
        shuffle(p);
        return p;
    }

    /// k distinct values from [0, n), in draw order.
    std::vector<long> sample_without_replacement(long n, long k) {
        if (k > n) throw std::invalid_argument("Rng::sample_without_replacement: k > n");
        std::vector<long> pool(static_cast<size_t>(n));
        std::iota(pool.begin(), pool.end(), 0L);
        std::vector<long> out;
        out.reserve(static_cast<size_t>(k));
        for (long i = 0; i < k; ++i) {
            const long j = static_cast<long>(below(static_cast<uint64_t>(n - i)));
            out.push_back(pool[static_cast<size_t>(j)]);
            std::swap(pool[static_cast<size_t>(j)], pool[static_cast<size_t>(n - 1 - i)]);
        }
        return out;
    }

    /// Derives an independent child stream; does not disturb this stream's state.
    Rng fork(uint64_t salt) const {
        uint64_t x = state_[0] ^ rotl(state_[3], 13) ^ (salt * 0x9E3779B97F4A7C15ULL + 1);
        Rng r(0);
        for (auto& s : r.state_) s = splitmix64(x);
        return r;
    }

    std::array<uint64_t, 6> save_state() const {
        return {state_[0], state_[1], state_[2], state_[3],
                have_gauss_ ? 1ULL : 0ULL, bit_cast_u64(gauss_)};
    }

    void restore_state(const std::array<uint64_t, 6>& s) {
        state_ = {s[0], s[1], s[2], s[3]};
        have_gauss_ = s[4] != 0;
        gauss_ = bit_cast_double(s[5]);
    }

private:
    static uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    static uint64_t bit_cast_u64(double d) {
        uint64_t u;
        static_assert(sizeof(u) == sizeof(d));
        __builtin_memcpy(&u, &d, sizeof(u));
        return u;
    }
    static double bit_cast_double(uint64_t u) {
        double d;
        __builtin_memcpy(&d, &u, sizeof(d));
        return d;
    }

    std::array<uint64_t, 4> state_{};
    bool have_gauss_ = false;
    double gauss_ = 0;
};

} // namespace uwt

#endif
