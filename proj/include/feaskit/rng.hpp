// Copyright 2026 feaskit developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace feaskit {

// splitmix64 step; used both to spread weak seeds and to derive per-stream
// seeds from a master seed.  The constants are the standard ones from
// Steele/Lea/Flood.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic seed for stream `stream` under master seed `master`.
// All derived-seed plumbing (per-instance seeds in dataset generation,
// per-run seeds in benchmarks) goes through this one function so that the
// splitting rule is in a single place.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0x2545f4914f6cdd1dULL * (stream + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b >> 1);
}

// Thin wrapper around std::mt19937_64.  The engine's output sequence is
// pinned by the standard, but the std::*_distribution adaptors are not, so
// every draw we make goes through the hand-rolled helpers below.  This keeps
// results byte-identical across standard libraries and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [0, n).  Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        if ((n & (n - 1)) == 0) return gen_() & (n - 1);
        // 2^64 mod n is in [1, n-1] once powers of two are handled above,
        // so `lim` below is the exact count of accepted raw draws.
        std::uint64_t lim = 0ULL - ((std::uint64_t(-1) % n) + 1);
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= lim);
        return r % n;
    }

    // Uniform integer in [lo, hi] inclusive.
    long long range_int(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::range_int: empty range");
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double range_real(double lo, double hi) { return lo + (hi - lo) * unit(); }

    bool bernoulli(double p) { return unit() < p; }

    // Fisher-Yates, driven by below() so it is portable.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values sampled uniformly from [0, n), in random order.
    std::vector<int> sample_without_replacement(int n, int k);

    // Child generator for an independent substream.
    Rng spawn(std::uint64_t stream) {
        std::uint64_t s = gen_();
        return Rng(derive_seed(s, stream));
    }

  private:
    std::mt19937_64 gen_;
};

inline std::vector<int> Rng::sample_without_replacement(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_without_replacement: k out of range");
    // Partial Fisher-Yates over an index array; fine at the sizes we use.
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::size_t j = static_cast<std::size_t>(i) + static_cast<std::size_t>(below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        out.push_back(idx[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace feaskit
