#pragma once

#include <cstdint>

#include "polycal/rat.hpp"

namespace polycal {

/// Deterministic generator with pinned semantics (splitmix64 core), so
/// instance streams are reproducible bit-for-bit across platforms and
/// standard-library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by 128-bit multiply (n must be > 0).
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Uniform integer in [lo, hi] inclusive.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

    /// Rational with numerator in [-max_num, max_num], denominator in [1, max_den].
    Rat rat(long max_num = 8, long max_den = 8) {
        Rat r(int_in(-max_num, max_num), int_in(1, max_den));
        r.canonicalize();
        return r;
    }

    /// Nonzero vector of small rationals.
    RatVec nonzero_vec(int dim, long max_num = 8, long max_den = 8) {
        for (;;) {
            RatVec v(dim);
            for (int i = 0; i < dim; ++i) v[i] = rat(max_num, max_den);
            if (dim == 0 || !v.is_zero()) return v;
        }
    }

    RatVec vec(int dim, long max_num = 8, long max_den = 8) {
        RatVec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = rat(max_num, max_den);
        return v;
    }

    /// Child seed for an independent substream.
    uint64_t split(uint64_t stream) {
        uint64_t z = state_ ^ (0x632be59bd9b4e019ULL * (stream + 1));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

/// Stateless seed derivation for per-trial substreams.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
    uint64_t z = master ^ (0x9e3779b97f4a7c15ULL * (stream + 0x5851f42d4c957f2dULL));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace polycal
