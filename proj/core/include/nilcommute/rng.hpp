#pragma once

#include <cstdint>
#include <random>

#include "nilcommute/field.hpp"

namespace nilcommute {

// Deterministic across platforms: mt19937_64's output sequence is fixed by
// the standard and we avoid std::*_distribution (whose mapping is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Q: integer in [lo, hi]; F_p: uniform residue.
    Scalar scalar(const FieldSpec& f, std::int64_t lo = -10, std::int64_t hi = 10) {
        if (f.kind() == FieldKind::Rationals)
            return Scalar::of_int(f, static_cast<long>(int_in(lo, hi)));
        return Scalar::from_residue(f, below(f.p()));
    }

    Scalar nonzero_scalar(const FieldSpec& f, std::int64_t lo = -10, std::int64_t hi = 10) {
        for (;;) {
            Scalar s = scalar(f, lo, hi);
            if (!s.is_zero()) return s;
        }
    }

private:
    std::mt19937_64 eng_;
};

// splitmix64 finalizer; decouples per-trial streams from a base seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace nilcommute
