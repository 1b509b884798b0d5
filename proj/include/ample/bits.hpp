#pragma once

#include <bit>
#include <cstdint>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace ample::bits {

// All-ones mask for the n lowest bits (n <= 62).
inline constexpr std::uint64_t mask(int n) {
    return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
}

inline constexpr int popcount(std::uint64_t v) { return std::popcount(v); }

// Gathers the bits of `v` selected by `keep` into the low end, preserving order.
inline std::uint64_t compress(std::uint64_t v, std::uint64_t keep) {
#if defined(__BMI2__)
    return _pext_u64(v, keep);
#else
    std::uint64_t out = 0;
    int j = 0;
    while (keep) {
        const int i = std::countr_zero(keep);
        out |= ((v >> i) & 1u) << j;
        ++j;
        keep &= keep - 1;
    }
    return out;
#endif
}

// Scatters the low bits of `v` into the positions selected by `keep`.
inline std::uint64_t expand(std::uint64_t v, std::uint64_t keep) {
#if defined(__BMI2__)
    return _pdep_u64(v, keep);
#else
    std::uint64_t out = 0;
    int j = 0;
    while (keep) {
        const int i = std::countr_zero(keep);
        out |= ((v >> j) & 1u) << i;
        ++j;
        keep &= keep - 1;
    }
    return out;
#endif
}

// Calls fn(sub) for every subset of `set`, in ascending encoded order.
template <typename Fn>
void for_each_subset_of(std::uint64_t set, Fn&& fn) {
    std::uint64_t sub = 0;
    while (true) {
        fn(sub);
        if (sub == set) break;
        sub = (sub - set) & set;
    }
}

}  // namespace ample::bits
