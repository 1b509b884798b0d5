#pragma once

#include <string>
#include <vector>

#include "ample/signs.hpp"

namespace test_helpers {

inline ample::SignFamily fam(const std::vector<std::string>& members, int n = -1) {
    if (n < 0) n = members.empty() ? 0 : static_cast<int>(members.front().size());
    std::vector<std::uint64_t> bits;
    for (const auto& m : members) bits.push_back(ample::parse_sign_vector(m).bits);
    return ample::SignFamily(ample::GroundSet(n), std::move(bits));
}

inline ample::PartialFamily pfam(const std::vector<std::string>& members, int n = -1) {
    if (n < 0) n = members.empty() ? 0 : static_cast<int>(members.front().size());
    std::vector<ample::PartialSignVector> vs;
    for (const auto& m : members) vs.push_back(ample::parse_partial_vector(m));
    return ample::PartialFamily(ample::GroundSet(n), std::move(vs));
}

// All of {-1,+1,0}^n in canonical (support, signs) order.
inline std::vector<ample::PartialSignVector> all_partials(int n) {
    std::vector<ample::PartialSignVector> out;
    const std::uint64_t full = ample::bits::mask(n);
    for (std::uint64_t support = 0;; ++support) {
        std::uint64_t signs = 0;
        while (true) {
            out.emplace_back(n, support, signs);
            if (signs == support) break;
            signs = (signs - support) & support;
        }
        if (support == full) break;
    }
    return out;
}

// All sign maps except the two constant ones: an isometric 6-cycle in the 3-cube.
inline ample::SignFamily six_cycle() {
    return ample::SignFamily(ample::GroundSet(3), {1, 2, 3, 4, 5, 6});
}

// The family with vertex v present iff bit v of mask is set.
inline ample::SignFamily family_from_mask(int n, std::uint64_t mask) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
        if ((mask >> v) & 1u) members.push_back(v);
    return ample::SignFamily(ample::GroundSet(n), std::move(members));
}

// The partial family containing element i of all_partials(n) iff bit i of
// mask is set (mask ranges over 2^(3^n) families).
inline ample::PartialFamily partial_family_from_mask(int n, std::uint64_t mask) {
    const auto all = all_partials(n);
    std::vector<ample::PartialSignVector> members;
    for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1u) members.push_back(all[i]);
    return ample::PartialFamily(ample::GroundSet(n), std::move(members));
}

}  // namespace test_helpers
