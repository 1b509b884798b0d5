#include "ample/oracle.hpp"

#include <stdexcept>

namespace ample::oracle {

bool shattered(const SignFamily& L, std::uint64_t A) {
    const int n = L.n();
    // one pattern candidate per map A -> {-1,+1}, realized within A's bits
    for (std::uint64_t p = 0;; p = ((p | ~A) + 1) & A) {
        bool hit = false;
        for (std::uint64_t s : L.members()) {
            bool matches = true;
            for (int e = 0; e < n; ++e) {
                if (!((A >> e) & 1u)) continue;
                if (((s >> e) & 1u) != ((p >> e) & 1u)) {
                    matches = false;
                    break;
                }
            }
            if (matches) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
        if (p == A) break;
    }
    return true;
}

long long shattered_count(const SignFamily& L) {
    if (L.empty()) return 0;
    const std::uint64_t full = L.ground().full_mask();
    long long count = 0;
    for (std::uint64_t A = 0;; ++A) {
        if (shattered(L, A)) ++count;
        if (A == full) break;
    }
    return count;
}

bool is_ample(const SignFamily& L) {
    return static_cast<long long>(L.size()) == shattered_count(L);
}

std::uint64_t count_ample_families(int n) {
    if (n < 0 || n > 4)
        throw std::invalid_argument("oracle enumeration supports n <= 4");
    const std::uint64_t vertices = std::uint64_t{1} << n;
    const GroundSet ground(n);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vertices); ++mask) {
        std::vector<std::uint64_t> members;
        for (std::uint64_t v = 0; v < vertices; ++v)
            if ((mask >> v) & 1u) members.push_back(v);
        if (is_ample(SignFamily(ground, std::move(members)))) ++count;
    }
    return count;
}

}  // namespace ample::oracle
