#include "ample/shatter.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ample {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Reusable count table indexed by compressed keys, cleared by epoch stamps.
struct KeyCounter {
    std::vector<std::uint32_t> stamp;
    std::vector<std::uint32_t> count;
    std::uint32_t epoch = 0;

    explicit KeyCounter(std::size_t size) : stamp(size, 0), count(size, 0) {}

    void reset() { ++epoch; }

    std::uint32_t bump(std::uint64_t key) {
        if (stamp[key] != epoch) {
            stamp[key] = epoch;
            count[key] = 0;
        }
        return ++count[key];
    }
};

}  // namespace

SubsetFamily::SubsetFamily(GroundSet ground) : ground_(std::move(ground)) {}

SubsetFamily::SubsetFamily(GroundSet ground, std::vector<std::uint64_t> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    const std::uint64_t full = ground_.full_mask();
    for (std::uint64_t m : members_) require((m & ~full) == 0, "subset outside ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SubsetFamily::contains(std::uint64_t subset) const {
    return std::binary_search(members_.begin(), members_.end(), subset);
}

std::vector<std::string> SubsetFamily::member_strings() const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (std::uint64_t m : members_) out.push_back(subset_string(n(), m));
    return out;
}

std::string subset_string(int n, std::uint64_t subset) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int e = 0; e < n; ++e)
        if ((subset >> e) & 1u) out[e] = '1';
    return out;
}

std::uint64_t parse_subset(std::string_view text) {
    if (text.size() > kMaxGroundSize)
        throw std::invalid_argument("subset string longer than supported ground set");
    std::uint64_t out = 0;
    for (std::size_t e = 0; e < text.size(); ++e) {
        if (text[e] == '1')
            out |= std::uint64_t{1} << e;
        else if (text[e] != '0')
            throw std::invalid_argument("illegal character in subset string (expected '0' or '1')");
    }
    return out;
}

SignFamily project(const SignFamily& L, std::uint64_t A) {
    const std::uint64_t full = L.ground().full_mask();
    require((A & ~full) == 0, "A is not a subset of the ground set");
    const std::uint64_t keep = full & ~A;
    std::vector<std::uint64_t> out;
    out.reserve(L.size());
    for (std::uint64_t s : L.members()) out.push_back(bits::compress(s, keep));
    return SignFamily(L.ground().drop(A), std::move(out));
}

SignFamily restrict(const SignFamily& L, std::uint64_t A) {
    const std::uint64_t full = L.ground().full_mask();
    require((A & ~full) == 0, "A is not a subset of the ground set");
    const std::uint64_t keep = full & ~A;
    const int m = L.n() - bits::popcount(A);
    const std::uint32_t fiber = std::uint32_t{1} << bits::popcount(A);
    std::vector<std::uint64_t> out;
    if (m <= 20) {
        std::vector<std::uint32_t> count(std::size_t{1} << m, 0);
        for (std::uint64_t s : L.members()) {
            const std::uint64_t key = bits::compress(s, keep);
            if (++count[key] == fiber) out.push_back(key);
        }
    } else {
        std::unordered_map<std::uint64_t, std::uint32_t> count;
        for (std::uint64_t s : L.members()) {
            const std::uint64_t key = bits::compress(s, keep);
            if (++count[key] == fiber) out.push_back(key);
        }
    }
    return SignFamily(L.ground().drop(A), std::move(out));
}

SubsetFamily shattered(const SignFamily& L) {
    const int n = L.n();
    std::vector<std::uint64_t> out;
    if (L.empty()) return SubsetFamily(L.ground(), std::move(out));
    const std::uint64_t full = L.ground().full_mask();
    if (n <= 20) {
        KeyCounter seen(std::size_t{1} << n);
        for (std::uint64_t A = 0;; ++A) {
            const std::uint32_t need = std::uint32_t{1} << bits::popcount(A);
            if (need <= L.size()) {
                seen.reset();
                std::uint32_t distinct = 0;
                for (std::uint64_t s : L.members()) {
                    const std::uint64_t key = bits::compress(s, A);
                    if (seen.bump(key) == 1 && ++distinct == need) break;
                }
                if (distinct == need) out.push_back(A);
            }
            if (A == full) break;
        }
    } else {
        std::unordered_map<std::uint64_t, char> seen;
        for (std::uint64_t A = 0;; ++A) {
            const std::uint64_t need = std::uint64_t{1} << bits::popcount(A);
            if (need <= L.size()) {
                seen.clear();
                for (std::uint64_t s : L.members()) {
                    seen.emplace(bits::compress(s, A), 0);
                    if (seen.size() == need) break;
                }
                if (seen.size() == need) out.push_back(A);
            }
            if (A == full) break;
        }
    }
    return SubsetFamily(L.ground(), std::move(out));
}

SubsetFamily strongly_shattered(const SignFamily& L) {
    const int n = L.n();
    std::vector<std::uint64_t> out;
    if (L.empty()) return SubsetFamily(L.ground(), std::move(out));
    const std::uint64_t full = L.ground().full_mask();
    if (n <= 20) {
        KeyCounter groups(std::size_t{1} << n);
        for (std::uint64_t A = 0;; ++A) {
            const std::uint32_t need = std::uint32_t{1} << bits::popcount(A);
            if (need <= L.size()) {
                groups.reset();
                const std::uint64_t keep = full & ~A;
                for (std::uint64_t s : L.members()) {
                    if (groups.bump(bits::compress(s, keep)) == need) {
                        out.push_back(A);
                        break;
                    }
                }
            }
            if (A == full) break;
        }
    } else {
        std::unordered_map<std::uint64_t, std::uint64_t> groups;
        for (std::uint64_t A = 0;; ++A) {
            const std::uint64_t need = std::uint64_t{1} << bits::popcount(A);
            if (need <= L.size()) {
                groups.clear();
                const std::uint64_t keep = full & ~A;
                for (std::uint64_t s : L.members()) {
                    if (++groups[bits::compress(s, keep)] == need) {
                        out.push_back(A);
                        break;
                    }
                }
            }
            if (A == full) break;
        }
    }
    return SubsetFamily(L.ground(), std::move(out));
}

int vc_dimension(const SignFamily& L) {
    if (L.empty()) return -1;
    const SubsetFamily shat = shattered(L);
    int best = 0;
    for (std::uint64_t A : shat.members()) best = std::max(best, bits::popcount(A));
    return best;
}

DressPajorCounts dress_pajor(const SignFamily& L) {
    DressPajorCounts c;
    c.lower = static_cast<long long>(strongly_shattered(L).size());
    c.middle = static_cast<long long>(L.size());
    c.upper = static_cast<long long>(shattered(L).size());
    if (!(c.lower <= c.middle && c.middle <= c.upper))
        throw std::logic_error("Dress-Pajor inequality violated: implementation bug");
    return c;
}

}  // namespace ample
