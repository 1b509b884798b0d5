#include "ample/signs.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ample {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_same_ground(int a, int b) {
    require(a == b, "ground-set mismatch");
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) {
    require(n >= 0 && n <= kMaxGroundSize, "ground set size out of range");
}

GroundSet::GroundSet(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    require(n >= 0 && n <= kMaxGroundSize, "ground set size out of range");
    require(static_cast<int>(labels_.size()) == n, "label count != ground set size");
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "coordinate labels must be unique");
}

std::string GroundSet::label(int e) const {
    require(e >= 0 && e < n_, "coordinate index out of range");
    if (!labels_.empty()) return labels_[e];
    return "e" + std::to_string(e + 1);
}

GroundSet GroundSet::drop(std::uint64_t removed) const {
    require((removed & ~full_mask()) == 0, "removed coordinates outside ground set");
    const int m = n_ - bits::popcount(removed);
    if (labels_.empty()) return GroundSet(m);
    std::vector<std::string> kept;
    kept.reserve(m);
    for (int e = 0; e < n_; ++e)
        if (!((removed >> e) & 1u)) kept.push_back(labels_[e]);
    return GroundSet(m, std::move(kept));
}

SignVector::SignVector(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
    require(n_ >= 0 && n_ <= kMaxGroundSize, "ground set size out of range");
    require((bits_ & ~bits::mask(n_)) == 0, "sign bits outside ground set");
}

std::string SignVector::str() const {
    std::string out(static_cast<std::size_t>(n), '-');
    for (int e = 0; e < n; ++e)
        if ((bits >> e) & 1u) out[e] = '+';
    return out;
}

PartialSignVector::PartialSignVector(int n_, std::uint64_t support_, std::uint64_t signs_)
    : n(n_), support(support_), signs(signs_ & support_) {
    require(n_ >= 0 && n_ <= kMaxGroundSize, "ground set size out of range");
    require((support_ & ~bits::mask(n_)) == 0, "support outside ground set");
}

std::string PartialSignVector::str() const {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int e = 0; e < n; ++e) {
        if (!((support >> e) & 1u)) continue;
        out[e] = (signs >> e) & 1u ? '+' : '-';
    }
    return out;
}

SignVector parse_sign_vector(std::string_view text) {
    require(text.size() <= kMaxGroundSize, "vector longer than supported ground set");
    std::uint64_t bits = 0;
    for (std::size_t e = 0; e < text.size(); ++e) {
        if (text[e] == '+')
            bits |= std::uint64_t{1} << e;
        else if (text[e] != '-')
            throw std::invalid_argument("illegal character in sign vector (expected '+' or '-')");
    }
    return SignVector(static_cast<int>(text.size()), bits);
}

PartialSignVector parse_partial_vector(std::string_view text) {
    require(text.size() <= kMaxGroundSize, "vector longer than supported ground set");
    std::uint64_t support = 0, signs = 0;
    for (std::size_t e = 0; e < text.size(); ++e) {
        switch (text[e]) {
            case '+': support |= std::uint64_t{1} << e; signs |= std::uint64_t{1} << e; break;
            case '-': support |= std::uint64_t{1} << e; break;
            case '0': break;
            default:
                throw std::invalid_argument(
                    "illegal character in sign vector (expected '+', '-' or '0')");
        }
    }
    return PartialSignVector(static_cast<int>(text.size()), support, signs);
}

SignFamily::SignFamily(GroundSet ground) : ground_(std::move(ground)) {}

SignFamily::SignFamily(GroundSet ground, std::vector<std::uint64_t> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    const std::uint64_t full = ground_.full_mask();
    for (std::uint64_t m : members_) require((m & ~full) == 0, "member outside ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SignFamily::contains(std::uint64_t bits) const {
    return std::binary_search(members_.begin(), members_.end(), bits);
}

bool SignFamily::contains(const SignVector& s) const {
    require_same_ground(s.n, n());
    return contains(s.bits);
}

std::vector<std::string> SignFamily::member_strings() const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (std::uint64_t m : members_) out.push_back(SignVector(n(), m).str());
    return out;
}

PartialFamily::PartialFamily(GroundSet ground) : ground_(std::move(ground)) {}

PartialFamily::PartialFamily(GroundSet ground, std::vector<PartialSignVector> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    for (const auto& t : members_) require_same_ground(t.n, ground_.size());
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PartialFamily::contains(const PartialSignVector& t) const {
    require_same_ground(t.n, n());
    return std::binary_search(members_.begin(), members_.end(), t);
}

std::vector<std::string> PartialFamily::member_strings() const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (const auto& t : members_) out.push_back(t.str());
    return out;
}

int l1_distance(const SignVector& s, const SignVector& t) {
    require_same_ground(s.n, t.n);
    return 2 * bits::popcount(s.bits ^ t.bits);
}

int l1_distance_partial(const PartialSignVector& s, const PartialSignVector& t) {
    require_same_ground(s.n, t.n);
    const std::uint64_t both = s.support & t.support;
    const std::uint64_t one = s.support ^ t.support;
    // opposite nonzero signs contribute 2, a single nonzero contributes 1
    return 2 * bits::popcount(both & (s.signs ^ t.signs)) + bits::popcount(one);
}

bool precedes(const PartialSignVector& t, const PartialSignVector& u) {
    require_same_ground(t.n, u.n);
    if (t.support & ~u.support) return false;
    return ((t.signs ^ u.signs) & t.support) == 0;
}

PartialFamily upward_closure(const PartialFamily& J) {
    const int n = J.n();
    const std::uint64_t full = bits::mask(n);
    // walk the Hasse diagram upward: each step turns one zero into +1 or -1
    std::unordered_set<std::uint64_t> seen;  // key: (support << n) | compressed? no: support,signs packed
    std::vector<PartialSignVector> out;
    std::vector<PartialSignVector> stack;
    auto key = [n](const PartialSignVector& t) {
        return (t.support << n) | t.signs;  // fits: 2n <= 124? n <= 31 when packing in 64 bits
    };
    const bool packable = 2 * n <= 62;
    std::unordered_set<std::string> seen_wide;
    auto insert = [&](const PartialSignVector& t) {
        if (packable) {
            if (!seen.insert(key(t)).second) return false;
        } else {
            std::string k = std::to_string(t.support) + ":" + std::to_string(t.signs);
            if (!seen_wide.insert(std::move(k)).second) return false;
        }
        out.push_back(t);
        return true;
    };
    for (const auto& t : J.members()) {
        if (insert(t)) stack.push_back(t);
    }
    while (!stack.empty()) {
        const PartialSignVector t = stack.back();
        stack.pop_back();
        std::uint64_t zeros = ~t.support & full;
        while (zeros) {
            const std::uint64_t bit = zeros & (~zeros + 1);
            zeros &= zeros - 1;
            PartialSignVector plus(n, t.support | bit, t.signs | bit);
            PartialSignVector minus(n, t.support | bit, t.signs);
            if (insert(plus)) stack.push_back(plus);
            if (insert(minus)) stack.push_back(minus);
        }
    }
    return PartialFamily(J.ground(), std::move(out));
}

PartialFamily minima(const PartialFamily& J) {
    std::vector<PartialSignVector> out;
    for (const auto& t : J.members()) {
        bool minimal = true;
        for (const auto& u : J.members()) {
            if (u != t && precedes(u, t)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(t);
    }
    return PartialFamily(J.ground(), std::move(out));
}

SignFamily complement(const SignFamily& L) {
    const int n = L.n();
    if (n > 28) throw std::invalid_argument("complement: ground set too large to materialize");
    std::vector<std::uint64_t> out;
    out.reserve((std::size_t{1} << n) - L.size());
    auto it = L.members().begin();
    const auto end = L.members().end();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        if (it != end && *it == v) {
            ++it;
            continue;
        }
        out.push_back(v);
    }
    return SignFamily(L.ground(), std::move(out));
}

}  // namespace ample
