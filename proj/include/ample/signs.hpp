#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ample/bits.hpp"

namespace ample {

// Largest supported ground set: coordinates and coordinate subsets must fit
// in a single machine word with room to spare.
inline constexpr int kMaxGroundSize = 62;

// The index set E of coordinates. Labels are cosmetic ("e1".."en" unless
// given); the structural identity of a ground set is its cardinality.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(int n);
    GroundSet(int n, std::vector<std::string> labels);

    int size() const { return n_; }
    std::uint64_t full_mask() const { return bits::mask(n_); }
    std::string label(int e) const;
    bool has_custom_labels() const { return !labels_.empty(); }

    // Ground set of E - removed, keeping the surviving labels in order.
    GroundSet drop(std::uint64_t removed) const;

    bool compatible(const GroundSet& other) const { return n_ == other.n_; }

private:
    int n_ = 0;
    std::vector<std::string> labels_;  // empty => default labels
};

// A vertex of the hypercube: a full sign map in {-1,+1}^E.
// Bit e set <=> coordinate e is +1.
struct SignVector {
    int n = 0;
    std::uint64_t bits = 0;

    SignVector() = default;
    SignVector(int n_, std::uint64_t bits_);

    int sign(int e) const { return (bits >> e) & 1u ? +1 : -1; }
    std::string str() const;

    friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

// A sign map in {-1,+1,0}^E; the barycenter of a face of the hypercube.
// `support` marks the nonzero coordinates, `signs` their values (bit set
// <=> +1). Canonical form keeps signs zero outside the support.
struct PartialSignVector {
    int n = 0;
    std::uint64_t support = 0;
    std::uint64_t signs = 0;

    PartialSignVector() = default;
    PartialSignVector(int n_, std::uint64_t support_, std::uint64_t signs_);
    explicit PartialSignVector(const SignVector& s)
        : n(s.n), support(bits::mask(s.n)), signs(s.bits) {}

    int sign(int e) const {
        if (!((support >> e) & 1u)) return 0;
        return (signs >> e) & 1u ? +1 : -1;
    }
    std::uint64_t zero_set() const { return ~support & bits::mask(n); }
    bool is_full() const { return support == bits::mask(n); }
    // Only valid when is_full().
    SignVector as_full() const { return SignVector(n, signs); }
    std::string str() const;

    friend auto operator<=>(const PartialSignVector&, const PartialSignVector&) = default;
};

// Parsing of single vectors from '+'/'-'/'0' strings (leftmost character is
// coordinate 0). Throws std::invalid_argument on bad characters; the family
// file parser in io.hpp wraps these with line numbers.
SignVector parse_sign_vector(std::string_view text);
PartialSignVector parse_partial_vector(std::string_view text);

// A finite subset L of {-1,+1}^E. Members are stored deduplicated in
// ascending encoding order (the canonical order).
class SignFamily {
public:
    SignFamily() = default;
    explicit SignFamily(GroundSet ground);
    SignFamily(GroundSet ground, std::vector<std::uint64_t> members);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const std::uint64_t> members() const { return members_; }
    SignVector at(std::size_t i) const { return SignVector(n(), members_[i]); }
    bool contains(std::uint64_t bits) const;
    bool contains(const SignVector& s) const;

    std::vector<std::string> member_strings() const;

    friend bool operator==(const SignFamily& a, const SignFamily& b) {
        return a.ground_.size() == b.ground_.size() && a.members_ == b.members_;
    }

private:
    GroundSet ground_;
    std::vector<std::uint64_t> members_;
};

// A finite subset J of {-1,+1,0}^E. Members deduplicated in canonical
// (support, signs) ascending order.
class PartialFamily {
public:
    PartialFamily() = default;
    explicit PartialFamily(GroundSet ground);
    PartialFamily(GroundSet ground, std::vector<PartialSignVector> members);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const PartialSignVector> members() const { return members_; }
    const PartialSignVector& at(std::size_t i) const { return members_[i]; }
    bool contains(const PartialSignVector& t) const;

    std::vector<std::string> member_strings() const;

    friend bool operator==(const PartialFamily& a, const PartialFamily& b) {
        return a.ground_.size() == b.ground_.size() && a.members_ == b.members_;
    }

private:
    GroundSet ground_;
    std::vector<PartialSignVector> members_;
};

// l1-distance between hypercube vertices: 2 * #{coordinates that differ}.
int l1_distance(const SignVector& s, const SignVector& t);

// l1-distance between barycenters: per-coordinate |s(e) - t(e)| in {0,1,2}.
int l1_distance_partial(const PartialSignVector& s, const PartialSignVector& t);

// The sign order: t precedes u iff t(e) in {0, u(e)} for every e.
// Equivalently, face F(u) is contained in face F(t).
bool precedes(const PartialSignVector& t, const PartialSignVector& u);

// Everything above some member of J: { u : t precedes u for some t in J }.
PartialFamily upward_closure(const PartialFamily& J);

// Members of J with nothing strictly below them in J. Min(J) = Min(up(J)).
PartialFamily minima(const PartialFamily& J);

// {-1,+1}^E minus L.
SignFamily complement(const SignFamily& L);

}  // namespace ample
