#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ample/signs.hpp"

namespace ample {

// A set of subsets of E, each stored as a coordinate bit mask. Members are
// deduplicated and kept in ascending encoded order.
class SubsetFamily {
public:
    SubsetFamily() = default;
    explicit SubsetFamily(GroundSet ground);
    SubsetFamily(GroundSet ground, std::vector<std::uint64_t> members);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const std::uint64_t> members() const { return members_; }
    bool contains(std::uint64_t subset) const;

    // characteristic '0'/'1' strings, leftmost character = coordinate 0
    std::vector<std::string> member_strings() const;

    friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
        return a.ground_.size() == b.ground_.size() && a.members_ == b.members_;
    }

private:
    GroundSet ground_;
    std::vector<std::uint64_t> members_;
};

std::string subset_string(int n, std::uint64_t subset);
std::uint64_t parse_subset(std::string_view text);

// L_A: image of L under dropping the coordinates in A (result over E - A,
// coordinates renumbered in increasing original order).
SignFamily project(const SignFamily& L, std::uint64_t A);

// L^A: the t over E - A whose entire A-fiber lies inside L.
SignFamily restrict(const SignFamily& L, std::uint64_t A);

// All subsets A with L_{E-A} = {-1,+1}^A (the sets shattered by L).
SubsetFamily shattered(const SignFamily& L);

// All subsets A with L^A nonempty (the sets strongly shattered by L).
SubsetFamily strongly_shattered(const SignFamily& L);

// Largest cardinality of a shattered set; -1 for the empty family.
int vc_dimension(const SignFamily& L);

struct DressPajorCounts {
    long long lower = 0;   // #strongly_shattered(L)
    long long middle = 0;  // #L
    long long upper = 0;   // #shattered(L)

    friend bool operator==(const DressPajorCounts&, const DressPajorCounts&) = default;
};

// The triple (#X_lower(L), #L, #X_upper(L)). The two inequalities
// lower <= middle <= upper hold for every family; a violation indicates an
// implementation bug and raises std::logic_error.
DressPajorCounts dress_pajor(const SignFamily& L);

}  // namespace ample
