#pragma once

#include <vector>

#include "ample/signs.hpp"

namespace ample {

// Coordinates with magnitude at most this snap to sign 0 unless overridden.
inline constexpr double kDefaultZeroTolerance = 1e-9;

// A finite set of points of R^E.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(GroundSet ground);
    PointCloud(GroundSet ground, std::vector<std::vector<double>> points);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    std::size_t size() const { return points_.size(); }
    const std::vector<std::vector<double>>& points() const { return points_; }

private:
    GroundSet ground_;
    std::vector<std::vector<double>> points_;
};

// Coordinatewise sign of a point, with |x| <= tolerance treated as zero.
PartialSignVector sign_of_point(const std::vector<double>& point,
                                double tolerance = kDefaultZeroTolerance);

// L(K): the closed orthants of R^E meeting K, as full sign vectors.
SignFamily orthant_pattern(const PointCloud& K, double tolerance = kDefaultZeroTolerance);

// J(K): the sign vectors of the arrangement regions meeting K.
PartialFamily region_pattern(const PointCloud& K, double tolerance = kDefaultZeroTolerance);

struct ScaWitness {
    PartialSignVector t1, t2;
    int e = -1;
};

// 0-convexity / the signed-circuit axiom: every opposition at a coordinate e
// is resolved by some member vanishing at e whose every coordinate lies in
// {0, t1(f), t2(f)}.
bool satisfies_sca(const PartialFamily& J, ScaWitness* witness = nullptr);

// Sign-convexity: as above, but on coordinates where t1 and t2 do not
// conflict the resolver must match one of them exactly (no extra zeros).
bool is_sign_convex(const PartialFamily& J, ScaWitness* witness = nullptr);

struct ConvexityReport {
    bool sign_convex = false;        // (i)
    bool sign_convex_boxed = false;  // (i') resolver also l1-between
    bool zero_convex = false;        // (ii) the signed-circuit axiom
    bool zero_convex_boxed = false;  // (ii') resolver also l1-between

    bool all_agree() const {
        return sign_convex == sign_convex_boxed && sign_convex == zero_convex &&
               sign_convex == zero_convex_boxed;
    }
};

// Evaluates the four equivalent convexity conditions for an upward closed
// family, each independently. Throws std::invalid_argument when J is not
// upward closed.
ConvexityReport upward_closed_convexity_report(const PartialFamily& J);

// L(|L|): the orthant pattern of the cube complex of L, computed as the
// full sign vectors above some barycenter. Equals L for every family.
SignFamily orthant_pattern_of_complex(const SignFamily& L);

}  // namespace ample
