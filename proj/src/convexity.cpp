#include "ample/convexity.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "ample/cubihedron.hpp"

namespace ample {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

std::uint64_t conflict_mask(const PartialSignVector& a, const PartialSignVector& b) {
    return a.support & b.support & (a.signs ^ b.signs);
}

// t(f) == a(f) or t(f) == b(f) on every nonzero coordinate of t.
bool matches_one_or_zero(const PartialSignVector& t, const PartialSignVector& a,
                         const PartialSignVector& b) {
    const std::uint64_t eq_a = t.support & a.support & ~(t.signs ^ a.signs);
    const std::uint64_t eq_b = t.support & b.support & ~(t.signs ^ b.signs);
    return (t.support & ~(eq_a | eq_b)) == 0;
}

// t(f) in {a(f), b(f)} (exact, zeros included) on every coordinate of `where`.
bool matches_one_exact(const PartialSignVector& t, const PartialSignVector& a,
                       const PartialSignVector& b, std::uint64_t where) {
    const std::uint64_t eq_a = ~((t.support ^ a.support) | (t.signs ^ a.signs));
    const std::uint64_t eq_b = ~((t.support ^ b.support) | (t.signs ^ b.signs));
    return (where & ~(eq_a | eq_b)) == 0;
}

bool l1_between(const PartialSignVector& t, const PartialSignVector& a,
                const PartialSignVector& b) {
    return l1_distance_partial(a, t) + l1_distance_partial(t, b) == l1_distance_partial(a, b);
}

enum class Variant { Sca, SignConvex, ScaBoxed, SignConvexBoxed };

bool elimination_holds(const PartialFamily& J, Variant variant, ScaWitness* witness) {
    const std::uint64_t full = bits::mask(J.n());
    const auto members = J.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto& t1 = members[i];
            const auto& t2 = members[j];
            std::uint64_t conflict = conflict_mask(t1, t2);
            const std::uint64_t agree = full & ~conflict;
            while (conflict) {
                const std::uint64_t ebit = conflict & (~conflict + 1);
                conflict &= conflict - 1;
                bool resolved = false;
                for (const auto& t : members) {
                    if (t.support & ebit) continue;
                    switch (variant) {
                        case Variant::Sca:
                            resolved = matches_one_or_zero(t, t1, t2);
                            break;
                        case Variant::SignConvex:
                            resolved = matches_one_exact(t, t1, t2, agree);
                            break;
                        case Variant::ScaBoxed:
                            resolved = matches_one_or_zero(t, t1, t2) && l1_between(t, t1, t2);
                            break;
                        case Variant::SignConvexBoxed:
                            resolved = matches_one_exact(t, t1, t2, agree) && l1_between(t, t1, t2);
                            break;
                    }
                    if (resolved) break;
                }
                if (!resolved) {
                    if (witness) *witness = {t1, t2, std::countr_zero(ebit)};
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

PointCloud::PointCloud(GroundSet ground) : ground_(std::move(ground)) {}

PointCloud::PointCloud(GroundSet ground, std::vector<std::vector<double>> points)
    : ground_(std::move(ground)), points_(std::move(points)) {
    for (const auto& p : points_) {
        require(static_cast<int>(p.size()) == ground_.size(),
                "point dimension != ground set size");
        for (double x : p) require(std::isfinite(x), "point coordinates must be finite");
    }
}

PartialSignVector sign_of_point(const std::vector<double>& point, double tolerance) {
    if (point.size() > static_cast<std::size_t>(kMaxGroundSize))
        throw std::invalid_argument("point dimension out of range");
    std::uint64_t support = 0, signs = 0;
    for (std::size_t e = 0; e < point.size(); ++e) {
        const double x = point[e];
        require(std::isfinite(x), "point coordinates must be finite");
        if (std::abs(x) <= tolerance) continue;
        support |= std::uint64_t{1} << e;
        if (x > 0) signs |= std::uint64_t{1} << e;
    }
    return PartialSignVector(static_cast<int>(point.size()), support, signs);
}

SignFamily orthant_pattern(const PointCloud& K, double tolerance) {
    const std::uint64_t full = K.ground().full_mask();
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : K.points()) {
        const PartialSignVector t = sign_of_point(p, tolerance);
        // every completion of the zero coordinates gives an orthant meeting p
        bits::for_each_subset_of(~t.support & full,
                                 [&](std::uint64_t zs) { seen.insert(t.signs | zs); });
    }
    return SignFamily(K.ground(), std::vector<std::uint64_t>(seen.begin(), seen.end()));
}

PartialFamily region_pattern(const PointCloud& K, double tolerance) {
    std::vector<PartialSignVector> out;
    out.reserve(K.size());
    for (const auto& p : K.points()) out.push_back(sign_of_point(p, tolerance));
    return PartialFamily(K.ground(), std::move(out));
}

bool satisfies_sca(const PartialFamily& J, ScaWitness* witness) {
    return elimination_holds(J, Variant::Sca, witness);
}

bool is_sign_convex(const PartialFamily& J, ScaWitness* witness) {
    return elimination_holds(J, Variant::SignConvex, witness);
}

ConvexityReport upward_closed_convexity_report(const PartialFamily& J) {
    require(upward_closure(J).size() == J.size(), "family is not upward closed");
    ConvexityReport report;
    report.sign_convex = elimination_holds(J, Variant::SignConvex, nullptr);
    report.sign_convex_boxed = elimination_holds(J, Variant::SignConvexBoxed, nullptr);
    report.zero_convex = elimination_holds(J, Variant::Sca, nullptr);
    report.zero_convex_boxed = elimination_holds(J, Variant::ScaBoxed, nullptr);
    return report;
}

SignFamily orthant_pattern_of_complex(const SignFamily& L) {
    const PartialFamily up = upward_closure(barycentric_completion(L).barycenters);
    const std::uint64_t full = L.ground().full_mask();
    std::vector<std::uint64_t> out;
    for (const auto& t : up.members())
        if (t.support == full) out.push_back(t.signs);
    return SignFamily(L.ground(), std::move(out));
}

}  // namespace ample
