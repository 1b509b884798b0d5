#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ample/ample.hpp"
#include "ample/cubihedron.hpp"
#include "ample/shatter.hpp"
#include "helpers.hpp"

using namespace ample;
using test_helpers::all_partials;
using test_helpers::fam;
using test_helpers::family_from_mask;
using test_helpers::pfam;
using test_helpers::six_cycle;

namespace {

PartialSignVector pv(const std::string& s) { return parse_partial_vector(s); }

// Definition-shaped barycentric completion: test every t against all of its
// full extensions.
PartialFamily baryc_oracle(const SignFamily& L) {
    std::vector<PartialSignVector> out;
    for (const auto& t : all_partials(L.n())) {
        bool whole_fiber = true;
        bits::for_each_subset_of(t.zero_set(), [&](std::uint64_t z) {
            if (!L.contains(t.signs | z)) whole_fiber = false;
        });
        if (whole_fiber) out.push_back(t);
    }
    return PartialFamily(L.ground(), std::move(out));
}

const std::vector<std::string> kSixCycleEdges = {"+0-", "0+-", "-+0", "-0+", "0-+", "+-0"};

}  // namespace

TEST_CASE("barycentric completion of the six-cycle") {
    const PartialFamily baryc = barycentric_completion(six_cycle()).barycenters;
    CHECK(baryc.size() == 12);
    CHECK(baryc == baryc_oracle(six_cycle()));
    for (const auto& s : kSixCycleEdges) CHECK(baryc.contains(pv(s)));
    for (std::uint64_t v : six_cycle().members())
        CHECK(baryc.contains(PartialSignVector(SignVector(3, v))));
}

TEST_CASE("barycentric completion basics") {
    CHECK(barycentric_completion(generate(GeneratorKind::Full, 2)).barycenters.size() == 9);
    CHECK(barycentric_completion(fam({}, 2)).barycenters.empty());
    // restricted to the full vectors it gives back the family
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const SignFamily L = family_from_mask(n, rng() & bits::mask(1 << n));
        const PartialFamily baryc = barycentric_completion(L).barycenters;
        for (const auto& t : baryc.members())
            if (t.is_full()) CHECK(L.contains(t.signs));
        for (std::uint64_t s : L.members())
            CHECK(baryc.contains(PartialSignVector(SignVector(n, s))));
    }
}

TEST_CASE("barycentric completion is upward closed, n <= 3 exhaustive") {
    for (int n = 0; n <= 3; ++n) {
        for (std::uint64_t mask = 0;; ++mask) {
            const SignFamily L = family_from_mask(n, mask);
            const PartialFamily baryc = barycentric_completion(L).barycenters;
            CHECK(baryc == baryc_oracle(L));
            CHECK(upward_closure(baryc) == baryc);
            CHECK(upward_closure(cocircuits(L)) == baryc);
            if (mask == bits::mask(1 << n)) break;
        }
    }
}

TEST_CASE("cocircuits examples") {
    CHECK(cocircuits(generate(GeneratorKind::Full, 2)) == pfam({"00"}));
    CHECK(cocircuits(six_cycle()) == pfam(kSixCycleEdges));
    CHECK(cocircuits(fam({"+-"})) == pfam({"+-"}));
}

TEST_CASE("circuits examples") {
    CHECK(circuits(six_cycle()) == pfam({"---", "+++"}));
    CHECK(circuits(generate(GeneratorKind::Full, 3)).empty());
    CHECK(circuits(fam({}, 1)) == pfam({"0"}));
}

TEST_CASE("circuit supports of ample families are minimal non-shattered sets") {
    // for ample L, each circuit r has support E - E(r) minimally outside
    // shattered(L), and r is the unique pattern missing from L_{E(r)}
    for (std::uint64_t mask = 0;; ++mask) {
        const SignFamily L = family_from_mask(3, mask);
        if (is_ample(L) && !L.empty()) {
            const SubsetFamily shat = shattered(L);
            for (const auto& r : circuits(L).members()) {
                CHECK_FALSE(shat.contains(r.support));
                bits::for_each_subset_of(r.support, [&](std::uint64_t B) {
                    if (B != r.support) CHECK(shat.contains(B));
                });
                const SignFamily P = project(L, r.zero_set());
                const std::uint64_t missing = bits::compress(r.signs, r.support);
                CHECK_FALSE(P.contains(missing));
                CHECK(P.size() == (std::uint64_t{1} << bits::popcount(r.support)) - 1);
            }
        }
        if (mask == 255) break;
    }
}

TEST_CASE("face counts and euler characteristic") {
    const SignFamily square = generate(GeneratorKind::Full, 2);
    CHECK(face_counts(square, pv("00")) == std::vector<long long>{4, 4, 1});
    CHECK(face_counts(six_cycle(), pv("000")) == std::vector<long long>{6, 6, 0, 0});
    CHECK(face_counts(six_cycle(), pv("+00")) == std::vector<long long>{2, 1, 0, 0});
    CHECK(euler_characteristic(square, pv("00")) == 1);
    CHECK(euler_characteristic(six_cycle(), pv("000")) == 0);
    CHECK(euler_characteristic(six_cycle(), pv("+00")) == 1);
}

TEST_CASE("face counts sum to the barycenter count at the whole cube") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const SignFamily L = family_from_mask(n, rng() & bits::mask(1 << n));
        const auto f = face_counts(L, PartialSignVector(n, 0, 0));
        long long total = 0;
        for (long long fi : f) total += fi;
        CHECK(total ==
              static_cast<long long>(barycentric_completion(L).barycenters.size()));
    }
}

TEST_CASE("grid distance examples") {
    const PartialFamily baryc = barycentric_completion(six_cycle()).barycenters;
    CHECK(grid_distance(baryc, pv("+0-"), pv("-0+")) == 6);
    CHECK(l1_distance_partial(pv("+0-"), pv("-0+")) == 4);
    CHECK(grid_distance(baryc, pv("+0-"), pv("+0-")) == 0);
    const PartialFamily diag = pfam({"--", "++"});
    CHECK_FALSE(grid_distance(diag, pv("--"), pv("++")).has_value());
    CHECK_THROWS_AS(grid_distance(diag, pv("00"), pv("++")), std::invalid_argument);
}

TEST_CASE("grid distance dominates the l1 distance") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto all = all_partials(n);
        std::vector<PartialSignVector> members;
        for (const auto& t : all)
            if (rng() % 2) members.push_back(t);
        if (members.empty()) continue;
        const PartialFamily J(GroundSet(n), members);
        const auto& a = J.at(rng() % J.size());
        const auto& b = J.at(rng() % J.size());
        const auto d = grid_distance(J, a, b);
        if (d) CHECK(*d >= l1_distance_partial(a, b));
    }
}

TEST_CASE("grid isometry examples") {
    CHECK(is_grid_isometric(barycentric_completion(generate(GeneratorKind::Full, 2)).barycenters));
    CHECK_FALSE(is_grid_isometric(barycentric_completion(six_cycle()).barycenters));
    CHECK(is_grid_isometric(pfam({"0-", "00", "0+"})));
    CHECK(is_grid_isometric(pfam({}, 2)));
}

TEST_CASE("complex dimension examples") {
    CHECK(complex_dimension(six_cycle()) == 1);
    CHECK(complex_dimension(generate(GeneratorKind::Full, 3)) == 3);
    CHECK(complex_dimension(fam({"+-"})) == 0);
    CHECK(complex_dimension(fam({}, 2)) == -1);
}

TEST_CASE("projected complex membership") {
    CHECK_FALSE(projected_complex_contains(six_cycle(), parse_subset("001"), pv("00")));
    CHECK(projected_complex_contains(six_cycle(), parse_subset("001"), pv("+0")));
    for (std::uint64_t s : six_cycle().members())
        CHECK(projected_complex_contains(six_cycle(), 0,
                                         PartialSignVector(SignVector(3, s))));
    CHECK_THROWS_AS(projected_complex_contains(six_cycle(), parse_subset("001"), pv("000")),
                    std::invalid_argument);
}

TEST_CASE("projection dimensions") {
    CHECK(projection_dimensions(six_cycle(), parse_subset("001")) == ProjectionDims{1, 2});
    const SignFamily cube = generate(GeneratorKind::Full, 3);
    CHECK(projection_dimensions(cube, parse_subset("010")) == ProjectionDims{2, 2});
    CHECK(projection_dimensions(fam({}, 2), 1) == ProjectionDims{-1, -1});
    const SignFamily down = generate(GeneratorKind::Downset, 3, 7);
    const auto d = projection_dimensions(down, 0);
    CHECK(d.projected_complex == d.complex_of_projection);
}

TEST_CASE("projected dimension never exceeds the projection's dimension") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const SignFamily L = family_from_mask(n, rng() & bits::mask(1 << n));
        const std::uint64_t A = rng() & bits::mask(n);
        const auto d = projection_dimensions(L, A);
        CHECK(d.projected_complex <= d.complex_of_projection);
    }
}
