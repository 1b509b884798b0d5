#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ample/ample.hpp"
#include "ample/convexity.hpp"
#include "ample/cubihedron.hpp"
#include "ample/oracle.hpp"
#include "ample/shatter.hpp"
#include "helpers.hpp"

using namespace ample;
using test_helpers::fam;
using test_helpers::family_from_mask;
using test_helpers::six_cycle;

namespace {

std::string witness_field(const CheckResult& res, const std::string& key) {
    REQUIRE(res.witness.has_value());
    for (const auto& [k, v] : res.witness->fields)
        if (k == key) return v;
    FAIL("missing witness field ", key);
    return {};
}

}  // namespace

TEST_CASE("is_ample basics") {
    CHECK_FALSE(is_ample(six_cycle()));
    CHECK(is_ample(generate(GeneratorKind::Full, 3)));
    CHECK(is_ample(fam({"+-"})));
    CHECK(is_ample(fam({}, 2)));
    CHECK_FALSE(is_ample(fam({"--", "++"})));
}

TEST_CASE("six-cycle witnesses in scan order") {
    const auto conn = check(six_cycle(), Characterization::Superconnectivity);
    CHECK_FALSE(conn.verdict);
    CHECK(witness_field(conn, "A") == "100");

    const auto lop = check(six_cycle(), Characterization::Lopsided);
    CHECK_FALSE(lop.verdict);
    CHECK(witness_field(lop, "A") == "110");
    CHECK(witness_field(lop, "B") == "001");

    const auto asym = check(six_cycle(), Characterization::Asymmetry);
    CHECK_FALSE(asym.verdict);
    CHECK(witness_field(asym, "F") == "000");

    const auto comm = check(six_cycle(), Characterization::Commutativity);
    CHECK_FALSE(comm.verdict);
    CHECK(witness_field(comm, "A") == "110");
    CHECK(witness_field(comm, "B") == "001");

    const auto pdim = check(six_cycle(), Characterization::ProjDim);
    CHECK_FALSE(pdim.verdict);
    CHECK(witness_field(pdim, "A") == "100");

    CHECK(check(generate(GeneratorKind::Full, 2), Characterization::Euler).verdict);
}

TEST_CASE("witnesses are deterministic") {
    for (const auto id : kAllCharacterizations) {
        const auto a = check(six_cycle(), id);
        const auto b = check(six_cycle(), id);
        CHECK(a.verdict == b.verdict);
        REQUIRE(a.witness.has_value() == b.witness.has_value());
        if (a.witness) CHECK(a.witness->fields == b.witness->fields);
    }
}

TEST_CASE("cross check on the running examples") {
    const auto l6 = cross_check(six_cycle());
    CHECK(l6.agree);
    for (const auto& [id, res] : l6.results) CHECK_FALSE(res.verdict);
    CHECK(l6.results.size() == kAllCharacterizations.size());

    const auto cube = cross_check(generate(GeneratorKind::Full, 3));
    CHECK(cube.agree);
    for (const auto& [id, res] : cube.results) CHECK(res.verdict);

    CHECK(l6.family_digest != cube.family_digest);
    CHECK(l6.family_digest == cross_check(six_cycle()).family_digest);
}

TEST_CASE("every characterization agrees with is_ample, n = 2 exhaustive") {
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        const SignFamily L = family_from_mask(2, mask);
        const auto report = cross_check(L);
        CHECK(report.agree);
        CHECK(report.verdict(Characterization::Count) == is_ample(L));
    }
}

TEST_CASE("count and sparse verdicts coincide, n = 3 exhaustive") {
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        const SignFamily L = family_from_mask(3, mask);
        CHECK(check(L, Characterization::Count).verdict ==
              check(L, Characterization::Sparse).verdict);
    }
}

TEST_CASE("ample implies isometric implies connected, n = 3 exhaustive") {
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        const SignFamily L = family_from_mask(3, mask);
        if (is_ample(L)) CHECK(is_isometric(L));
        if (is_isometric(L)) CHECK(is_connected(L));
    }
}

TEST_CASE("connectivity and isometry basics") {
    CHECK(is_connected(six_cycle()));
    CHECK(is_isometric(six_cycle()));
    std::pair<SignVector, SignVector> pair;
    CHECK_FALSE(is_connected(fam({"--", "++"}), &pair));
    CHECK(l1_distance(pair.first, pair.second) == 4);
    CHECK(is_connected(fam({}, 2)));
    CHECK(is_isometric(fam({"+-+"})));
    // the 6-cycle minus a vertex: still connected, no longer isometric
    const SignFamily path = fam({"+--", "++-", "-+-", "-++", "--+"});
    CHECK(is_connected(path));
    CHECK_FALSE(is_isometric(path));
}

TEST_CASE("closure under complement, projection and restriction, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t mask = 0;; ++mask) {
            const SignFamily L = family_from_mask(n, mask);
            if (is_ample(L)) {
                CHECK(is_ample(complement(L)));
                for (std::uint64_t A = 0; A <= bits::mask(n); ++A) {
                    CHECK(is_ample(project(L, A)));
                    CHECK(is_ample(restrict(L, A)));
                }
            }
            if (mask == bits::mask(1 << n)) break;
        }
    }
}

TEST_CASE("enumerate_families counts") {
    CHECK(enumerate_families(1, Characterization::Count) == 4);
    CHECK(enumerate_families(2, Characterization::Count) == 14);
    CHECK(enumerate_families(2, Characterization::ScaCocirc) == 14);
    CHECK(enumerate_families(2, Characterization::GridIso) == 14);
    CHECK(enumerate_families(0, Characterization::Count) == 2);
    CHECK_THROWS_AS(enumerate_families(5, Characterization::Count), std::invalid_argument);
    // jobs split must not change the result
    CHECK(enumerate_families(3, Characterization::Count, 3) ==
          enumerate_families(3, Characterization::Count, 1));
}

TEST_CASE("generators") {
    CHECK(generate(GeneratorKind::SixCycle, 3) == six_cycle());
    CHECK_THROWS_AS(generate(GeneratorKind::SixCycle, 2), std::invalid_argument);
    CHECK(generate(GeneratorKind::Full, 2).size() == 4);
    CHECK(generate(GeneratorKind::Empty, 2).empty());
    CHECK(generate(GeneratorKind::Singleton, 2) == fam({"--"}));
    CHECK(generate(GeneratorKind::Random, 4, 9) == generate(GeneratorKind::Random, 4, 9));
    CHECK(generate(GeneratorKind::Downset, 4, 1) == generate(GeneratorKind::Downset, 4, 1));
}

TEST_CASE("down-closed set families are ample and shatter themselves") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const SignFamily L = generate(GeneratorKind::Downset, n, seed);
        // down-closed: dropping any +1 coordinate stays inside
        for (std::uint64_t s : L.members())
            for (int e = 0; e < n; ++e)
                if ((s >> e) & 1u) CHECK(L.contains(s & ~(std::uint64_t{1} << e)));
        CHECK(is_ample(L));
        // the shattered sets are exactly the members read as subsets
        const SubsetFamily shat = shattered(L);
        CHECK(shat.size() == L.size());
        for (std::uint64_t s : L.members()) CHECK(shat.contains(s));
    }
}

TEST_CASE("cocircuit reconstruction over n = 2") {
    int eligible = 0;
    for (std::uint64_t mask = 0; mask < (1u << 9); ++mask) {
        const PartialFamily J = test_helpers::partial_family_from_mask(2, mask);
        if (!satisfies_sca(J) || !(minima(J) == J)) continue;
        ++eligible;
        const PartialFamily up = upward_closure(J);
        std::vector<std::uint64_t> full;
        for (const auto& t : up.members())
            if (t.is_full()) full.push_back(t.signs);
        const SignFamily L(GroundSet(2), std::move(full));
        CHECK(is_ample(L));
        CHECK(cocircuits(L) == J);
    }
    CHECK(eligible > 1);
}

TEST_CASE("empty ground set families") {
    const SignFamily empty(GroundSet(0));
    const SignFamily point(GroundSet(0), {0});
    CHECK(is_ample(empty));
    CHECK(is_ample(point));
    CHECK(cross_check(empty).agree);
    CHECK(cross_check(point).agree);
    CHECK_THROWS_AS(check(empty, Characterization::IsoRecursive), std::invalid_argument);
    CHECK_THROWS_AS(check(point, Characterization::ConnRecursive), std::invalid_argument);
}

TEST_CASE("characterization names round trip") {
    for (const auto id : kAllCharacterizations)
        CHECK(parse_characterization(to_string(id)) == id);
    CHECK_FALSE(parse_characterization("NOT_AN_ID").has_value());
    CHECK(parse_generator_kind("SIX_CYCLE") == GeneratorKind::SixCycle);
    CHECK_FALSE(parse_generator_kind("six_cycle").has_value());
}

TEST_CASE("naive oracle agrees with the optimized path") {
    for (std::uint64_t mask = 0; mask < 16; ++mask)
        CHECK(oracle::is_ample(family_from_mask(2, mask)) ==
              is_ample(family_from_mask(2, mask)));
    std::mt19937 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const SignFamily L = family_from_mask(3, rng() & 0xff);
        CHECK(oracle::is_ample(L) == is_ample(L));
    }
    CHECK(oracle::count_ample_families(0) == 2);
    CHECK(oracle::count_ample_families(1) == 4);
    CHECK(oracle::count_ample_families(2) == 14);
}
