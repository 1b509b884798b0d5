#pragma once

#include <cstdint>

#include "ample/signs.hpp"

// Brute-force reference implementations written straight from the
// definitions, deliberately independent of the optimized code paths. They
// exist to produce expected values for tests and for the CLI `oracle`
// command; do not use them at scale.
namespace ample::oracle {

// Whether every pattern over A occurs among the members restricted to A.
bool shattered(const SignFamily& L, std::uint64_t A);

// Number of shattered subsets of E, by scanning all of them.
long long shattered_count(const SignFamily& L);

// Definition of ampleness: #L equals the number of shattered sets.
bool is_ample(const SignFamily& L);

// Number of ample subsets of {-1,+1}^n, by scanning all families (n <= 4).
std::uint64_t count_ample_families(int n);

}  // namespace ample::oracle
