#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ample/signs.hpp"

namespace ample {

// One identifier per characterization of ampleness. The first ten follow the
// classic numbering; the rest come from the cubihedron theorems.
enum class Characterization {
    Superisometry,    // L^A isometric for all A
    Superconnectivity,// L^A connected for all A
    IsoRecursive,     // L isometric and L_e, L^e both ample for some e
    ConnRecursive,    // L connected and L^e ample for every e
    Commutativity,    // (L^A)_B = (L_B)^A for disjoint A, B
    Count,            // #L = #shattered(L)  (the canonical definition)
    Sparse,           // #L = #strongly_shattered(L)
    Lopsided,         // every partition (A,B) of E: A in X_(L) or B in X_(L*)
    Euler,            // every face meeting L has alternating f-sum 1
    Asymmetry,        // antipode-closed face intersections are empty or full
    GridIso,          // Baryc(L) isometric in the grid graph
    ScaBaryc,         // Baryc(L) satisfies the signed-circuit axiom
    ScaCocirc,        // Cocirc(L) satisfies the signed-circuit axiom
    ScaCirc,          // Circ(L) satisfies the signed-circuit axiom
    SignconvBaryc,    // Baryc(L) is sign-convex
    ProjDim,          // dim |L|_A = dim |L_A| for all A
    ProjSet,          // |L|_A = |L_A| for all A
};

inline constexpr std::array kAllCharacterizations = {
    Characterization::Superisometry,  Characterization::Superconnectivity,
    Characterization::IsoRecursive,   Characterization::ConnRecursive,
    Characterization::Commutativity,  Characterization::Count,
    Characterization::Sparse,         Characterization::Lopsided,
    Characterization::Euler,          Characterization::Asymmetry,
    Characterization::GridIso,        Characterization::ScaBaryc,
    Characterization::ScaCocirc,      Characterization::ScaCirc,
    Characterization::SignconvBaryc,  Characterization::ProjDim,
    Characterization::ProjSet,
};

std::string_view to_string(Characterization id);
std::optional<Characterization> parse_characterization(std::string_view name);

// Counterexample data for a failed predicate, as ordered key/value pairs
// (subset masks as '0'/'1' strings, vectors as '+'/'-'/'0' strings). The
// first counterexample in the deterministic scan order is reported.
struct Witness {
    std::vector<std::pair<std::string, std::string>> fields;
};

struct CheckResult {
    bool verdict = false;
    std::optional<Witness> witness;
};

struct CharacterizationReport {
    std::string family_digest;
    std::vector<std::pair<Characterization, CheckResult>> results;
    bool agree = false;

    bool verdict(Characterization id) const;
};

// Connectivity and isometricity of the subgraph G(L) of the graphic
// hypercube induced by L (edges between vertices at l1-distance 2). The
// empty and singleton families count as connected and isometric.
bool is_connected(const SignFamily& L, std::pair<SignVector, SignVector>* witness = nullptr);
bool is_isometric(const SignFamily& L, std::pair<SignVector, SignVector>* witness = nullptr);

// #L = #shattered(L). The canonical ampleness test all other
// characterizations are checked against.
bool is_ample(const SignFamily& L);

// Evaluates a single characterization, attaching a witness on failure.
// The recursive characterizations require a nonempty ground set.
CheckResult check(const SignFamily& L, Characterization id);

// Runs the whole battery. `agree` is true iff all verdicts coincide;
// disagreement is reported, never resolved.
CharacterizationReport cross_check(const SignFamily& L);

// Convenience for exhaustive harnesses: whether the given predicates all
// return the same verdict on L.
bool verdicts_agree(const SignFamily& L, std::span<const Characterization> ids);

// Iterates every subset of {-1,+1}^n (n <= 4) and counts those satisfying
// the predicate. jobs = 0 means all available hardware threads.
std::uint64_t enumerate_families(int n, Characterization id, int jobs = 0);

enum class GeneratorKind { Full, Empty, Singleton, Downset, SixCycle, Random };

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

// Deterministic test-family generators. SixCycle requires n = 3; Downset
// and Random consume the seed (mt19937_64).
SignFamily generate(GeneratorKind kind, int n, std::uint64_t seed = 0);

// Canonical FNV-1a digest of (n, members), as a fixed-width hex string.
std::string family_digest(const SignFamily& L);

}  // namespace ample
