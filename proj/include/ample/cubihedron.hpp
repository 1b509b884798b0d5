#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ample/shatter.hpp"
#include "ample/signs.hpp"

namespace ample {

// The cube complex of L, stored by the barycenters of its faces. The
// barycenter set is always upward closed under the sign order.
struct FaceComplex {
    GroundSet ground;
    PartialFamily barycenters;
};

// Baryc(L): all t whose full extensions all lie in L, i.e. the barycenters
// of the hypercube faces whose vertex sets are contained in L.
FaceComplex barycentric_completion(const SignFamily& L);

// Cocirc(L) = Min(Baryc(L)): barycenters of the facets (maximal faces).
PartialFamily cocircuits(const SignFamily& L);

// Circ(L) = Cocirc({-1,+1}^E - L): minimal t with no extension inside L.
PartialFamily circuits(const SignFamily& L);

// f-vector of the intersection of |L| with the face F(face): entry i counts
// the faces of |L| of dimension i contained in F(face).
std::vector<long long> face_counts(const SignFamily& L, const PartialSignVector& face);

// Alternating sum of the f-vector above; equals 1 on every nonempty
// intersection exactly for ample L.
long long euler_characteristic(const SignFamily& L, const PartialSignVector& face);

// Shortest-path length between t and u inside the subgraph of the grid
// graph on {-1,+1,0}^E induced by J (unit steps flip one coordinate between
// 0 and +-1). nullopt when t and u are not connected inside J.
std::optional<int> grid_distance(const PartialFamily& J, const PartialSignVector& t,
                                 const PartialSignVector& u);

// Whether every pair of J realizes its l1-distance inside the induced grid
// subgraph. On failure, *witness (if given) receives an offending pair.
bool is_grid_isometric(const PartialFamily& J,
                       std::pair<PartialSignVector, PartialSignVector>* witness = nullptr);

// dim |L| = largest cardinality of a strongly shattered set; -1 when L is empty.
int complex_dimension(const SignFamily& L);

// Whether the face F(u) of the solid cube over E - A lies inside the
// projection |L|_A of the cube complex of L.
bool projected_complex_contains(const SignFamily& L, std::uint64_t A,
                                const PartialSignVector& u);

struct ProjectionDims {
    int projected_complex = -1;  // dim |L|_A
    int complex_of_projection = -1;  // dim |L_A|

    friend bool operator==(const ProjectionDims&, const ProjectionDims&) = default;
};

// dim |L|_A (computed from the fibers of L avoiding A) versus dim |L_A|.
// The first never exceeds the second; equality for all A characterizes
// ample families. Both are -1 for the empty family.
ProjectionDims projection_dimensions(const SignFamily& L, std::uint64_t A);

}  // namespace ample
