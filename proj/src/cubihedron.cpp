#include "ample/cubihedron.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ample {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Membership index over a partial family. Dense bitmap keyed by
// (support << n) | signs for small n, hash set otherwise.
class PartialIndex {
public:
    explicit PartialIndex(const PartialFamily& J) : n_(J.n()), dense_(2 * J.n() <= 24) {
        if (dense_) {
            bitmap_.resize(std::size_t{1} << (2 * n_), false);
            ids_.resize(std::size_t{1} << (2 * n_), -1);
            int id = 0;
            for (const auto& t : J.members()) {
                bitmap_[key(t)] = true;
                ids_[key(t)] = id++;
            }
        } else {
            int id = 0;
            for (const auto& t : J.members()) set_[t.support].emplace(t.signs, id++);
        }
    }

    bool contains(const PartialSignVector& t) const {
        if (dense_) return bitmap_[key(t)];
        auto it = set_.find(t.support);
        if (it == set_.end()) return false;
        return it->second.count(t.signs) != 0;
    }

    // Index of t in the family's canonical order; -1 when absent.
    int id(const PartialSignVector& t) const {
        if (dense_) return ids_[key(t)];
        auto it = set_.find(t.support);
        if (it == set_.end()) return -1;
        auto jt = it->second.find(t.signs);
        return jt == it->second.end() ? -1 : jt->second;
    }

private:
    std::uint64_t key(const PartialSignVector& t) const { return (t.support << n_) | t.signs; }

    int n_;
    bool dense_;
    std::vector<bool> bitmap_;
    std::vector<int> ids_;
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, int>> set_;
};

template <typename Visit>
void for_each_grid_neighbor(const PartialSignVector& t, Visit&& visit) {
    const std::uint64_t full = bits::mask(t.n);
    std::uint64_t nz = t.support;
    while (nz) {
        const std::uint64_t bit = nz & (~nz + 1);
        nz &= nz - 1;
        visit(PartialSignVector(t.n, t.support & ~bit, t.signs & ~bit));
    }
    std::uint64_t zeros = ~t.support & full;
    while (zeros) {
        const std::uint64_t bit = zeros & (~zeros + 1);
        zeros &= zeros - 1;
        visit(PartialSignVector(t.n, t.support | bit, t.signs | bit));
        visit(PartialSignVector(t.n, t.support | bit, t.signs));
    }
}

// BFS over the induced grid subgraph, filling dist (indexed by canonical
// member order, -1 = unreached).
void grid_bfs(const PartialFamily& J, const PartialIndex& index, int source,
              std::vector<int>& dist, std::vector<int>& queue) {
    dist.assign(J.size(), -1);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        const int d = dist[cur];
        for_each_grid_neighbor(J.at(cur), [&](const PartialSignVector& nb) {
            const int id = index.id(nb);
            if (id >= 0 && dist[id] < 0) {
                dist[id] = d + 1;
                queue.push_back(id);
            }
        });
    }
}

}  // namespace

FaceComplex barycentric_completion(const SignFamily& L) {
    const int n = L.n();
    const std::uint64_t full = L.ground().full_mask();
    std::vector<PartialSignVector> out;
    if (!L.empty()) {
        // For each candidate support S, a pattern on S is a barycenter iff
        // its whole fiber over the zero coordinates lies in L.
        const bool dense = n <= 20;
        std::vector<std::uint32_t> stamp, count;
        if (dense) {
            stamp.assign(std::size_t{1} << n, 0);
            count.assign(std::size_t{1} << n, 0);
        }
        std::uint32_t epoch = 0;
        for (std::uint64_t S = 0;; ++S) {
            const std::uint64_t need = std::uint64_t{1} << (n - bits::popcount(S));
            if (need <= L.size()) {
                if (dense) {
                    ++epoch;
                    for (std::uint64_t s : L.members()) {
                        const std::uint64_t key = bits::compress(s, S);
                        if (stamp[key] != epoch) {
                            stamp[key] = epoch;
                            count[key] = 0;
                        }
                        if (++count[key] == need)
                            out.emplace_back(n, S, bits::expand(key, S));
                    }
                } else {
                    std::unordered_map<std::uint64_t, std::uint64_t> groups;
                    for (std::uint64_t s : L.members()) {
                        const std::uint64_t key = s & S;
                        if (++groups[key] == need) out.emplace_back(n, S, key);
                    }
                }
            }
            if (S == full) break;
        }
    }
    return FaceComplex{L.ground(), PartialFamily(L.ground(), std::move(out))};
}

PartialFamily cocircuits(const SignFamily& L) {
    return minima(barycentric_completion(L).barycenters);
}

PartialFamily circuits(const SignFamily& L) { return cocircuits(complement(L)); }

std::vector<long long> face_counts(const SignFamily& L, const PartialSignVector& face) {
    require(face.n == L.n(), "ground-set mismatch");
    std::vector<long long> f(static_cast<std::size_t>(L.n()) + 1, 0);
    const PartialFamily baryc = barycentric_completion(L).barycenters;
    for (const auto& t : baryc.members())
        if (precedes(face, t)) ++f[bits::popcount(t.zero_set())];
    return f;
}

long long euler_characteristic(const SignFamily& L, const PartialSignVector& face) {
    long long chi = 0;
    int sign = 1;
    for (long long fi : face_counts(L, face)) {
        chi += sign * fi;
        sign = -sign;
    }
    return chi;
}

std::optional<int> grid_distance(const PartialFamily& J, const PartialSignVector& t,
                                 const PartialSignVector& u) {
    require(t.n == J.n() && u.n == J.n(), "ground-set mismatch");
    PartialIndex index(J);
    const int src = index.id(t);
    const int dst = index.id(u);
    require(src >= 0 && dst >= 0, "endpoints must belong to the family");
    std::vector<int> dist, queue;
    grid_bfs(J, index, src, dist, queue);
    if (dist[dst] < 0) return std::nullopt;
    return dist[dst];
}

bool is_grid_isometric(const PartialFamily& J,
                       std::pair<PartialSignVector, PartialSignVector>* witness) {
    if (J.size() <= 1) return true;
    PartialIndex index(J);
    std::vector<int> dist, queue;
    for (std::size_t i = 0; i < J.size(); ++i) {
        grid_bfs(J, index, static_cast<int>(i), dist, queue);
        for (std::size_t j = i + 1; j < J.size(); ++j) {
            const int want = l1_distance_partial(J.at(i), J.at(j));
            if (dist[j] != want) {
                if (witness) *witness = {J.at(i), J.at(j)};
                return false;
            }
        }
    }
    return true;
}

int complex_dimension(const SignFamily& L) {
    if (L.empty()) return -1;
    const SubsetFamily sshat = strongly_shattered(L);
    int best = 0;
    for (std::uint64_t B : sshat.members()) best = std::max(best, bits::popcount(B));
    return best;
}

bool projected_complex_contains(const SignFamily& L, std::uint64_t A,
                                const PartialSignVector& u) {
    const std::uint64_t full = L.ground().full_mask();
    require((A & ~full) == 0, "A is not a subset of the ground set");
    const std::uint64_t keep = full & ~A;
    require(u.n == L.n() - bits::popcount(A), "ground-set mismatch");

    // F(u) lies in |L|_A iff some fiber set B between the zero set of u and
    // E - A has a full B-fiber in L projecting onto u.
    const std::uint64_t zeros_orig = bits::expand(u.zero_set() & bits::mask(u.n), keep);
    const std::uint64_t signs_orig = bits::expand(u.signs, keep);
    bool found = false;
    bits::for_each_subset_of(keep & ~zeros_orig, [&](std::uint64_t extra) {
        if (found) return;
        const std::uint64_t B = zeros_orig | extra;
        const std::uint64_t need = std::uint64_t{1} << bits::popcount(B);
        if (need > L.size()) return;
        const std::uint64_t target = signs_orig & ~B;
        std::unordered_map<std::uint64_t, std::uint64_t> groups;
        for (std::uint64_t s : L.members()) {
            const std::uint64_t key = s & ~B;
            if (++groups[key] == need && (key & keep & ~B) == target) {
                found = true;
                return;
            }
        }
    });
    return found;
}

ProjectionDims projection_dimensions(const SignFamily& L, std::uint64_t A) {
    const std::uint64_t full = L.ground().full_mask();
    require((A & ~full) == 0, "A is not a subset of the ground set");
    ProjectionDims dims;
    if (L.empty()) return dims;
    const SubsetFamily sshat = strongly_shattered(L);
    dims.projected_complex = 0;
    for (std::uint64_t B : sshat.members())
        if ((B & A) == 0) dims.projected_complex = std::max(dims.projected_complex, bits::popcount(B));
    dims.complex_of_projection = complex_dimension(project(L, A));
    return dims;
}

}  // namespace ample
