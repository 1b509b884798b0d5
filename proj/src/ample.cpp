#include "ample/ample.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "ample/convexity.hpp"
#include "ample/cubihedron.hpp"
#include "ample/shatter.hpp"

namespace ample {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

constexpr std::array<std::string_view, kAllCharacterizations.size()> kIdNames = {
    "SUPERISOMETRY", "SUPERCONNECTIVITY", "ISO_RECURSIVE", "CONN_RECURSIVE",
    "COMMUTATIVITY", "COUNT",             "SPARSE",        "LOPSIDED",
    "EULER",         "ASYMMETRY",         "GRID_ISO",      "SCA_BARYC",
    "SCA_COCIRC",    "SCA_CIRC",          "SIGNCONV_BARYC", "PROJ_DIM",
    "PROJ_SET",
};

// Vertex ids for BFS over G(L); dense table for small n.
class VertexIndex {
public:
    explicit VertexIndex(const SignFamily& L) : dense_(L.n() <= 20) {
        if (dense_) {
            ids_.assign(std::size_t{1} << L.n(), -1);
            int id = 0;
            for (std::uint64_t s : L.members()) ids_[s] = id++;
        } else {
            int id = 0;
            for (std::uint64_t s : L.members()) map_.emplace(s, id++);
        }
    }

    int id(std::uint64_t s) const {
        if (dense_) return ids_[s];
        auto it = map_.find(s);
        return it == map_.end() ? -1 : it->second;
    }

private:
    bool dense_;
    std::vector<int> ids_;
    std::unordered_map<std::uint64_t, int> map_;
};

void vertex_bfs(const SignFamily& L, const VertexIndex& index, int source,
                std::vector<int>& dist, std::vector<int>& queue) {
    dist.assign(L.size(), -1);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    const int n = L.n();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        const std::uint64_t s = L.members()[cur];
        for (int e = 0; e < n; ++e) {
            const int nb = index.id(s ^ (std::uint64_t{1} << e));
            if (nb >= 0 && dist[nb] < 0) {
                dist[nb] = dist[cur] + 1;
                queue.push_back(nb);
            }
        }
    }
}

// Lazily computed per-family artifacts shared by the predicates.
struct Ctx {
    const SignFamily& L;
    std::optional<PartialFamily> baryc_, cocirc_, circ_;
    std::optional<SubsetFamily> shat_, sshat_, sshat_star_;

    explicit Ctx(const SignFamily& fam) : L(fam) {}

    const PartialFamily& baryc() {
        if (!baryc_) baryc_ = barycentric_completion(L).barycenters;
        return *baryc_;
    }
    const PartialFamily& cocirc() {
        if (!cocirc_) cocirc_ = minima(baryc());
        return *cocirc_;
    }
    const PartialFamily& circ() {
        if (!circ_) circ_ = circuits(L);
        return *circ_;
    }
    const SubsetFamily& shat() {
        if (!shat_) shat_ = shattered(L);
        return *shat_;
    }
    const SubsetFamily& sshat() {
        if (!sshat_) sshat_ = strongly_shattered(L);
        return *sshat_;
    }
    const SubsetFamily& sshat_star() {
        if (!sshat_star_) sshat_star_ = strongly_shattered(complement(L));
        return *sshat_star_;
    }
};

Witness subset_witness(int n, std::initializer_list<std::pair<const char*, std::uint64_t>> subsets) {
    Witness w;
    for (const auto& [key, mask] : subsets) w.fields.emplace_back(key, subset_string(n, mask));
    return w;
}

CheckResult fail(Witness w) { return CheckResult{false, std::move(w)}; }
CheckResult pass() { return CheckResult{true, std::nullopt}; }

CheckResult check_superisometry(Ctx& ctx) {
    const std::uint64_t full = ctx.L.ground().full_mask();
    for (std::uint64_t A = 0;; ++A) {
        const SignFamily F = restrict(ctx.L, A);
        std::pair<SignVector, SignVector> pair;
        if (!is_isometric(F, &pair)) {
            Witness w = subset_witness(ctx.L.n(), {{"A", A}});
            w.fields.emplace_back("s1", pair.first.str());
            w.fields.emplace_back("s2", pair.second.str());
            return fail(std::move(w));
        }
        if (A == full) break;
    }
    return pass();
}

CheckResult check_superconnectivity(Ctx& ctx) {
    const std::uint64_t full = ctx.L.ground().full_mask();
    for (std::uint64_t A = 0;; ++A) {
        const SignFamily F = restrict(ctx.L, A);
        std::pair<SignVector, SignVector> pair;
        if (!is_connected(F, &pair)) {
            Witness w = subset_witness(ctx.L.n(), {{"A", A}});
            w.fields.emplace_back("s1", pair.first.str());
            w.fields.emplace_back("s2", pair.second.str());
            return fail(std::move(w));
        }
        if (A == full) break;
    }
    return pass();
}

bool iso_recursive(const SignFamily& L) {
    if (L.n() == 0) return true;
    if (!is_isometric(L)) return false;
    for (int e = 0; e < L.n(); ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (iso_recursive(project(L, bit)) && iso_recursive(restrict(L, bit))) return true;
    }
    return false;
}

bool conn_recursive(const SignFamily& L) {
    if (L.n() == 0) return true;
    if (!is_connected(L)) return false;
    for (int e = 0; e < L.n(); ++e)
        if (!conn_recursive(restrict(L, std::uint64_t{1} << e))) return false;
    return true;
}

CheckResult check_iso_recursive(Ctx& ctx) {
    std::pair<SignVector, SignVector> pair;
    if (!is_isometric(ctx.L, &pair)) {
        Witness w;
        w.fields.emplace_back("s1", pair.first.str());
        w.fields.emplace_back("s2", pair.second.str());
        return fail(std::move(w));
    }
    for (int e = 0; e < ctx.L.n(); ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (iso_recursive(project(ctx.L, bit)) && iso_recursive(restrict(ctx.L, bit)))
            return pass();
    }
    Witness w;
    w.fields.emplace_back("note", "isometric, but no coordinate splits into two ample parts");
    return fail(std::move(w));
}

CheckResult check_conn_recursive(Ctx& ctx) {
    std::pair<SignVector, SignVector> pair;
    if (!is_connected(ctx.L, &pair)) {
        Witness w;
        w.fields.emplace_back("s1", pair.first.str());
        w.fields.emplace_back("s2", pair.second.str());
        return fail(std::move(w));
    }
    for (int e = 0; e < ctx.L.n(); ++e) {
        if (!conn_recursive(restrict(ctx.L, std::uint64_t{1} << e))) {
            Witness w;
            w.fields.emplace_back("e", ctx.L.ground().label(e));
            return fail(std::move(w));
        }
    }
    return pass();
}

CheckResult check_commutativity(Ctx& ctx) {
    const std::uint64_t full = ctx.L.ground().full_mask();
    for (std::uint64_t A = 0;; ++A) {
        const SignFamily LA = restrict(ctx.L, A);
        const std::uint64_t rest = full & ~A;
        bool bad = false;
        std::uint64_t badB = 0;
        bits::for_each_subset_of(rest, [&](std::uint64_t B) {
            if (bad) return;
            const SignFamily lhs = project(LA, bits::compress(B, full & ~A));
            const SignFamily rhs = restrict(project(ctx.L, B), bits::compress(A, full & ~B));
            if (!(lhs == rhs)) {
                bad = true;
                badB = B;
            }
        });
        if (bad) return fail(subset_witness(ctx.L.n(), {{"A", A}, {"B", badB}}));
        if (A == full) break;
    }
    return pass();
}

CheckResult check_count(Ctx& ctx) {
    if (ctx.L.size() == ctx.shat().size()) return pass();
    Witness w;
    w.fields.emplace_back("members", std::to_string(ctx.L.size()));
    w.fields.emplace_back("shattered", std::to_string(ctx.shat().size()));
    return fail(std::move(w));
}

CheckResult check_sparse(Ctx& ctx) {
    if (ctx.L.size() == ctx.sshat().size()) return pass();
    Witness w;
    w.fields.emplace_back("members", std::to_string(ctx.L.size()));
    w.fields.emplace_back("strongly_shattered", std::to_string(ctx.sshat().size()));
    return fail(std::move(w));
}

CheckResult check_lopsided(Ctx& ctx) {
    const std::uint64_t full = ctx.L.ground().full_mask();
    for (std::uint64_t A = 0;; ++A) {
        const std::uint64_t B = full & ~A;
        if (!ctx.sshat().contains(A) && !ctx.sshat_star().contains(B))
            return fail(subset_witness(ctx.L.n(), {{"A", A}, {"B", B}}));
        if (A == full) break;
    }
    return pass();
}

// Faces of the solid cube in scan order: support mask ascending, then signs.
template <typename Fn>
void for_each_face(int n, Fn&& fn) {
    const std::uint64_t full = bits::mask(n);
    for (std::uint64_t S = 0;; ++S) {
        bool stop = false;
        bits::for_each_subset_of(S, [&](std::uint64_t sig) {
            if (!stop && fn(PartialSignVector(n, S, sig))) stop = true;
        });
        if (stop || S == full) break;
    }
}

CheckResult check_euler(Ctx& ctx) {
    const auto& baryc = ctx.baryc();
    const std::uint64_t full = ctx.L.ground().full_mask();
    CheckResult result = pass();
    for_each_face(ctx.L.n(), [&](const PartialSignVector& face) {
        long long chi = 0;
        long long vertices = 0;
        for (const auto& t : baryc.members()) {
            if (!precedes(face, t)) continue;
            const int dim = bits::popcount(t.zero_set());
            chi += (dim % 2 == 0) ? 1 : -1;
            if (t.support == full) ++vertices;
        }
        if (vertices > 0 && chi != 1) {
            Witness w;
            w.fields.emplace_back("F", face.str());
            w.fields.emplace_back("chi", std::to_string(chi));
            result = fail(std::move(w));
            return true;
        }
        return false;
    });
    return result;
}

CheckResult check_asymmetry(Ctx& ctx) {
    const std::uint64_t full = ctx.L.ground().full_mask();
    CheckResult result = pass();
    for_each_face(ctx.L.n(), [&](const PartialSignVector& face) {
        const std::uint64_t zmask = face.zero_set();
        long long inside = 0;
        bool closed = true;
        for (std::uint64_t s : ctx.L.members()) {
            if ((s & face.support) != face.signs) continue;
            ++inside;
            if (!ctx.L.contains(s ^ zmask)) closed = false;
        }
        if (inside > 0 && closed &&
            inside != (std::int64_t{1} << bits::popcount(zmask))) {
            Witness w;
            w.fields.emplace_back("F", face.str());
            result = fail(std::move(w));
            return true;
        }
        return false;
    });
    return result;
}

CheckResult check_grid_iso(Ctx& ctx) {
    std::pair<PartialSignVector, PartialSignVector> pair;
    if (is_grid_isometric(ctx.baryc(), &pair)) return pass();
    Witness w;
    w.fields.emplace_back("t1", pair.first.str());
    w.fields.emplace_back("t2", pair.second.str());
    return fail(std::move(w));
}

CheckResult check_sca(Ctx& ctx, const PartialFamily& J) {
    ScaWitness sw;
    if (satisfies_sca(J, &sw)) return pass();
    Witness w;
    w.fields.emplace_back("t1", sw.t1.str());
    w.fields.emplace_back("t2", sw.t2.str());
    w.fields.emplace_back("e", ctx.L.ground().label(sw.e));
    return fail(std::move(w));
}

CheckResult check_signconv_baryc(Ctx& ctx) {
    ScaWitness sw;
    if (is_sign_convex(ctx.baryc(), &sw)) return pass();
    Witness w;
    w.fields.emplace_back("t1", sw.t1.str());
    w.fields.emplace_back("t2", sw.t2.str());
    w.fields.emplace_back("e", ctx.L.ground().label(sw.e));
    return fail(std::move(w));
}

CheckResult check_proj_dim(Ctx& ctx) {
    const std::uint64_t full = ctx.L.ground().full_mask();
    for (std::uint64_t A = 0;; ++A) {
        const ProjectionDims dims = projection_dimensions(ctx.L, A);
        if (dims.projected_complex != dims.complex_of_projection) {
            Witness w = subset_witness(ctx.L.n(), {{"A", A}});
            w.fields.emplace_back("dim_projected_complex", std::to_string(dims.projected_complex));
            w.fields.emplace_back("dim_complex_of_projection",
                                  std::to_string(dims.complex_of_projection));
            return fail(std::move(w));
        }
        if (A == full) break;
    }
    return pass();
}

CheckResult check_proj_set(Ctx& ctx) {
    const std::uint64_t full = ctx.L.ground().full_mask();
    for (std::uint64_t A = 0;; ++A) {
        const PartialFamily target = barycentric_completion(project(ctx.L, A)).barycenters;
        const int m = ctx.L.n() - bits::popcount(A);
        CheckResult result = pass();
        for_each_face(m, [&](const PartialSignVector& u) {
            if (projected_complex_contains(ctx.L, A, u) != target.contains(u)) {
                Witness w = subset_witness(ctx.L.n(), {{"A", A}});
                w.fields.emplace_back("u", u.str());
                result = fail(std::move(w));
                return true;
            }
            return false;
        });
        if (!result.verdict) return result;
        if (A == full) break;
    }
    return pass();
}

CheckResult check_impl(Ctx& ctx, Characterization id) {
    switch (id) {
        case Characterization::Superisometry: return check_superisometry(ctx);
        case Characterization::Superconnectivity: return check_superconnectivity(ctx);
        case Characterization::IsoRecursive: return check_iso_recursive(ctx);
        case Characterization::ConnRecursive: return check_conn_recursive(ctx);
        case Characterization::Commutativity: return check_commutativity(ctx);
        case Characterization::Count: return check_count(ctx);
        case Characterization::Sparse: return check_sparse(ctx);
        case Characterization::Lopsided: return check_lopsided(ctx);
        case Characterization::Euler: return check_euler(ctx);
        case Characterization::Asymmetry: return check_asymmetry(ctx);
        case Characterization::GridIso: return check_grid_iso(ctx);
        case Characterization::ScaBaryc: return check_sca(ctx, ctx.baryc());
        case Characterization::ScaCocirc: return check_sca(ctx, ctx.cocirc());
        case Characterization::ScaCirc: return check_sca(ctx, ctx.circ());
        case Characterization::SignconvBaryc: return check_signconv_baryc(ctx);
        case Characterization::ProjDim: return check_proj_dim(ctx);
        case Characterization::ProjSet: return check_proj_set(ctx);
    }
    throw std::invalid_argument("unknown characterization id");
}

bool requires_nonempty_ground(Characterization id) {
    return id == Characterization::IsoRecursive || id == Characterization::ConnRecursive;
}

}  // namespace

std::string_view to_string(Characterization id) {
    return kIdNames[static_cast<std::size_t>(id)];
}

std::optional<Characterization> parse_characterization(std::string_view name) {
    for (std::size_t i = 0; i < kIdNames.size(); ++i)
        if (kIdNames[i] == name) return kAllCharacterizations[i];
    return std::nullopt;
}

bool CharacterizationReport::verdict(Characterization id) const {
    for (const auto& [rid, res] : results)
        if (rid == id) return res.verdict;
    throw std::invalid_argument("characterization not present in report");
}

bool is_connected(const SignFamily& L, std::pair<SignVector, SignVector>* witness) {
    if (L.size() <= 1) return true;
    VertexIndex index(L);
    std::vector<int> dist, queue;
    vertex_bfs(L, index, 0, dist, queue);
    for (std::size_t j = 1; j < L.size(); ++j) {
        if (dist[j] < 0) {
            if (witness) *witness = {L.at(0), L.at(j)};
            return false;
        }
    }
    return true;
}

bool is_isometric(const SignFamily& L, std::pair<SignVector, SignVector>* witness) {
    if (L.size() <= 1) return true;
    VertexIndex index(L);
    std::vector<int> dist, queue;
    for (std::size_t i = 0; i < L.size(); ++i) {
        vertex_bfs(L, index, static_cast<int>(i), dist, queue);
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            const int want = bits::popcount(L.members()[i] ^ L.members()[j]);
            if (dist[j] != want) {
                if (witness) *witness = {L.at(i), L.at(j)};
                return false;
            }
        }
    }
    return true;
}

bool is_ample(const SignFamily& L) { return L.size() == shattered(L).size(); }

CheckResult check(const SignFamily& L, Characterization id) {
    require(!(requires_nonempty_ground(id) && L.n() == 0),
            "recursive characterizations require n >= 1");
    Ctx ctx(L);
    return check_impl(ctx, id);
}

CharacterizationReport cross_check(const SignFamily& L) {
    CharacterizationReport report;
    report.family_digest = family_digest(L);
    Ctx ctx(L);
    for (Characterization id : kAllCharacterizations) {
        if (requires_nonempty_ground(id) && L.n() == 0) continue;
        report.results.emplace_back(id, check_impl(ctx, id));
    }
    report.agree = true;
    for (const auto& [id, res] : report.results)
        if (res.verdict != report.results.front().second.verdict) report.agree = false;
    return report;
}

bool verdicts_agree(const SignFamily& L, std::span<const Characterization> ids) {
    if (ids.empty()) return true;
    Ctx ctx(L);
    const bool first = check_impl(ctx, ids.front()).verdict;
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (check_impl(ctx, ids[i]).verdict != first) return false;
    return true;
}

std::uint64_t enumerate_families(int n, Characterization id, int jobs) {
    require(n >= 0 && n <= 4,
            "exhaustive enumeration supports n <= 4; use RANDOM sampling beyond");
    const std::uint64_t vertices = std::uint64_t{1} << n;
    const std::uint64_t total = std::uint64_t{1} << vertices;
    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
    workers = static_cast<int>(std::min<std::uint64_t>(workers, total));

    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t count = 0;
        const GroundSet ground(n);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            std::vector<std::uint64_t> members;
            members.reserve(static_cast<std::size_t>(std::popcount(mask)));
            for (std::uint64_t v = 0; v < vertices; ++v)
                if ((mask >> v) & 1u) members.push_back(v);
            SignFamily F(ground, std::move(members));
            Ctx ctx(F);
            if (check_impl(ctx, id).verdict) ++count;
        }
        return count;
    };

    if (workers == 1) return count_range(0, total);

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = chunk * w;
        const std::uint64_t end = std::min(total, begin + chunk);
        threads.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
    }
    for (auto& t : threads) t.join();
    std::uint64_t count = 0;
    for (std::uint64_t c : partial) count += c;
    return count;
}

constexpr std::array<std::string_view, 6> kKindNames = {
    "FULL", "EMPTY", "SINGLETON", "DOWNSET", "SIX_CYCLE", "RANDOM",
};

std::string_view to_string(GeneratorKind kind) {
    return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (kKindNames[i] == name) return static_cast<GeneratorKind>(i);
    return std::nullopt;
}

SignFamily generate(GeneratorKind kind, int n, std::uint64_t seed) {
    require(n >= 0 && n <= kMaxGroundSize, "ground set size out of range");
    const GroundSet ground(n);
    switch (kind) {
        case GeneratorKind::Full: {
            require(n <= 28, "FULL: ground set too large to materialize");
            std::vector<std::uint64_t> members(std::size_t{1} << n);
            for (std::uint64_t v = 0; v < members.size(); ++v) members[v] = v;
            return SignFamily(ground, std::move(members));
        }
        case GeneratorKind::Empty:
            return SignFamily(ground);
        case GeneratorKind::Singleton:
            return SignFamily(ground, {0});
        case GeneratorKind::SixCycle: {
            require(n == 3, "SIX_CYCLE requires n = 3");
            return SignFamily(ground, {1, 2, 3, 4, 5, 6});
        }
        case GeneratorKind::Downset: {
            // subsets of E encoded with +1 = membership, closed downward
            std::mt19937_64 rng(seed);
            const std::uint64_t full = bits::mask(n);
            std::unordered_set<std::uint64_t> members;
            const int generators = 1 + static_cast<int>(rng() % (n + 1));
            for (int g = 0; g < generators; ++g) {
                const std::uint64_t top = rng() & full;
                bits::for_each_subset_of(top, [&](std::uint64_t sub) { members.insert(sub); });
            }
            return SignFamily(ground,
                              std::vector<std::uint64_t>(members.begin(), members.end()));
        }
        case GeneratorKind::Random: {
            require(n <= 28, "RANDOM: ground set too large to materialize");
            std::mt19937_64 rng(seed);
            std::vector<std::uint64_t> members;
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
                if (rng() & 1u) members.push_back(v);
            return SignFamily(ground, std::move(members));
        }
    }
    throw std::invalid_argument("unknown generator kind");
}

std::string family_digest(const SignFamily& L) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (8 * byte)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(L.n()));
    for (std::uint64_t s : L.members()) mix(s);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace ample
