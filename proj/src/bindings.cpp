#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ample/ample.hpp"
#include "ample/convexity.hpp"
#include "ample/cubihedron.hpp"
#include "ample/io.hpp"
#include "ample/oracle.hpp"
#include "ample/shatter.hpp"

namespace py = pybind11;
using namespace ample;

namespace {

SignFamily family_from(const std::vector<std::string>& members, int n) {
    if (n < 0) n = members.empty() ? 0 : static_cast<int>(members.front().size());
    std::vector<std::uint64_t> bits;
    bits.reserve(members.size());
    for (const auto& m : members) {
        const SignVector v = parse_sign_vector(m);
        if (v.n != n) throw std::invalid_argument("members must all have length n");
        bits.push_back(v.bits);
    }
    return SignFamily(GroundSet(n), std::move(bits));
}

PartialFamily partial_from(const std::vector<std::string>& members, int n) {
    if (n < 0) n = members.empty() ? 0 : static_cast<int>(members.front().size());
    std::vector<PartialSignVector> vs;
    vs.reserve(members.size());
    for (const auto& m : members) {
        const PartialSignVector v = parse_partial_vector(m);
        if (v.n != n) throw std::invalid_argument("members must all have length n");
        vs.push_back(v);
    }
    return PartialFamily(GroundSet(n), std::move(vs));
}

Characterization id_from(const std::string& name) {
    const auto id = parse_characterization(name);
    if (!id) throw std::invalid_argument("unknown characterization id '" + name + "'");
    return *id;
}

py::dict witness_dict(const Witness& w) {
    py::dict out;
    for (const auto& [key, value] : w.fields) out[py::str(key)] = value;
    return out;
}

PointCloud cloud_from(const std::vector<std::vector<double>>& points) {
    const int n = points.empty() ? 0 : static_cast<int>(points.front().size());
    return PointCloud(GroundSet(n), points);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "sign-vector families, shattering invariants and the ampleness predicate battery";

    m.def(
        "is_ample", [](const std::vector<std::string>& members, int n) {
            return is_ample(family_from(members, n));
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "dress_pajor",
        [](const std::vector<std::string>& members, int n) {
            const auto c = dress_pajor(family_from(members, n));
            return py::make_tuple(c.lower, c.middle, c.upper);
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "vc_dimension", [](const std::vector<std::string>& members, int n) {
            return vc_dimension(family_from(members, n));
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "shattered", [](const std::vector<std::string>& members, int n) {
            return shattered(family_from(members, n)).member_strings();
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "strongly_shattered", [](const std::vector<std::string>& members, int n) {
            return strongly_shattered(family_from(members, n)).member_strings();
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "project",
        [](const std::vector<std::string>& members, const std::string& A, int n) {
            return project(family_from(members, n), parse_subset(A)).member_strings();
        },
        py::arg("members"), py::arg("A"), py::arg("n") = -1);

    m.def(
        "restrict",
        [](const std::vector<std::string>& members, const std::string& A, int n) {
            return restrict(family_from(members, n), parse_subset(A)).member_strings();
        },
        py::arg("members"), py::arg("A"), py::arg("n") = -1);

    m.def(
        "complement", [](const std::vector<std::string>& members, int n) {
            return complement(family_from(members, n)).member_strings();
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "barycenters", [](const std::vector<std::string>& members, int n) {
            return barycentric_completion(family_from(members, n)).barycenters.member_strings();
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "cocircuits", [](const std::vector<std::string>& members, int n) {
            return cocircuits(family_from(members, n)).member_strings();
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "circuits", [](const std::vector<std::string>& members, int n) {
            return circuits(family_from(members, n)).member_strings();
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "face_counts",
        [](const std::vector<std::string>& members, const std::string& face, int n) {
            return face_counts(family_from(members, n), parse_partial_vector(face));
        },
        py::arg("members"), py::arg("face"), py::arg("n") = -1);

    m.def(
        "euler_characteristic",
        [](const std::vector<std::string>& members, const std::string& face, int n) {
            return euler_characteristic(family_from(members, n), parse_partial_vector(face));
        },
        py::arg("members"), py::arg("face"), py::arg("n") = -1);

    m.def(
        "grid_distance",
        [](const std::vector<std::string>& J, const std::string& t, const std::string& u,
           int n) -> std::optional<int> {
            return grid_distance(partial_from(J, n), parse_partial_vector(t),
                                 parse_partial_vector(u));
        },
        py::arg("J"), py::arg("t"), py::arg("u"), py::arg("n") = -1,
        "Induced grid-graph distance; None when unreachable.");

    m.def(
        "is_grid_isometric", [](const std::vector<std::string>& J, int n) {
            return is_grid_isometric(partial_from(J, n));
        },
        py::arg("J"), py::arg("n") = -1);

    m.def(
        "upward_closure", [](const std::vector<std::string>& J, int n) {
            return upward_closure(partial_from(J, n)).member_strings();
        },
        py::arg("J"), py::arg("n") = -1);

    m.def(
        "minima", [](const std::vector<std::string>& J, int n) {
            return minima(partial_from(J, n)).member_strings();
        },
        py::arg("J"), py::arg("n") = -1);

    m.def("l1_distance", [](const std::string& s, const std::string& t) {
        return l1_distance(parse_sign_vector(s), parse_sign_vector(t));
    });

    m.def("l1_distance_partial", [](const std::string& s, const std::string& t) {
        return l1_distance_partial(parse_partial_vector(s), parse_partial_vector(t));
    });

    m.def("precedes", [](const std::string& s, const std::string& t) {
        return precedes(parse_partial_vector(s), parse_partial_vector(t));
    });

    m.def(
        "satisfies_sca", [](const std::vector<std::string>& J, int n) {
            return satisfies_sca(partial_from(J, n));
        },
        py::arg("J"), py::arg("n") = -1);

    m.def(
        "is_sign_convex", [](const std::vector<std::string>& J, int n) {
            return is_sign_convex(partial_from(J, n));
        },
        py::arg("J"), py::arg("n") = -1);

    m.def(
        "convexity_report",
        [](const std::vector<std::string>& J, int n) {
            const auto r = upward_closed_convexity_report(partial_from(J, n));
            py::dict out;
            out["sign_convex"] = r.sign_convex;
            out["sign_convex_boxed"] = r.sign_convex_boxed;
            out["zero_convex"] = r.zero_convex;
            out["zero_convex_boxed"] = r.zero_convex_boxed;
            return out;
        },
        py::arg("J"), py::arg("n") = -1);

    m.def(
        "sign_of_point",
        [](const std::vector<double>& point, double tolerance) {
            return sign_of_point(point, tolerance).str();
        },
        py::arg("point"), py::arg("tolerance") = kDefaultZeroTolerance);

    m.def(
        "orthant_pattern",
        [](const std::vector<std::vector<double>>& points, double tolerance) {
            return orthant_pattern(cloud_from(points), tolerance).member_strings();
        },
        py::arg("points"), py::arg("tolerance") = kDefaultZeroTolerance);

    m.def(
        "region_pattern",
        [](const std::vector<std::vector<double>>& points, double tolerance) {
            return region_pattern(cloud_from(points), tolerance).member_strings();
        },
        py::arg("points"), py::arg("tolerance") = kDefaultZeroTolerance);

    m.def(
        "orthant_pattern_of_complex", [](const std::vector<std::string>& members, int n) {
            return orthant_pattern_of_complex(family_from(members, n)).member_strings();
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "check",
        [](const std::vector<std::string>& members, const std::string& id, int n) {
            const auto res = check(family_from(members, n), id_from(id));
            return py::make_tuple(res.verdict,
                                  res.witness ? py::object(witness_dict(*res.witness))
                                              : py::object(py::none()));
        },
        py::arg("members"), py::arg("id"), py::arg("n") = -1,
        "Returns (verdict, witness-or-None).");

    m.def(
        "cross_check",
        [](const std::vector<std::string>& members, int n) {
            const auto report = cross_check(family_from(members, n));
            py::dict verdicts, witnesses;
            for (const auto& [id, res] : report.results) {
                verdicts[py::str(std::string(to_string(id)))] = res.verdict;
                if (res.witness)
                    witnesses[py::str(std::string(to_string(id)))] = witness_dict(*res.witness);
            }
            py::dict out;
            out["digest"] = report.family_digest;
            out["verdicts"] = verdicts;
            out["witnesses"] = witnesses;
            out["agree"] = report.agree;
            return out;
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "enumerate_families",
        [](int n, const std::string& id, int jobs) {
            return enumerate_families(n, id_from(id), jobs);
        },
        py::arg("n"), py::arg("id") = "COUNT", py::arg("jobs") = 0);

    m.def(
        "generate",
        [](const std::string& kind, int n, std::uint64_t seed) {
            const auto k = parse_generator_kind(kind);
            if (!k) throw std::invalid_argument("unknown generator kind '" + kind + "'");
            return generate(*k, n, seed).member_strings();
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 0);

    m.def(
        "export_dot",
        [](const std::vector<std::string>& members, const std::string& what, int n) {
            const SignFamily L = family_from(members, n);
            if (what == "skeleton") return dot_skeleton(L);
            if (what == "baryc") return dot_barycentric(L);
            throw std::invalid_argument("what must be 'skeleton' or 'baryc'");
        },
        py::arg("members"), py::arg("what") = "skeleton", py::arg("n") = -1);

    m.def(
        "family_digest", [](const std::vector<std::string>& members, int n) {
            return family_digest(family_from(members, n));
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "is_connected", [](const std::vector<std::string>& members, int n) {
            return is_connected(family_from(members, n));
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "is_isometric", [](const std::vector<std::string>& members, int n) {
            return is_isometric(family_from(members, n));
        },
        py::arg("members"), py::arg("n") = -1);

    m.def(
        "projection_dimensions",
        [](const std::vector<std::string>& members, const std::string& A, int n) {
            const auto d = projection_dimensions(family_from(members, n), parse_subset(A));
            return py::make_tuple(d.projected_complex, d.complex_of_projection);
        },
        py::arg("members"), py::arg("A"), py::arg("n") = -1);

    m.def(
        "oracle_is_ample", [](const std::vector<std::string>& members, int n) {
            return oracle::is_ample(family_from(members, n));
        },
        py::arg("members"), py::arg("n") = -1);

    m.def("oracle_count_ample_families",
          [](int n) { return oracle::count_ample_families(n); });

    m.def("characterizations", [] {
        std::vector<std::string> out;
        for (const auto id : kAllCharacterizations) out.emplace_back(to_string(id));
        return out;
    });

#ifdef AMPLE_VERSION
    m.attr("__version__") = AMPLE_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
