#include "ample/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ample/cubihedron.hpp"
#include "ample/shatter.hpp"

namespace ample {

namespace {

std::string strip(std::string_view line) {
    std::size_t b = 0, e = line.size();
    while (b < e && (line[b] == ' ' || line[b] == '\t' || line[b] == '\r')) ++b;
    while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t' || line[e - 1] == '\r')) --e;
    return std::string(line.substr(b, e - b));
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        ++lineno;
        fn(lineno, strip(text.substr(pos, end - pos)));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

SignFamily parse_family(std::string_view text) {
    std::vector<std::uint64_t> members;
    int n = -1;
    for_each_line(text, [&](int lineno, const std::string& line) {
        if (line.empty() || line[0] == '#') return;
        if (n < 0) {
            n = static_cast<int>(line.size());
            if (n > kMaxGroundSize) throw ParseError(lineno, "vector longer than 62 coordinates");
        } else if (static_cast<int>(line.size()) != n) {
            throw ParseError(lineno, "vector has length " + std::to_string(line.size()) +
                                         ", expected " + std::to_string(n));
        }
        try {
            members.push_back(parse_sign_vector(line).bits);
        } catch (const std::invalid_argument& err) {
            throw ParseError(lineno, err.what());
        }
    });
    if (n < 0) n = 0;
    return SignFamily(GroundSet(n), std::move(members));
}

SignFamily load_family(const std::string& path) { return parse_family(read_file(path)); }

std::string format_family(const SignFamily& L) {
    std::string out;
    for (std::size_t i = 0; i < L.size(); ++i) {
        out += L.at(i).str();
        out += '\n';
    }
    return out;
}

PointCloud parse_cloud_csv(std::string_view text) {
    std::vector<std::vector<double>> points;
    int n = -1;
    for_each_line(text, [&](int lineno, const std::string& line) {
        if (line.empty() || line[0] == '#') return;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            const std::string value = strip(cell);
            try {
                std::size_t used = 0;
                row.push_back(std::stod(value, &used));
                if (used != value.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(lineno, "not a number: '" + value + "'");
            }
        }
        if (n < 0)
            n = static_cast<int>(row.size());
        else if (static_cast<int>(row.size()) != n)
            throw ParseError(lineno, "row has " + std::to_string(row.size()) +
                                         " columns, expected " + std::to_string(n));
        points.push_back(std::move(row));
    });
    if (n < 0) n = 0;
    if (n > kMaxGroundSize) throw ParseError(1, "more than 62 columns");
    return PointCloud(GroundSet(n), std::move(points));
}

PointCloud parse_cloud_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(1, err.what());
    }
    if (!doc.is_array()) throw ParseError(1, "expected a JSON array of arrays");
    std::vector<std::vector<double>> points;
    int n = -1;
    for (const auto& row : doc) {
        if (!row.is_array()) throw ParseError(1, "expected a JSON array of arrays");
        std::vector<double> p;
        for (const auto& x : row) {
            if (!x.is_number()) throw ParseError(1, "point coordinates must be numbers");
            p.push_back(x.get<double>());
        }
        if (n < 0)
            n = static_cast<int>(p.size());
        else if (static_cast<int>(p.size()) != n)
            throw ParseError(1, "ragged rows in point array");
        points.push_back(std::move(p));
    }
    if (n < 0) n = 0;
    if (n > kMaxGroundSize) throw ParseError(1, "more than 62 columns");
    return PointCloud(GroundSet(n), std::move(points));
}

PointCloud load_cloud(const std::string& path) {
    const std::string text = read_file(path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return parse_cloud_json(text);
    return parse_cloud_csv(text);
}

std::string dot_skeleton(const SignFamily& L) {
    std::string out = "graph skeleton {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < L.size(); ++i) out += "  \"" + L.at(i).str() + "\";\n";
    const int n = L.n();
    for (std::size_t i = 0; i < L.size(); ++i) {
        const std::uint64_t s = L.members()[i];
        for (int e = 0; e < n; ++e) {
            const std::uint64_t t = s ^ (std::uint64_t{1} << e);
            if (t > s && L.contains(t))
                out += "  \"" + SignVector(n, s).str() + "\" -- \"" + SignVector(n, t).str() +
                       "\";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string dot_barycentric(const SignFamily& L) {
    const PartialFamily baryc = barycentric_completion(L).barycenters;
    std::string out = "graph barycentric {\n  node [shape=box];\n";
    for (const auto& t : baryc.members()) out += "  \"" + t.str() + "\";\n";
    for (const auto& t : baryc.members()) {
        // unit grid steps upward from t keep the edge list duplicate-free
        std::uint64_t zeros = ~t.support & bits::mask(t.n);
        while (zeros) {
            const std::uint64_t bit = zeros & (~zeros + 1);
            zeros &= zeros - 1;
            for (const std::uint64_t sig : {t.signs | bit, t.signs}) {
                const PartialSignVector up(t.n, t.support | bit, sig);
                if (baryc.contains(up))
                    out += "  \"" + t.str() + "\" -- \"" + up.str() + "\";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

std::string report_json(const SignFamily& L, const CharacterizationReport& report) {
    nlohmann::ordered_json doc;
    doc["n"] = L.n();
    doc["family"] = L.member_strings();
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    for (const auto& [id, res] : report.results) {
        verdicts[std::string(to_string(id))] = res.verdict;
        if (res.witness) {
            nlohmann::ordered_json w = nlohmann::ordered_json::object();
            for (const auto& [key, value] : res.witness->fields) w[key] = value;
            witnesses[std::string(to_string(id))] = std::move(w);
        }
    }
    doc["verdicts"] = std::move(verdicts);
    doc["witnesses"] = std::move(witnesses);
    doc["agree"] = report.agree;
    const DressPajorCounts dp = dress_pajor(L);
    doc["dress_pajor"] = {dp.lower, dp.middle, dp.upper};
    doc["vc_dimension"] = vc_dimension(L);
    return doc.dump(2) + "\n";
}

}  // namespace ample
