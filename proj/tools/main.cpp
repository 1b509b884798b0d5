#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ample/ample.hpp"
#include "ample/convexity.hpp"
#include "ample/cubihedron.hpp"
#include "ample/io.hpp"
#include "ample/oracle.hpp"
#include "ample/shatter.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    std::string output;
    double tolerance = ample::kDefaultZeroTolerance;
    int jobs = 0;
    std::uint64_t seed = 0;
    int n = -1;
};

void add_common_flags(CLI::App* cmd, Options& opt, bool with_tolerance = false) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--output", opt.output, "write output to a file instead of stdout");
    cmd->add_option("--jobs", opt.jobs, "worker threads (0 = all available)");
    cmd->add_option("--seed", opt.seed, "seed for gen: inputs");
    cmd->add_option("--n", opt.n, "ground set size for gen: inputs");
    if (with_tolerance)
        cmd->add_option("--tolerance", opt.tolerance, "zero snap tolerance for point coordinates");
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opt.output);
    out << text;
}

// A family input is a file path, '-' for stdin, or gen:KIND resolved with
// --n / --seed.
ample::SignFamily resolve_family(const std::string& input, const Options& opt) {
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return ample::parse_family(buf.str());
    }
    if (input.rfind("gen:", 0) == 0) {
        const auto kind = ample::parse_generator_kind(input.substr(4));
        if (!kind) throw std::invalid_argument("unknown generator kind in '" + input + "'");
        int n = opt.n;
        if (n < 0) {
            if (*kind == ample::GeneratorKind::SixCycle)
                n = 3;
            else
                throw std::invalid_argument("gen: inputs need --n");
        }
        return ample::generate(*kind, n, opt.seed);
    }
    return ample::load_family(input);
}

std::string verdict_word(bool b) { return b ? "true" : "false"; }

std::string witness_text(const ample::Witness& w) {
    std::string out;
    for (const auto& [key, value] : w.fields) {
        out += "  ";
        out += key;
        out += "=";
        out += value;
    }
    return out;
}

std::string report_text(const ample::SignFamily& L, const ample::CharacterizationReport& report) {
    std::ostringstream out;
    out << "family: " << L.size() << " members over n=" << L.n() << " (digest "
        << report.family_digest << ")\n";
    const auto dp = ample::dress_pajor(L);
    out << "dress_pajor: " << dp.lower << " " << dp.middle << " " << dp.upper << "\n";
    out << "vc_dimension: " << ample::vc_dimension(L) << "\n";
    for (const auto& [id, res] : report.results) {
        out << "  " << ample::to_string(id);
        for (std::size_t pad = std::string(ample::to_string(id)).size(); pad < 18; ++pad)
            out << ' ';
        out << verdict_word(res.verdict);
        if (res.witness) out << witness_text(*res.witness);
        out << "\n";
    }
    out << "agree: " << verdict_word(report.agree) << "\n";
    out << "ample: " << verdict_word(ample::is_ample(L)) << "\n";
    return out.str();
}

int run_check(const std::string& input, const std::string& id_name, const Options& opt) {
    const ample::SignFamily L = resolve_family(input, opt);
    if (id_name == "all") {
        const auto report = ample::cross_check(L);
        emit(opt, opt.format == "json" ? ample::report_json(L, report) : report_text(L, report));
        return (report.agree && ample::is_ample(L)) ? 0 : 1;
    }
    const auto id = ample::parse_characterization(id_name);
    if (!id) throw std::invalid_argument("unknown characterization id '" + id_name + "'");
    const auto result = ample::check(L, *id);
    if (opt.format == "json") {
        ordered_json doc;
        doc["id"] = id_name;
        doc["verdict"] = result.verdict;
        if (result.witness) {
            ordered_json w = ordered_json::object();
            for (const auto& [key, value] : result.witness->fields) w[key] = value;
            doc["witness"] = std::move(w);
        }
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::string line = std::string(id_name) + " " + verdict_word(result.verdict);
        if (result.witness) line += witness_text(*result.witness);
        emit(opt, line + "\n");
    }
    return result.verdict ? 0 : 1;
}

int run_report(const std::string& input, const Options& opt) {
    const ample::SignFamily L = resolve_family(input, opt);
    const auto report = ample::cross_check(L);
    emit(opt, opt.format == "json" ? ample::report_json(L, report) : report_text(L, report));
    return 0;
}

int run_enumerate(int n, const std::string& id_name, const Options& opt) {
    const auto id = ample::parse_characterization(id_name);
    if (!id) throw std::invalid_argument("unknown characterization id '" + id_name + "'");
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = ample::enumerate_families(n, *id, opt.jobs);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (opt.format == "json") {
        ordered_json doc;
        doc["n"] = n;
        doc["id"] = id_name;
        doc["count"] = count;
        doc["ms"] = ms;
        emit(opt, doc.dump(2) + "\n");
    } else {
        emit(opt, std::to_string(count) + "\n");
        std::cerr << "wall time: " << ms << " ms\n";
    }
    return 0;
}

int run_orthants(const std::string& input, const Options& opt) {
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    }
    const ample::PointCloud cloud =
        input == "-" ? ample::parse_cloud_csv(text) : ample::load_cloud(input);
    const ample::SignFamily L = ample::orthant_pattern(cloud, opt.tolerance);
    const ample::PartialFamily J = ample::region_pattern(cloud, opt.tolerance);
    const bool sca = ample::satisfies_sca(J);
    const bool sconv = ample::is_sign_convex(J);
    const bool ampl = ample::is_ample(L);
    if (opt.format == "json") {
        ordered_json doc;
        doc["n"] = cloud.n();
        doc["points"] = cloud.size();
        doc["orthant_pattern"] = L.member_strings();
        doc["region_pattern"] = J.member_strings();
        doc["sca"] = sca;
        doc["sign_convex"] = sconv;
        doc["ample"] = ampl;
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "points: " << cloud.size() << " over n=" << cloud.n() << "\n";
        out << "L(K):";
        for (const auto& s : L.member_strings()) out << " " << s;
        out << "\nJ(K):";
        for (const auto& s : J.member_strings()) out << " " << s;
        out << "\nsca(J): " << verdict_word(sca) << "\n";
        out << "sign_convex(J): " << verdict_word(sconv) << "\n";
        out << "ample(L): " << verdict_word(ampl) << "\n";
        emit(opt, out.str());
    }
    return 0;
}

int run_export(const std::string& input, const std::string& what, const Options& opt) {
    const ample::SignFamily L = resolve_family(input, opt);
    emit(opt, what == "skeleton" ? ample::dot_skeleton(L) : ample::dot_barycentric(L));
    return 0;
}

int run_oracle_enumerate(int n, const Options& opt) {
    const std::uint64_t count = ample::oracle::count_ample_families(n);
    emit(opt, std::to_string(count) + "\n");
    return 0;
}

int run_oracle_check(const std::string& input, const Options& opt) {
    const ample::SignFamily L = resolve_family(input, opt);
    const bool ampl = ample::oracle::is_ample(L);
    emit(opt, std::string("ample: ") + verdict_word(ampl) + "\n");
    return ampl ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ample/lopsided sign-vector families: invariants, predicates, exports"};
    app.require_subcommand(1);

    Options opt;
    std::string input, id_name = "all", what = "skeleton";
    int n = 0;

    auto* check = app.add_subcommand("check", "evaluate one characterization or the full battery");
    check->add_option("input", input, "family file, '-' or gen:KIND")->required();
    check->add_option("id", id_name, "characterization id or 'all'");
    add_common_flags(check, opt);

    auto* report = app.add_subcommand("report", "full cross-check report");
    report->add_option("input", input)->required();
    add_common_flags(report, opt);

    auto* enumerate = app.add_subcommand("enumerate", "count families satisfying a predicate");
    enumerate->add_option("N", n, "ground set size (<= 4)")->required();
    enumerate->add_option("id", id_name, "characterization id");
    add_common_flags(enumerate, opt);

    auto* orthants = app.add_subcommand("orthants", "orthant/region pattern of a point cloud");
    orthants->add_option("input", input, "CSV or JSON point file, '-' for stdin CSV")->required();
    add_common_flags(orthants, opt, /*with_tolerance=*/true);

    auto* exp = app.add_subcommand("export", "DOT export of the skeleton or barycentric grid");
    exp->add_option("input", input)->required();
    exp->add_option("what", what)->check(CLI::IsMember({"skeleton", "baryc"}));
    add_common_flags(exp, opt);

    auto* oracle = app.add_subcommand("oracle", "independent brute-force reference path");
    oracle->require_subcommand(1);
    auto* oracle_enum = oracle->add_subcommand("enumerate", "count ample families naively");
    oracle_enum->add_option("N", n, "ground set size (<= 4)")->required();
    add_common_flags(oracle_enum, opt);
    auto* oracle_check = oracle->add_subcommand("check", "naive ampleness verdict");
    oracle_check->add_option("input", input)->required();
    add_common_flags(oracle_check, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help and friends
        app.exit(err);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(input, id_name, opt);
        if (report->parsed()) return run_report(input, opt);
        if (enumerate->parsed()) {
            if (id_name == "all") id_name = "COUNT";
            return run_enumerate(n, id_name, opt);
        }
        if (orthants->parsed()) return run_orthants(input, opt);
        if (exp->parsed()) return run_export(input, what, opt);
        if (oracle->parsed()) {
            if (oracle_enum->parsed()) return run_oracle_enumerate(n, opt);
            return run_oracle_check(input, opt);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
