#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gqlab/errors.hpp"
#include "gqlab/geometry.hpp"
#include "gqlab/group.hpp"
#include "gqlab/kantor.hpp"
#include "gqlab/suites.hpp"

using namespace gqlab;
namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

// I/O and schema problems; exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint32_t q = 3;
    std::uint64_t seed = 12345;
    unsigned jobs = 1;
    std::string output;
    std::string golden_dir;
    std::vector<std::string> inputs;
    bool human = false;
    std::string group_kind = "heisenberg";
    std::uint32_t n = 1;
    std::optional<unsigned> max_e;
    std::optional<std::uint64_t> max_q1, max_pd, max_q;
};

std::string render(const nlohmann::json& j, bool human) { return human ? j.dump(2) + "\n" : j.dump() + "\n"; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json parse_json(const std::string& path) {
    try {
        return nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
}

KantorFamily family_for_q(std::uint32_t q) { return q % 2 == 1 ? classical_wq_family(q) : t2_oval_family(q); }

int cmd_build(const std::string& what, const Options& o) {
    nlohmann::json artifact;
    std::string summary;
    if (what == "wq" || what == "t2") {
        auto f = what == "wq" ? classical_wq_family(o.q) : t2_oval_family(o.q);
        artifact = family_to_json(f);
        summary = "s=" + std::to_string(f.s) + " t=" + std::to_string(f.t) + " |G|=" + std::to_string(f.group.order());
    } else if (what == "gq24") {
        auto f = classical_wq_family(3);
        auto cg = coset_geometry(f);
        auto d = payne_derive(cg.gq, cg.infinity);
        artifact = gq_to_json(d.gq);
        summary = std::to_string(d.gq.num_points()) + " points " + std::to_string(d.gq.num_lines()) + " lines";
    } else {
        FiniteGroup g;
        if (o.group_kind == "heisenberg")
            g = heisenberg_group(o.q);
        else if (o.group_kind == "cyclic")
            g = cyclic_group(o.q);
        else if (o.group_kind == "elementary")
            g = elementary_abelian(o.q, o.n);
        else if (o.group_kind == "extraspecial-plus")
            g = extraspecial_central_c4(o.n, ExtraspecialKind::Plus);
        else
            g = extraspecial_central_c4(o.n, ExtraspecialKind::Minus);
        artifact = group_to_json(g, true);
        summary = g.label() + " |G|=" + std::to_string(g.order());
    }
    std::string text = render(artifact, o.human);
    if (o.output.empty())
        std::cout << text;
    else
        write_file(o.output, text);
    std::cerr << summary << "\n";
    return kPass;
}

int cmd_verify(const std::string& suite, const Options& o) {
    std::vector<std::pair<std::string, KantorFamily>> families;
    nlohmann::json reports = nlohmann::json::array();
    bool pass = true;
    if (o.inputs.empty()) {
        families.emplace_back("q=" + std::to_string(o.q), family_for_q(o.q));
    } else {
        for (const auto& path : o.inputs) {
            nlohmann::json j = parse_json(path);
            try {
                families.emplace_back(path, family_from_json(j));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::SchemaError) throw IoError(path + ": " + e.what());
                // structurally broken family: a failed check, not an I/O problem
                pass = false;
                reports.push_back({{"input", path},
                                   {"suite", suite},
                                   {"pass", false},
                                   {"error", std::string(to_string(e.code()))},
                                   {"message", e.what()},
                                   {"witness", e.witness()}});
            }
        }
    }
    SuiteOptions so{o.seed, o.jobs, 100};
    for (const auto& [name, f] : families) {
        auto rep = run_suite(suite, f, so);
        auto j = to_json(rep);
        j["input"] = name;
        pass = pass && rep.pass();
        reports.push_back(j);
    }
    nlohmann::json out = {{"suite", suite}, {"pass", pass}, {"reports", reports}};
    std::string text = render(out, o.human);
    if (o.output.empty())
        std::cout << text;
    else
        write_file(o.output, text);
    return pass ? kPass : kFail;
}

int cmd_scan(const std::string& name, const Options& o) {
    ScanOverrides ov;
    ov.max_e = o.max_e;
    ov.max_q1 = o.max_q1;
    ov.max_pd = o.max_pd;
    ov.max_q = o.max_q;
    ov.jobs = o.jobs;
    auto cert = run_scan(name, ov);
    std::string text = certificate_dump(cert);

    std::string golden_dir = o.golden_dir;
    if (golden_dir.empty())
        if (const char* env = std::getenv("GQLAB_GOLDEN_DIR")) golden_dir = env;
    std::string golden = "absent";
    if (!golden_dir.empty()) {
        fs::path p = fs::path(golden_dir) / certificate_file_name(name);
        if (fs::exists(p)) {
            std::string want = read_file(p.string());
            nlohmann::json wj;
            try {
                wj = nlohmann::json::parse(want);
            } catch (const nlohmann::json::parse_error& e) {
                throw IoError(p.string() + ": " + e.what());
            }
            // goldens are recorded at default parameters; overrides make them incomparable
            if (wj.value("parameters", nlohmann::json()) != cert.parameters)
                golden = "skipped";
            else
                golden = want == text ? "match" : "mismatch";
        }
    }
    if (auto bad = first_bad_trace(cert)) throw Error(ErrorCode::InvalidArgument, "trace " + std::to_string(*bad) + " does not re-evaluate");

    nlohmann::json summary = {{"scan", name}, {"count", cert.count()}, {"verdict", cert.pass ? "pass" : "fail"}, {"golden", golden}};
    if (o.output.empty()) {
        std::cout << (o.human ? to_json(cert).dump(2) + "\n" : text);
        std::cerr << summary.dump() << "\n";
    } else {
        write_file(o.output, text);
        std::cout << render(summary, o.human);
    }
    return cert.pass && golden != "mismatch" ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gqlab: generalized quadrangle verification toolkit"};
    app.require_subcommand(1);
    Options o;
    std::string build_what, suite, scan;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--output,-o", o.output, "Write the result to this file");
        sub->add_flag("--human", o.human, "Indented JSON");
        sub->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    auto* build = app.add_subcommand("build", "Build a family, quadrangle or group and write it as JSON");
    build->add_option("object", build_what, "wq | t2 | gq24 | group")->required()->check(CLI::IsMember({"wq", "t2", "gq24", "group"}));
    build->add_option("--q", o.q, "Field order or group parameter");
    build->add_option("--kind", o.group_kind, "Group kind for `build group`")
        ->check(CLI::IsMember({"heisenberg", "cyclic", "elementary", "extraspecial-plus", "extraspecial-minus"}));
    build->add_option("--n", o.n, "Rank / extraspecial size parameter");
    common(build);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "kantor | algebra | characters | geometry | all")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--q", o.q, "Use W(q) (q odd) or T2(q) (q even) when no input is given");
    verify->add_option("--input,-i", o.inputs, "Family JSON files");
    verify->add_option("--seed", o.seed, "Seed for randomized checks");
    common(verify);

    auto* scan_cmd = app.add_subcommand("scan", "Run an arithmetic scan and write its certificate");
    scan_cmd->add_option("name", scan, "Scan name")->required()->check(CLI::IsMember(scan_names()));
    scan_cmd->add_option("--golden-dir", o.golden_dir, "Compare against <dir>/<name>.json (env GQLAB_GOLDEN_DIR)");
    scan_cmd->add_option("--max-e", o.max_e, "final: largest odd e");
    scan_cmd->add_option("--max-q1", o.max_q1, "final: largest q1");
    scan_cmd->add_option("--max-pd", o.max_pd, "ggd: largest p^d");
    scan_cmd->add_option("--max-q", o.max_q, "gl2: largest q");
    common(scan_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*build) return cmd_build(build_what, o);
        if (*verify) return cmd_verify(suite, o);
        return cmd_scan(scan, o);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        nlohmann::json j = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", e.witness()}};
        std::cerr << j.dump() << "\n";
        return e.code() == ErrorCode::SchemaError ? kUsage : kFail;
    }
}
