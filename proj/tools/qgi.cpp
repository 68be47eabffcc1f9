// Command-line front door: parse matrices, compute a chosen generalized
// inverse, optionally print the pipeline intermediates and verify the
// characterizing equations, and emit a human-diffable or JSON report.
//
// Exit codes: 0 success, 1 input parse error, 2 dimension/precondition or
// usage error, 3 verification failure (the report is still written).

#include "qgi/config.hpp"
#include "qgi/errors.hpp"
#include "qgi/gen_inverses.hpp"
#include "qgi/matrix_io.hpp"
#include "qgi/nc_determinant.hpp"
#include "qgi/oracle.hpp"
#include "qgi/weighted_family.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qgi;

struct JobSpec {
    std::string command;
    std::string path_a;
    std::string path_w;
    std::string path_x;
    std::string variant = "auto";
    std::string side;
    std::string system;
    std::size_t anchor = 1;
    bool trace = false;
    bool verify = false;
    bool json = false;
    std::string output;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> meta;
    std::optional<QMatrix> matrix;
    std::optional<QMatrix> matrix_q; // second block for the projectors command
    std::optional<std::string> scalar;
    Trace trace;
    bool want_trace = false;
    std::optional<oracle::VerificationVerdict> verdict;
};

Variant parse_variant(const std::string& v) {
    if (v == "auto") return Variant::auto_select;
    if (v == "general") return Variant::general;
    if (v == "general-u") return Variant::general_u;
    if (v == "general-v") return Variant::general_v;
    if (v == "hermitian-wa") return Variant::hermitian_wa;
    if (v == "hermitian-aw") return Variant::hermitian_aw;
    throw qgi::error("unknown variant: " + v);
}

std::string render_text(const Report& rep) {
    std::string out = "[meta]\n";
    for (const auto& [key, value] : rep.meta) out += key + " = " + value + "\n";
    out += "[result]\n";
    if (rep.scalar) out += "value = " + *rep.scalar + "\n";
    if (rep.matrix) out += format_matrix(*rep.matrix);
    if (rep.matrix_q) {
        out += "[result.q]\n";
        out += format_matrix(*rep.matrix_q);
    }
    if (rep.want_trace) {
        out += "[trace]\n";
        int step = 1;
        for (const auto& [name, m] : rep.trace.steps) {
            out += "step " + std::to_string(step++) + " " + name + "\n";
            out += format_matrix(m);
        }
    }
    if (rep.verdict) {
        out += "[verify]\n";
        out += "system = " + rep.verdict->system + "\n";
        for (const auto& e : rep.verdict->equations)
            out += e.label + " : " + (e.holds ? "holds" : "FAILS (max residual " +
                                                              format_quaternion(e.residual) +
                                                              ")") +
                   "\n";
        out += std::string("verdict = ") + (rep.verdict->all_hold() ? "pass" : "fail") + "\n";
    }
    return out;
}

nlohmann::json matrix_json(const QMatrix& m) {
    return nlohmann::json::parse(format_matrix_json(m));
}

std::string render_json(const Report& rep) {
    nlohmann::json doc;
    for (const auto& [key, value] : rep.meta) doc["meta"][key] = value;
    if (rep.scalar) doc["result"]["value"] = *rep.scalar;
    if (rep.matrix) doc["result"] = matrix_json(*rep.matrix);
    if (rep.matrix_q) {
        doc["result_p"] = doc["result"];
        doc["result_q"] = matrix_json(*rep.matrix_q);
    }
    if (rep.want_trace) {
        doc["trace"] = nlohmann::json::array();
        int step = 1;
        for (const auto& [name, m] : rep.trace.steps)
            doc["trace"].push_back({{"step", step++}, {"name", name}, {"matrix", matrix_json(m)}});
    }
    if (rep.verdict) {
        nlohmann::json v;
        v["system"] = rep.verdict->system;
        v["equations"] = nlohmann::json::array();
        for (const auto& e : rep.verdict->equations)
            v["equations"].push_back({{"label", e.label},
                                      {"holds", e.holds},
                                      {"residual", format_quaternion(e.residual)}});
        v["verdict"] = rep.verdict->all_hold() ? "pass" : "fail";
        doc["verify"] = v;
    }
    return doc.dump(2) + "\n";
}

void add_pair_meta(Report& rep, const WeightedPair& pair) {
    rep.meta.emplace_back("m", std::to_string(pair.m()));
    rep.meta.emplace_back("n", std::to_string(pair.n()));
    rep.meta.emplace_back("rank_a", std::to_string(pair.rank_a));
    rep.meta.emplace_back("k", std::to_string(pair.k));
    rep.meta.emplace_back("rank_uk", std::to_string(pair.rank_uk));
    rep.meta.emplace_back("rank_vk", std::to_string(pair.rank_vk));
}

int run(const JobSpec& spec) {
    Report rep;
    rep.meta.emplace_back("command", spec.command);
    rep.want_trace = spec.trace;

    const QMatrix a = read_matrix_file(spec.path_a);
    Trace* tr = spec.trace ? &rep.trace : nullptr;

    if (spec.command == "mp") {
        rep.meta.emplace_back("rank_a", std::to_string(rank(a)));
        rep.matrix = mp_inverse(a);
        if (spec.verify) rep.verdict = oracle::verify_system("penrose", a, *rep.matrix);
    } else if (spec.command == "projectors") {
        rep.matrix = projector_p(a);
        rep.matrix_q = projector_q(a);
    } else if (spec.command == "rank") {
        rep.scalar = std::to_string(rank(a));
    } else if (spec.command == "index") {
        rep.scalar = std::to_string(index_of(a));
    } else if (spec.command == "rdet") {
        rep.scalar = format_quaternion(rdet(spec.anchor, a));
    } else if (spec.command == "cdet") {
        rep.scalar = format_quaternion(cdet(spec.anchor, a));
    } else if (spec.command == "core-ep") {
        bool right = spec.side == "right";
        rep.meta.emplace_back("side", spec.side);
        rep.meta.emplace_back("index", std::to_string(index_of(a)));
        rep.matrix = right ? core_ep_right(a) : core_ep_left(a);
        if (spec.verify)
            rep.verdict =
                oracle::verify_system(right ? "core_ep_right" : "core_ep_left", a, *rep.matrix);
    } else if (spec.command == "verify") {
        const QMatrix x = read_matrix_file(spec.path_x);
        if (spec.path_w.empty()) {
            rep.verdict = oracle::verify_system(spec.system, a, x);
        } else {
            rep.verdict = oracle::verify_system(spec.system, a, read_matrix_file(spec.path_w), x);
        }
    } else {
        // weighted commands
        const QMatrix w = read_matrix_file(spec.path_w);
        WeightedPair pair(a, w);
        add_pair_meta(rep, pair);
        const Variant variant = parse_variant(spec.variant);
        rep.meta.emplace_back("variant", spec.variant);

        std::string system;
        if (spec.command == "wdrazin") {
            switch (variant) {
            case Variant::auto_select: rep.matrix = wdrazin(pair); break;
            case Variant::general:
                rep.matrix = pair.n() <= pair.m() ? wdrazin_u(pair) : wdrazin_v(pair);
                break;
            case Variant::general_u: rep.matrix = wdrazin_u(pair); break;
            case Variant::general_v: rep.matrix = wdrazin_v(pair); break;
            case Variant::hermitian_wa:
                rep.matrix = wdrazin_hermitian(pair, HermitianSide::wa);
                break;
            case Variant::hermitian_aw:
                rep.matrix = wdrazin_hermitian(pair, HermitianSide::aw);
                break;
            }
            system = "wdrazin";
        } else if (spec.command == "wcep") {
            rep.meta.emplace_back("side", spec.side);
            if (spec.side == "right") {
                rep.matrix = wcep_right(pair, tr);
                system = "wcep_right";
            } else {
                rep.matrix = wcep_left(pair, tr);
                system = "wcep_left";
            }
        } else if (spec.command == "wdmp") {
            rep.matrix = wdmp(pair, variant, tr);
            system = "wdmp";
        } else if (spec.command == "wmpd") {
            rep.matrix = wmpd(pair, variant, tr);
            system = "wmpd";
        } else if (spec.command == "wcmp") {
            rep.matrix = wcmp(pair, variant, tr);
            system = "wcmp";
        }
        if (spec.verify) rep.verdict = oracle::verify_system(system, a, w, *rep.matrix);
    }

    const std::string text = spec.json ? render_json(rep) : render_text(rep);
    if (spec.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(spec.output, std::ios::binary);
        if (!out) throw qgi::error("cannot write output file: " + spec.output);
        out << text;
    }
    if (rep.verdict && !rep.verdict->all_hold()) return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized inverses of quaternion matrices"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    JobSpec spec;
    unsigned threads = 0;
    std::size_t max_dim = 0;

    app.add_flag("--json", spec.json, "emit the report as JSON");
    app.add_option("--output,-o", spec.output, "write the report to a file instead of stdout");
    app.add_option("--threads", threads, "worker threads for the parallel kernels (0 = default)");
    app.add_option("--max-dim", max_dim, "cap on determinant expansion dimensions (default 7)");

    const std::vector<std::string> weighted = {"wdrazin", "wcep", "wdmp", "wmpd", "wcmp"};
    const std::vector<std::string> plain = {"mp",   "projectors", "rank",
                                            "rdet", "cdet",       "index",
                                            "core-ep"};

    std::map<std::string, CLI::App*> subs;
    auto add_common = [&](CLI::App* sub, bool wants_w) {
        sub->add_option("A", spec.path_a, "matrix file for A")->required();
        if (wants_w) sub->add_option("W", spec.path_w, "matrix file for the weight W")->required();
    };
    for (const auto& name : plain) {
        subs[name] = app.add_subcommand(name);
        add_common(subs[name], false);
    }
    for (const auto& name : weighted) {
        subs[name] = app.add_subcommand(name);
        add_common(subs[name], true);
    }

    subs["mp"]->description("Moore-Penrose inverse");
    subs["mp"]->add_flag("--verify", spec.verify, "check the four defining equations");
    subs["projectors"]->description("orthogonal projectors a a^+ and a^+ a");
    subs["rank"]->description("rank over the quaternions");
    subs["index"]->description("index: smallest k with rank a^(k+1) = rank a^k");
    subs["rdet"]->description("row determinant at --index");
    subs["rdet"]->add_option("--index", spec.anchor, "anchor row (1-based)")->default_val(1);
    subs["cdet"]->description("column determinant at --index");
    subs["cdet"]->add_option("--index", spec.anchor, "anchor column (1-based)")->default_val(1);

    subs["core-ep"]->description("core-EP inverse of a square matrix");
    subs["core-ep"]
        ->add_option("--side", spec.side, "right or left")
        ->required()
        ->check(CLI::IsMember({"right", "left"}));
    subs["core-ep"]->add_flag("--verify", spec.verify, "check the characterizing equations");

    auto variant_check = CLI::IsMember(
        {"auto", "general", "general-u", "general-v", "hermitian-wa", "hermitian-aw"});
    subs["wdrazin"]->description("weighted Drazin inverse");
    subs["wcep"]->description("weighted core-EP inverse");
    subs["wcep"]
        ->add_option("--side", spec.side, "right or left")
        ->required()
        ->check(CLI::IsMember({"right", "left"}));
    subs["wdmp"]->description("weighted DMP inverse");
    subs["wmpd"]->description("weighted MPD inverse");
    subs["wcmp"]->description("weighted CMP inverse");
    for (const auto& name : weighted) {
        if (name != "wcep")
            subs[name]->add_option("--variant", spec.variant, "formula variant")->check(variant_check);
        subs[name]->add_flag("--verify", spec.verify, "check the characterizing equations");
        if (name != "wdrazin") subs[name]->add_flag("--trace", spec.trace, "print the pipeline intermediates");
    }

    auto* verify_cmd = app.add_subcommand("verify", "check a candidate inverse against a system");
    verify_cmd->add_option("--system", spec.system, "characterizing system name")
        ->required()
        ->check(CLI::IsMember({"penrose", "drazin", "wdrazin", "core_ep_right", "core_ep_left",
                               "wcep_right", "wcep_left", "wdmp", "wmpd", "wcmp"}));
    verify_cmd->add_option("A", spec.path_a, "matrix file for A")->required();
    verify_cmd->add_option("X", spec.path_x, "matrix file for the candidate inverse")->required();
    verify_cmd->add_option("--weight,-W", spec.path_w, "matrix file for the weight W");
    subs["verify"] = verify_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    for (const auto& [name, sub] : subs)
        if (sub->parsed()) spec.command = name;

    if (max_dim > 0) config::set_max_dim(max_dim);
    config::set_threads(threads);

    try {
        return run(spec);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const qgi::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
}
