// stpack: generate graphs and products, build spanning tree packings, and
// check them against the exact oracle.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stpack/packing_json.hpp"
#include "stpack/stpack.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum exit_code { ok = 0, verification_failed = 1, usage = 2 };

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw stpack::input_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spill(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw stpack::input_error("cannot write " + path.string());
    out << text;
}

/// A graph argument is an edge-list file if one exists at that path,
/// otherwise a family short name such as K4, C5, Q3, K3(2), K4-.
stpack::Graph load_graph(const std::string &arg) {
    if (fs::is_regular_file(arg))
        return stpack::read_graph(slurp(arg));
    return stpack::generate(stpack::parse_family(arg));
}

stpack::ProductKind parse_kind(const std::string &kind) {
    if (kind == "cartesian")
        return stpack::ProductKind::cartesian;
    if (kind == "lex" || kind == "lexicographic")
        return stpack::ProductKind::lexicographic;
    throw stpack::parameter_error("product kind must be 'cartesian' or 'lex'");
}

stpack::FamilySpec family_from_words(const std::string &name, const std::vector<std::size_t> &params) {
    using stpack::FamilySpec;
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw stpack::parameter_error(name + " takes " + std::to_string(count) + " parameter(s)");
    };
    if (params.empty())
        return stpack::parse_family(name);
    if (name == "path") {
        need(1);
        return FamilySpec::path(params[0]);
    }
    if (name == "cycle") {
        need(1);
        return FamilySpec::cycle(params[0]);
    }
    if (name == "complete") {
        need(1);
        return FamilySpec::complete(params[0]);
    }
    if (name == "multipartite" || name == "complete_multipartite") {
        need(2);
        return FamilySpec::multipartite(params[0], params[1]);
    }
    if (name == "hypercube") {
        need(1);
        return FamilySpec::hypercube(params[0]);
    }
    if (name == "complete_minus_edge") {
        need(1);
        return FamilySpec::complete_minus_edge(params[0]);
    }
    throw stpack::parameter_error("unknown family '" + name + "'");
}

void emit(const std::string &out_path, const std::string &text) {
    if (out_path.empty())
        std::cout << text;
    else
        spill(out_path, text);
}

/// Wall time goes to stderr so stdout and written files stay byte-identical across runs.
struct Stopwatch {
    std::string command;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Stopwatch() {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "[" << command << "] wall time " << std::fixed << std::setprecision(1) << ms << " ms\n";
    }
};

int run_gen(const std::string &family, const std::vector<std::size_t> &params, const std::string &out) {
    const auto spec = family_from_words(family, params);
    emit(out, stpack::write_graph(stpack::generate(spec), {"family " + stpack::to_string(spec)}));
    return ok;
}

int run_product(const std::string &kind, const std::string &g_arg, const std::string &h_arg, const std::string &out) {
    const auto p = stpack::make_product(parse_kind(kind), load_graph(g_arg), load_graph(h_arg));
    emit(out, stpack::write_product(p));
    return ok;
}

stpack::TreePacking load_factor_packing(const std::string &path, const stpack::Graph &factor) {
    if (path.empty() || path == "-")
        return stpack::factor_packing(factor);
    return stpack::packing_from_json(json::parse(slurp(path)), factor);
}

int run_pack(const std::string &kind_arg, const std::string &g_arg, const std::string &h_arg,
             const std::vector<std::string> &factor_packings, const std::string &out, const std::string &format) {
    Stopwatch timer{"pack"};
    const auto kind = parse_kind(kind_arg);
    const auto g = load_graph(g_arg);
    const auto h = load_graph(h_arg);
    if (factor_packings.size() > 2)
        throw stpack::parameter_error("--factor-packing takes at most two paths (G then H)");
    const auto pack_g = load_factor_packing(factor_packings.size() > 0 ? factor_packings[0] : "", g);
    const auto pack_h = load_factor_packing(factor_packings.size() > 1 ? factor_packings[1] : "", h);

    const auto p = stpack::make_product(kind, g, h);
    std::size_t bound = 0;
    std::string lex_case;
    stpack::TreePacking packing;
    if (kind == stpack::ProductKind::cartesian) {
        bound = stpack::cartesian_bound(pack_g.count(), pack_h.count());
        packing = stpack::pack_cartesian(p, pack_g, pack_h);
    } else {
        const auto lb = stpack::lex_bound(pack_g.count(), pack_h.count(), g.order(), h.order());
        bound = lb.value;
        lex_case = stpack::to_string(lb.lex_case);
        packing = stpack::pack_lex(p, pack_g, pack_h);
    }
    const auto report = stpack::verify_packing(p.graph(), packing);

    const std::string descriptor = stpack::to_string(kind) + "(" + g_arg + "," + h_arg + ")";
    std::string graph_ref = descriptor;
    if (!out.empty()) {
        fs::path edges_path = fs::path(out).replace_extension(".edges");
        spill(edges_path, stpack::write_product(p));
        graph_ref = edges_path.filename().string();
        spill(out, stpack::dump_record(stpack::packing_to_json(packing, graph_ref, bound, report.ok())));
    }

    json record{{"command", "pack"},
                {"inputs", {{"kind", stpack::to_string(kind)}, {"g", g_arg}, {"h", h_arg}}},
                {"outputs",
                 {{"n", p.graph().order()},
                  {"m", p.graph().size()},
                  {"sigma_g", pack_g.count()},
                  {"sigma_h", pack_h.count()},
                  {"bound", bound},
                  {"trees", packing.count()}}},
                {"verified", report.ok()}};
    if (!lex_case.empty())
        record["outputs"]["case"] = lex_case;
    if (format == "json") {
        if (out.empty())
            record["packing"] = stpack::packing_to_json(packing, graph_ref, bound, report.ok());
        std::cout << record.dump(1) << '\n';
    } else {
        std::cout << "product   " << descriptor << "  n=" << p.graph().order() << " m=" << p.graph().size() << '\n'
                  << "factors   sigma(G)=" << pack_g.count() << " sigma(H)=" << pack_h.count() << '\n'
                  << "bound     " << bound << (lex_case.empty() ? "" : " (" + lex_case + ")") << '\n'
                  << "trees     " << packing.count() << '\n'
                  << "verified  " << (report.ok() ? "yes" : "NO") << '\n';
        if (!report.ok())
            std::cout << report.to_text();
    }
    return report.ok() ? ok : verification_failed;
}

int run_oracle(const std::string &g_arg, const std::string &out, const std::string &format) {
    Stopwatch timer{"oracle"};
    const auto g = load_graph(g_arg);
    const auto result = stpack::max_packing(g);
    const auto report = stpack::verify_packing(g, result.packing);
    const bool verified = report.ok() && result.certificate.bound == result.sigma;
    auto record = stpack::packing_to_json(result.packing, g_arg, result.sigma, verified);
    record["sigma"] = result.sigma;
    record["certificate"] = stpack::certificate_to_json(result.certificate);
    if (!out.empty())
        spill(out, stpack::dump_record(record));
    if (format == "json") {
        std::cout << stpack::dump_record(record);
    } else {
        std::cout << "graph        " << g_arg << "  n=" << g.order() << " m=" << g.size() << '\n'
                  << "sigma        " << result.sigma << '\n'
                  << "edge bound   " << stpack::edge_bound(g) << '\n'
                  << "certificate  " << result.certificate.partition.size() << " blocks, "
                  << result.certificate.crossing_count << " crossing edges, bound " << result.certificate.bound
                  << '\n'
                  << "verified     " << (verified ? "yes" : "NO") << '\n';
    }
    return verified ? ok : verification_failed;
}

int run_verify(const std::vector<std::string> &args, const std::string &format) {
    std::string graph_arg, packing_path;
    if (args.size() == 2) {
        graph_arg = args[0];
        packing_path = args[1];
    } else if (args.size() == 1) {
        packing_path = args[0];
    } else {
        throw stpack::parameter_error("verify takes [GRAPH] PACKING");
    }
    const json record = json::parse(slurp(packing_path));
    if (graph_arg.empty()) {
        if (!record.contains("graph") || !record["graph"].is_string())
            throw stpack::parameter_error("packing has no graph reference; pass the graph explicitly");
        auto ref = fs::path(packing_path).parent_path() / record["graph"].get<std::string>();
        graph_arg = fs::is_regular_file(ref) ? ref.string() : record["graph"].get<std::string>();
    }
    const auto g = load_graph(graph_arg);
    const auto packing = stpack::packing_from_json(record, g);
    auto report = stpack::verify_packing(g, packing);
    if (format == "json")
        std::cout << stpack::report_to_json(report).dump(1) << '\n';
    else
        std::cout << report.to_text();
    return report.ok() ? ok : verification_failed;
}

int run_table(bool strict, const std::string &out, const std::string &format) {
    Stopwatch timer{"table"};
    const auto table = stpack::build_table();
    std::string text;
    if (format == "json") {
        json rows = json::array();
        for (const auto &r : table.rows) {
            auto opt = [](const auto &v) { return v ? json(*v) : json(nullptr); };
            rows.push_back({{"source", r.entry.source},
                            {"graph", r.entry.label()},
                            {"n", r.order},
                            {"m", r.size},
                            {"closed_form", opt(r.entry.closed_form)},
                            {"bound", opt(r.bound)},
                            {"constructed", opt(r.constructed)},
                            {"oracle", r.oracle},
                            {"match", opt(r.matches_closed_form())},
                            {"tight", opt(r.tight())},
                            {"verified", r.verified},
                            {"problems", r.problems()},
                            {"note", r.entry.note}});
        }
        text = json{{"rows", rows}, {"verified", table.verified()}, {"strict_ok", table.strict_ok()}}.dump(1) + "\n";
    } else {
        text = stpack::render_text(table);
        for (const auto &r : table.rows)
            for (const auto &problem : r.problems())
                text += "mismatch: " + r.entry.label() + ": " + problem + "\n";
    }
    emit(out, text);
    if (!table.verified())
        return verification_failed;
    if (strict && !table.strict_ok())
        return verification_failed;
    return ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Edge-disjoint spanning tree packings of graph products"};
    app.require_subcommand(1);
    std::string out, format = "text";
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out", out, "Write the primary output to this path");
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto *gen = app.add_subcommand("gen", "Generate a family graph in edge-list format");
    std::string family;
    std::vector<std::size_t> params;
    gen->add_option("family", family, "path|cycle|complete|multipartite|hypercube|complete_minus_edge, or a short name")
        ->required();
    gen->add_option("params", params, "Family parameters");
    add_common(gen);

    auto *product = app.add_subcommand("product", "Build a cartesian or lexicographic product");
    std::string kind, g_arg, h_arg;
    product->add_option("kind", kind, "cartesian|lex")->required();
    product->add_option("G", g_arg, "First factor (file or short name)")->required();
    product->add_option("H", h_arg, "Second factor (file or short name)")->required();
    add_common(product);

    auto *pack = app.add_subcommand("pack", "Construct and verify a packing of a product");
    std::vector<std::string> factor_packings;
    pack->add_option("kind", kind, "cartesian|lex")->required();
    pack->add_option("G", g_arg, "First factor (file or short name)")->required();
    pack->add_option("H", h_arg, "Second factor (file or short name)")->required();
    pack->add_option("--factor-packing", factor_packings,
                     "Packing JSON for G, then H ('-' keeps the oracle packing)")
        ->expected(1, 2);
    add_common(pack);

    auto *oracle = app.add_subcommand("oracle", "Exact packing number with certificate");
    oracle->add_option("G", g_arg, "Graph (file or short name)")->required();
    add_common(oracle);

    auto *verify = app.add_subcommand("verify", "Check a packing file against a graph");
    std::vector<std::string> verify_args;
    verify->add_option("args", verify_args, "[GRAPH] PACKING")->required()->expected(1, 2);
    add_common(verify);

    auto *table = app.add_subcommand("table", "Compare closed forms, construction bounds and oracle values");
    bool strict = false;
    table->add_flag("--strict", strict, "Fail when any expectation in the built-in manifest is not met");
    add_common(table);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen)
            return run_gen(family, params, out);
        if (*product)
            return run_product(kind, g_arg, h_arg, out);
        if (*pack)
            return run_pack(kind, g_arg, h_arg, factor_packings, out, format);
        if (*oracle)
            return run_oracle(g_arg, out, format);
        if (*verify)
            return run_verify(verify_args, format);
        if (*table)
            return run_table(strict, out, format);
    } catch (const stpack::error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
