#include "ooc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ooc/serialize.hpp"

namespace ooc {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_io = 2;

struct Gen1dOpts {
    int length = 0;
    int weight = 0;
    std::string out_path;
    std::string format = "json";
};

struct PipelineOpts {
    int rows = 0;
    int cols = 0;
    int weight = 0;
    int lambda_a_max = 0;
    int lambda_c_max = 0;
    std::size_t max_cliques = 0;
    std::int64_t time_budget_ms = 0;
    std::string codes_path;
    std::string catalog_path;
    std::string out_path;
    std::string format = "text";
};

struct AnalyzeOpts {
    std::string path_a;
    std::string path_b;
    std::string format = "text";
};

void write_gen1d_records(std::ostream& out, std::span<const OneDimCode> codes,
                         const std::string& format) {
    if (format == "json") {
        for (std::size_t i = 0; i < codes.size(); ++i)
            out << one_dim_record(static_cast<int>(i), codes[i]).dump() << '\n';
        return;
    }
    for (const OneDimCode& code : codes) {
        out << "dop:";
        for (int gap : code.gaps()) out << ' ' << gap;
        out << '\n';
    }
}

int run_gen1d(const Gen1dOpts& opts, std::ostream& out, std::ostream& err) {
    const std::vector<OneDimCode> codes = enumerate_1d(opts.length, opts.weight);
    if (opts.out_path.empty()) {
        write_gen1d_records(out, codes, opts.format);
        err << "count: " << codes.size() << '\n';
        return exit_ok;
    }
    std::ofstream file(opts.out_path);
    if (!file) {
        err << "error: cannot open " << opts.out_path << '\n';
        return exit_io;
    }
    write_gen1d_records(file, codes, opts.format);
    file.flush();
    if (!file.good()) {
        err << "error: failed writing " << opts.out_path << '\n';
        return exit_io;
    }
    out << "count: " << codes.size() << '\n';
    return exit_ok;
}

std::vector<MatrixCode> load_pool(const PipelineOpts& opts, std::ostream& err, int* status) {
    std::ifstream file(opts.codes_path);
    if (!file) {
        err << "error: cannot open " << opts.codes_path << '\n';
        *status = exit_io;
        return {};
    }
    const CodeFile parsed = parse_code_file(file);
    if (parsed.rows != opts.rows || parsed.cols != opts.cols)
        throw parameter_error("code file dimensions " + std::to_string(parsed.rows) + "x" +
                              std::to_string(parsed.cols) + " do not match --L/--N");
    for (const MatrixCode& code : parsed.codes)
        if (code.weight() != opts.weight)
            throw parameter_error("code file weight " + std::to_string(code.weight()) +
                                  " does not match --w " + std::to_string(opts.weight));
    return parsed.codes;
}

void write_pipeline_report(std::ostream& out, const PipelineOpts& opts,
                           const SetSearchResult& result, const CompatibilityGraph& graph) {
    if (opts.format == "json") {
        out << report_json(result, graph).dump(2) << '\n';
        return;
    }
    out << "params: L=" << opts.rows << " N=" << opts.cols << " w=" << opts.weight
        << " la=" << opts.lambda_a_max << " lc=" << opts.lambda_c_max << '\n';
    out << "bound: " << result.bound << '\n';
    out << "complete: " << (result.complete ? "yes" : "no") << '\n';
    out << "sets: " << result.sets.size() << '\n';
    for (std::size_t s = 0; s < result.sets.size(); ++s) {
        const CodeSet& set = result.sets[s];
        out << "set " << s << ": size=" << set.size() << " lambda_a=" << set.lambda_a
            << " lambda_c=" << set.lambda_c << '\n';
        for (int id : set.ids) out << "  " << format_wpr(graph.vertex(id).code) << '\n';
    }
}

int run_pipeline(const PipelineOpts& opts, std::ostream& out, std::ostream& err) {
    validate(CodeParams{opts.rows, opts.cols, opts.weight});
    if (opts.lambda_a_max < 0 || opts.lambda_c_max < 0)
        throw parameter_error("--la and --lc must be >= 0");

    std::vector<MatrixCode> pool;
    if (!opts.codes_path.empty()) {
        int status = exit_ok;
        pool = load_pool(opts, err, &status);
        if (status != exit_ok) return status;
    } else {
        const std::vector<OneDimCode> words = enumerate_1d(opts.rows * opts.cols, opts.weight);
        pool = lift_and_expand(words, opts.rows, opts.cols);
    }
    std::vector<Candidate> candidates = filter_by_auto(pool, opts.lambda_a_max);
    const CompatibilityGraph graph =
        build_graph(std::move(candidates), opts.lambda_a_max, opts.lambda_c_max);

    const CliqueBudget budget{opts.max_cliques, opts.time_budget_ms};
    const CliqueEnumeration cliques = enumerate_maximal_cliques(graph, budget);
    SetSearchResult result = maximum_sets(graph, cliques);

    std::vector<CodeSet> verified;
    for (CodeSet& set : result.sets) {
        std::vector<MatrixCode> members;
        members.reserve(set.ids.size());
        for (int id : set.ids) members.push_back(graph.vertex(id).code);
        if (verify_set(members, opts.lambda_a_max, opts.lambda_c_max).all_pass)
            verified.push_back(std::move(set));
        else
            err << "warning: dropped a set failing verification\n";
    }
    result.sets = std::move(verified);

    if (!opts.catalog_path.empty()) {
        std::ofstream catalog(opts.catalog_path);
        if (!catalog) {
            err << "error: cannot open " << opts.catalog_path << '\n';
            return exit_io;
        }
        write_catalog(catalog, graph.vertices());
        catalog.flush();
        if (!catalog.good()) {
            err << "error: failed writing " << opts.catalog_path << '\n';
            return exit_io;
        }
    }

    if (opts.out_path.empty()) {
        write_pipeline_report(out, opts, result, graph);
        return exit_ok;
    }
    std::ofstream file(opts.out_path);
    if (!file) {
        err << "error: cannot open " << opts.out_path << '\n';
        return exit_io;
    }
    write_pipeline_report(file, opts, result, graph);
    file.flush();
    if (!file.good()) {
        err << "error: failed writing " << opts.out_path << '\n';
        return exit_io;
    }
    out << "bound: " << result.bound << '\n';
    out << "sets: " << result.sets.size() << '\n';
    if (!result.sets.empty()) out << "largest: " << result.sets.front().size() << '\n';
    out << "complete: " << (result.complete ? "yes" : "no") << '\n';
    out << "wrote " << opts.out_path << '\n';
    return exit_ok;
}

std::string profile_line(const CorrelationProfile& profile) {
    std::string line = profile.kind == ProfileKind::Auto ? "auto:" : "cross:";
    for (int v : profile.values) line += ' ' + std::to_string(v);
    line += profile.kind == ProfileKind::Auto ? "; lambda_a=" : "; lambda_c=";
    line += std::to_string(profile.constraint);
    return line;
}

int run_analyze(const AnalyzeOpts& opts, std::ostream& out, std::ostream& err) {
    std::ifstream file_a(opts.path_a);
    if (!file_a) {
        err << "error: cannot open " << opts.path_a << '\n';
        return exit_io;
    }
    const CodeFile a = parse_code_file(file_a);
    if (a.codes.empty()) throw parameter_error("no codes in " + opts.path_a);

    if (opts.path_b.empty()) {
        if (opts.format == "json") {
            nlohmann::ordered_json doc;
            doc["profiles"] = nlohmann::ordered_json::array();
            for (const MatrixCode& code : a.codes)
                doc["profiles"].push_back(profile_json(auto_profile(code)));
            out << doc.dump(2) << '\n';
            return exit_ok;
        }
        for (const MatrixCode& code : a.codes) out << profile_line(auto_profile(code)) << '\n';
        return exit_ok;
    }

    std::ifstream file_b(opts.path_b);
    if (!file_b) {
        err << "error: cannot open " << opts.path_b << '\n';
        return exit_io;
    }
    const CodeFile b = parse_code_file(file_b);
    if (b.codes.empty()) throw parameter_error("no codes in " + opts.path_b);

    // pairwise analysis uses the first code from each file
    const MatrixCode& code_a = a.codes.front();
    const MatrixCode& code_b = b.codes.front();
    const CorrelationProfile auto_a = auto_profile(code_a);
    const CorrelationProfile auto_b = auto_profile(code_b);
    const CorrelationProfile cross = cross_profile(code_a, code_b);
    if (opts.format == "json") {
        nlohmann::ordered_json doc;
        doc["auto_a"] = profile_json(auto_a);
        doc["auto_b"] = profile_json(auto_b);
        doc["cross"] = profile_json(cross);
        out << doc.dump(2) << '\n';
        return exit_ok;
    }
    out << profile_line(auto_a) << '\n';
    out << profile_line(auto_b) << '\n';
    out << profile_line(cross) << '\n';
    return exit_ok;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"2D unipolar orthogonal code set construction"};
    app.require_subcommand(1);

    Gen1dOpts gen1d;
    CLI::App* cmd_gen1d = app.add_subcommand("gen1d", "enumerate canonical 1D codes");
    cmd_gen1d->add_option("--n", gen1d.length, "code length")->required();
    cmd_gen1d->add_option("--w", gen1d.weight, "code weight")->required();
    cmd_gen1d->add_option("--out", gen1d.out_path, "output file (default: stdout)");
    cmd_gen1d->add_option("--format", gen1d.format, "record format")
        ->check(CLI::IsMember({"json", "text"}));

    PipelineOpts pipeline;
    CLI::App* cmd_pipeline = app.add_subcommand("pipeline", "search for maximum code sets");
    cmd_pipeline->add_option("--L", pipeline.rows, "rows")->required();
    cmd_pipeline->add_option("--N", pipeline.cols, "columns")->required();
    cmd_pipeline->add_option("--w", pipeline.weight, "code weight")->required();
    cmd_pipeline->add_option("--la", pipeline.lambda_a_max, "auto-correlation threshold")
        ->required();
    cmd_pipeline->add_option("--lc", pipeline.lambda_c_max, "cross-correlation threshold")
        ->required();
    cmd_pipeline->add_option("--max-cliques", pipeline.max_cliques,
                             "stop after this many maximal cliques (0 = unlimited)");
    cmd_pipeline->add_option("--time-budget-ms", pipeline.time_budget_ms,
                             "clique search time budget (0 = unlimited)");
    cmd_pipeline->add_option("--codes", pipeline.codes_path,
                             "candidate pool file (skips enumeration)");
    cmd_pipeline->add_option("--catalog", pipeline.catalog_path,
                             "write the candidate catalog as JSON lines");
    cmd_pipeline->add_option("--out", pipeline.out_path, "report file (default: stdout)");
    cmd_pipeline->add_option("--format", pipeline.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    AnalyzeOpts analyze;
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "correlation profiles of code files");
    cmd_analyze->add_option("file_a", analyze.path_a, "code file")->required();
    cmd_analyze->add_option("file_b", analyze.path_b, "second code file (adds cross profile)");
    cmd_analyze->add_option("--format", analyze.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (cmd_gen1d->parsed()) return run_gen1d(gen1d, out, err);
        if (cmd_pipeline->parsed()) return run_pipeline(pipeline, out, err);
        return run_analyze(analyze, out, err);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace ooc
