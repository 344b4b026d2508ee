#include "sft/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "sft/dsl.hpp"
#include "sft/errors.hpp"
#include "sft/json_io.hpp"

namespace sft {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SftError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SftError("cannot write '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// Rows top-down, one display character per cell.
void print_grid(std::ostream& out, const Grid& g, const std::vector<char>& chars) {
    for (int y = g.shape()[1] - 1; y >= 0; --y) {
        for (int x = 0; x < g.shape()[0]; ++x)
            out << chars[static_cast<std::size_t>(g.at2(x, y))];
        out << '\n';
    }
}

void print_point(std::ostream& out, const PeriodicPoint& p, const Alphabet& a) {
    const auto& periods = p.torus.periods();
    out << "periods:";
    for (int q : periods) out << ' ' << q;
    out << '\n';
    if (p.torus.dim() == 2) {
        print_grid(out, p.torus.cells, symbol_chars(a));
    } else {
        out << "cells:";
        for (auto s : p.torus.cells.cells()) out << ' ' << a.name(s);
        out << '\n';
    }
}

int report_exit_code(const AnalysisReport& r) {
    return r.verdict == Verdict::Unknown ? 2 : 0;
}

void print_report(std::ostream& out, const AnalysisReport& r, const Alphabet& a, bool json,
                  bool timings, double elapsed_ms) {
    if (json) {
        Json j = to_json(r, a);
        if (timings) j["timings"] = Json{{"total_ms", elapsed_ms}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "status: " << to_string(r.verdict) << '\n';
    if (r.empty_witness_n) out << "witness_n: " << *r.empty_witness_n << '\n';
    if (r.certificate) print_point(out, *r.certificate, a);
    if (!r.diagnostic.empty()) out << "diagnostic: " << r.diagnostic << '\n';
    if (timings) out << "total_ms: " << elapsed_ms << '\n';
}

struct Options {
    std::string file;
    Budgets budgets;
    bool list = false;
    bool json = false;
    bool no_prune = false;
    bool timings = false;
    std::string dot_path;
    std::string format = "text";
    std::string render_format = "ascii";
    std::string out_path;
    int width = 0;
    int height = 0;
};

void add_budget_options(CLI::App* cmd, Budgets& b) {
    cmd->add_option("--max-cubes", b.max_cubes, "Cube enumeration cap");
    cmd->add_option("--max-window-cells", b.max_window_cells, "Torus/window cell cap");
    cmd->add_option("--max-strip-candidates", b.max_strip_candidates, "Strip candidate cap");
    cmd->add_option("--max-block-pairs", b.max_block_pairs, "Block pair cap");
    cmd->add_option("--max-matrix-pairs", b.max_matrix_pairs, "Matrix pair cap");
}

int dispatch(const std::string& verb, Options& opt, std::ostream& out) {
    if (verb == "render") {
        auto [point, alphabet] = point_from_json(Json::parse(read_file(opt.file)));
        auto bytes = render_point(point, alphabet, opt.width, opt.height, opt.render_format);
        if (opt.out_path.empty())
            out << bytes;
        else
            write_file(opt.out_path, bytes);
        return 0;
    }

    auto doc = parse_spec(read_file(opt.file));
    const SftSpec& spec = doc.spec;

    if (verb == "normalize") {
        auto cubes = normalize_to_cubes(spec, opt.budgets.max_cubes);
        out << "l=" << cubes.side << ", allowed_cubes=" << cubes.allowed.size() << '\n';
        if (opt.list) {
            auto chars = symbol_chars(spec.alphabet);
            for (const auto& cube : cubes.allowed) {
                if (cube.dim() == 2) {
                    print_grid(out, cube, chars);
                } else {
                    for (auto s : cube.cells()) out << spec.alphabet.name(s) << ' ';
                    out << '\n';
                }
                out << '\n';
            }
        }
        return 0;
    }
    if (verb == "blocks") {
        auto cubes = normalize_to_cubes(spec, opt.budgets.max_cubes);
        auto blocks = build_blocks(spec, cubes);
        out << "l=" << cubes.side << ", blocks=" << blocks.size() << '\n';
        if (opt.list) {
            auto chars = symbol_chars(spec.alphabet);
            for (const auto& b : blocks) {
                print_grid(out, b, chars);
                out << '\n';
            }
        }
        return 0;
    }
    if (verb == "hmatrix") {
        auto cubes = normalize_to_cubes(spec, opt.budgets.max_cubes);
        auto blocks = build_blocks(spec, cubes);
        auto vpairs = build_vpairs(spec, blocks);
        auto matrix = build_hmatrix(spec, vpairs);
        if (!opt.dot_path.empty()) write_file(opt.dot_path, to_dot(matrix));
        out << to_json(matrix, spec.alphabet).dump(2) << '\n';
        return 0;
    }
    if (verb == "strips") {
        auto cubes = normalize_to_cubes(spec, opt.budgets.max_cubes);
        auto blocks = build_blocks(spec, cubes);
        auto strips = enumerate_strips(spec, blocks, opt.budgets.max_period,
                                       opt.budgets.max_strip_candidates,
                                       opt.budgets.max_block_pairs);
        if (opt.json) {
            Json j = Json::array();
            for (const auto& s : strips) j.push_back(to_json(s, spec.alphabet));
            out << j.dump(2) << '\n';
            return 0;
        }
        out << "strips=" << strips.size() << '\n';
        auto chars = symbol_chars(spec.alphabet);
        for (const auto& s : strips) {
            out << "q=" << s.period() << '\n';
            print_grid(out, s.cells, chars);
            out << '\n';
        }
        return 0;
    }
    if (verb == "matrix") {
        auto cubes = normalize_to_cubes(spec, opt.budgets.max_cubes);
        auto blocks = build_blocks(spec, cubes);
        auto strips = enumerate_strips(spec, blocks, opt.budgets.max_period,
                                       opt.budgets.max_strip_candidates,
                                       opt.budgets.max_block_pairs);
        auto matrix = build_strip_matrix(spec, strips);
        if (!opt.no_prune) matrix = prune(matrix);
        if (!opt.dot_path.empty()) write_file(opt.dot_path, to_dot(matrix));
        out << to_json(matrix, spec.alphabet).dump(2) << '\n';
        return 0;
    }
    if (verb == "analyze" || verb == "find-periodic") {
        auto start = std::chrono::steady_clock::now();
        AnalysisReport report = verb == "analyze" ? analyze(spec, opt.budgets)
                                                  : find_periodic(spec, opt.budgets);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        print_report(out, report, spec.alphabet, opt.format == "json", opt.timings, ms);
        return report_exit_code(report);
    }
    throw SftError("unknown subcommand '" + verb + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subshift-of-finite-type analysis: normalization, strip matrices, "
                 "periodic points, emptiness"};
    app.require_subcommand(1);

    Options opt;
    if (const char* cap = std::getenv("SFT_MAX_CELLS")) {
        char* end = nullptr;
        auto v = std::strtoull(cap, &end, 10);
        if (end && *end == '\0' && v > 0) opt.budgets.max_window_cells = v;
    }

    auto* normalize = app.add_subcommand("normalize", "Normalize forbidden patterns to cubes");
    normalize->add_option("file", opt.file, "Spec file")->required();
    normalize->add_flag("--list", opt.list, "Print each allowed cube");
    add_budget_options(normalize, opt.budgets);

    auto* blocks = app.add_subcommand("blocks", "List allowed blocks (2-d)");
    blocks->add_option("file", opt.file, "Spec file")->required();
    blocks->add_flag("--list", opt.list, "Print each block");
    add_budget_options(blocks, opt.budgets);

    auto* hmatrix = app.add_subcommand("hmatrix", "Horizontal transition matrix over stacked pairs (2-d)");
    hmatrix->add_option("file", opt.file, "Spec file")->required();
    hmatrix->add_option("--dot", opt.dot_path, "Also write a DOT digraph here");
    add_budget_options(hmatrix, opt.budgets);

    auto* strips = app.add_subcommand("strips", "Enumerate canonical periodic strips (2-d)");
    strips->add_option("file", opt.file, "Spec file")->required();
    strips->add_option("--max-period", opt.budgets.max_period, "Largest strip period");
    strips->add_flag("--json", opt.json, "JSON output");
    add_budget_options(strips, opt.budgets);

    auto* matrix = app.add_subcommand("matrix", "Build the strip transition matrix (2-d)");
    matrix->add_option("file", opt.file, "Spec file")->required();
    matrix->add_option("--max-period", opt.budgets.max_period, "Largest strip period");
    matrix->add_option("--dot", opt.dot_path, "Also write a DOT digraph here");
    matrix->add_flag("--no-prune", opt.no_prune, "Keep the unpruned matrix");
    add_budget_options(matrix, opt.budgets);

    auto* analyze_cmd = app.add_subcommand("analyze", "Decide nonemptiness at this budget");
    analyze_cmd->add_option("file", opt.file, "Spec file")->required();
    analyze_cmd->add_option("--max-period", opt.budgets.max_period, "Largest strip period");
    analyze_cmd->add_option("--max-square", opt.budgets.n_max, "Largest emptiness window");
    analyze_cmd->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_flag("--timings", opt.timings, "Include wall-clock timings");
    add_budget_options(analyze_cmd, opt.budgets);

    auto* find = app.add_subcommand("find-periodic", "Search for a verified periodic point");
    find->add_option("file", opt.file, "Spec file")->required();
    find->add_option("--max-period", opt.budgets.max_period, "Largest strip period");
    find->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    find->add_flag("--timings", opt.timings, "Include wall-clock timings");
    add_budget_options(find, opt.budgets);

    auto* render = app.add_subcommand("render", "Draw a periodic point");
    render->add_option("file", opt.file, "Point JSON file")->required();
    render->add_option("--format", opt.render_format, "ascii or ppm")
        ->check(CLI::IsMember({"ascii", "ppm"}));
    render->add_option("--width", opt.width, "View width")->required();
    render->add_option("--height", opt.height, "View height")->required();
    render->add_option("--out", opt.out_path, "Write to this file instead of standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const Json::parse_error& e) {
        err << "error: " << opt.file << ": " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << opt.file << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace sft
