#include "cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gridwalk/catalog.hpp"
#include "gridwalk/config.hpp"
#include "gridwalk/errors.hpp"
#include "gridwalk/gray.hpp"
#include "gridwalk/svg.hpp"
#include "gridwalk/textio.hpp"
#include "gridwalk/walk.hpp"

namespace gridwalk::cli {

namespace {

bool looks_like_file(const std::string& arg) {
    return arg.size() > 5 && arg.rfind(".json") == arg.size() - 5;
}

GridPtr resolve_grid(const std::string& arg) {
    if (looks_like_file(arg)) return std::make_shared<const GridSpec>(load_grid_config(arg));
    return builtin_grid_ptr(arg);
}

void deliver(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
    }
}

void print_report(const WalkReport& report, std::ostream& out) {
    const auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "is_walk: " << flag(report.is_walk) << '\n';
    out << "is_eulerian: " << flag(report.is_eulerian) << '\n';
    out << "is_curve: " << flag(report.is_curve) << '\n';
    out << "is_closed: " << flag(report.is_closed) << '\n';
    out << "dimension: " << report.dimension << '\n';
}

std::string vector_text(const std::vector<double>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += fixed6(v[i]);
    }
    return s + ")";
}

int run_curve_gen(const std::string& name, int n, const std::string& format,
                  const std::string& out_path, std::ostream& out) {
    Symbols seq;
    Walk walk;
    bool have_walk = false;
    if (name == "brgray") {
        // For the reflected Gray code the parameter is the dimension.
        walk = brgray(n);
        seq = walk.steps;
        have_walk = true;
    } else {
        seq = curve_sequence(name, n);
        const CurveEntry& entry = curve_entry(name);
        if (!entry.grid_name.empty()) {
            walk = curve_walk(name, n);
            have_walk = true;
        }
    }

    if (format == "indices") {
        deliver(write_index_sequence(seq), out_path, out);
    } else if (format == "bfile") {
        deliver(emit_bfile(seq, 1), out_path, out);
    } else if (format == "points") {
        if (!have_walk) throw ValidationError("curve '" + name + "' has no grid binding");
        deliver(write_points(*walk.grid, decode(walk)), out_path, out);
    } else if (format == "svg") {
        if (!have_walk) throw ValidationError("curve '" + name + "' has no grid binding");
        deliver(render_svg(*walk.grid, {walk}), out_path, out);
    } else {
        throw ParseError("unknown format: " + format);
    }
    return 0;
}

int run_grid_show(const std::string& arg, bool as_svg, std::ostream& out) {
    GridPtr grid = resolve_grid(arg);
    if (as_svg) {
        out << render_svg(*grid, grid_patch(grid, 2));
        return 0;
    }
    out << "dimension: " << grid->dimension() << '\n';
    out << "basis:";
    for (const auto& b : grid->basis()) out << ' ' << vector_text(b);
    out << '\n';
    out << "anchors:";
    for (const auto& a : grid->anchors()) {
        std::string s = " (";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ", ";
            s += to_string(a[i]);
        }
        out << s << ')';
    }
    out << '\n';
    for (int k = 1; k <= grid->generator_count(); ++k) {
        const EdgeGenerator& g = grid->generators()[static_cast<std::size_t>(k - 1)];
        out << "generator " << k << ": anchor " << g.from_anchor << " -> " << g.to_anchor
            << ", offset (";
        for (std::size_t i = 0; i < g.offset.size(); ++i) {
            if (i) out << ", ";
            out << g.offset[i];
        }
        out << "), real " << vector_text(grid->generator_real_vector(k)) << '\n';
    }
    return 0;
}

int run_walk_verify(const std::string& grid_arg, const std::string& file, std::ostream& out) {
    GridPtr grid = resolve_grid(grid_arg);
    const std::vector<int> steps = parse_index_sequence(read_file(file));
    try {
        const WalkReport report = classify(make_walk(grid, steps));
        print_report(report, out);
    } catch (const DecodeError& e) {
        out << "is_walk: false\n";
        out << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run_gray(int dim, const std::string& check_file, bool enumerate, std::ostream& out) {
    if (!check_file.empty()) {
        const BinaryCode code = parse_code_lines(read_file(check_file));
        out << "is_gray_code: " << (is_gray_code(code) ? "true" : "false") << '\n';
        out << "is_brgray: " << (is_brgray(code) ? "true" : "false") << '\n';
        return 0;
    }
    if (enumerate) {
        const std::vector<BinaryCode> codes = enumerate_gray_codes(dim);
        std::size_t brgray_count = 0;
        for (const BinaryCode& code : codes) brgray_count += is_brgray(code);
        out << "codes: " << codes.size() << '\n';
        out << "brgray: " << brgray_count << '\n';
        out << "orbit: " << isometry_orbit(dim).size() << '\n';
        return 0;
    }
    out << write_code_lines(code_of_walk(brgray(dim)));
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"grid graphs, index notation and rewriting curves"};
    app.name("gridwalk");
    app.require_subcommand(1);

    // curve
    auto* curve = app.add_subcommand("curve", "catalog curves");
    curve->require_subcommand(1);
    curve->add_subcommand("list", "list catalog entries");
    auto* curve_gen = curve->add_subcommand("gen", "emit a catalog curve");
    std::string curve_name;
    int curve_n = 0;
    std::string curve_format = "indices";
    std::string curve_out;
    curve_gen->add_option("name", curve_name, "catalog entry")->required();
    curve_gen->add_option("-n,--generation", curve_n,
                          "generation (dimension for brgray)")->required();
    curve_gen->add_option("--format", curve_format, "indices|points|bfile|svg")
        ->check(CLI::IsMember({"indices", "points", "bfile", "svg"}));
    curve_gen->add_option("-o,--output", curve_out, "write to a file instead of stdout");

    // lsys
    auto* lsys = app.add_subcommand("lsys", "rewriting systems from config files");
    lsys->require_subcommand(1);
    auto* lsys_run = lsys->add_subcommand("run", "print a generation");
    std::string lsys_config;
    int lsys_n = 0;
    int lsys_squared = -1;
    lsys_run->add_option("config", lsys_config, "l-system config (JSON)")->required();
    auto* lsys_n_opt = lsys_run->add_option("-n,--generation", lsys_n, "generation index");
    lsys_run->add_option("--squared", lsys_squared,
                         "emit generation 2^M via repeated squaring")
        ->excludes(lsys_n_opt);

    // grid
    auto* grid_cmd = app.add_subcommand("grid", "grid inspection");
    grid_cmd->require_subcommand(1);
    auto* grid_show = grid_cmd->add_subcommand("show", "describe a grid");
    std::string grid_arg;
    bool grid_svg = false;
    grid_show->add_option("grid", grid_arg, "builtin name or config file")->required();
    grid_show->add_flag("--svg", grid_svg, "render a patch of the grid as SVG");

    // walk
    auto* walk_cmd = app.add_subcommand("walk", "index-notation walks");
    walk_cmd->require_subcommand(1);
    auto* walk_verify = walk_cmd->add_subcommand("verify", "classify an index sequence");
    std::string verify_grid;
    std::string verify_file;
    walk_verify->add_option("--grid", verify_grid, "builtin name or config file")->required();
    walk_verify->add_option("file", verify_file, "index sequence file")->required();
    auto* walk_random = walk_cmd->add_subcommand("random", "seeded random walk");
    std::string random_grid;
    std::uint64_t random_steps = 0;
    std::uint64_t random_seed = 0;
    bool no_backtrack = false;
    walk_random->add_option("--grid", random_grid, "builtin name or config file")->required();
    walk_random->add_option("--steps", random_steps, "number of steps")->required();
    walk_random->add_option("--seed", random_seed, "PRNG seed")->required();
    walk_random->add_flag("--no-backtrack", no_backtrack, "never undo the previous step");

    // gray
    auto* gray_cmd = app.add_subcommand("gray", "binary reflected Gray codes");
    int gray_dim = 0;
    std::string gray_check;
    bool gray_enumerate = false;
    gray_cmd->add_option("--dim", gray_dim, "cube dimension")->required();
    gray_cmd->add_option("--check", gray_check, "classify a code file (bit-string lines)");
    gray_cmd->add_flag("--enumerate", gray_enumerate, "count Hamiltonian paths from the origin");

    try {
        // CLI11 consumes a reversed, mutable copy.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (curve->parsed()) {
            if (curve->get_subcommand("list")->parsed()) {
                for (const std::string& name : curve_names()) out << name << '\n';
                return 0;
            }
            return run_curve_gen(curve_name, curve_n, curve_format, curve_out, out);
        }
        if (lsys->parsed()) {
            const LSystem ls = load_lsystem_config(lsys_config);
            const Symbols seq =
                (lsys_squared >= 0) ? generation_by_squaring(ls, lsys_squared) : generation(ls, lsys_n);
            out << write_index_sequence(seq);
            return 0;
        }
        if (grid_cmd->parsed()) return run_grid_show(grid_arg, grid_svg, out);
        if (walk_cmd->parsed()) {
            if (walk_verify->parsed()) return run_walk_verify(verify_grid, verify_file, out);
            const Walk walk =
                random_walk(resolve_grid(random_grid), random_steps, random_seed, no_backtrack);
            out << write_index_sequence(walk.steps);
            return 0;
        }
        if (gray_cmd->parsed()) return run_gray(gray_dim, gray_check, gray_enumerate, out);
        err << app.help();
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace gridwalk::cli
