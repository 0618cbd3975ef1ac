#include "lgw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lgw/acceptance.hpp"
#include "lgw/degeneration.hpp"
#include "lgw/json_io.hpp"
#include "lgw/svg.hpp"

namespace lgw::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file '" + path + "'");
    out << content;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

// emit to --output when given, otherwise to stdout
void emit(const std::string& output_path, const std::string& content, std::ostream& out) {
    if (output_path.empty())
        out << content << "\n";
    else
        write_file(output_path, content);
}

// LGW_SEED overrides any flag- or config-level seed
std::uint64_t resolve_seed(std::optional<std::uint64_t> requested) {
    if (const char* env = std::getenv("LGW_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw input_error("LGW_SEED is not an unsigned integer");
        }
    }
    return requested.value_or(default_seed);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact curve counts for the log Calabi-Yau surfaces built from the plane"};
    app.require_subcommand(1);

    // scatter
    auto* scatter = app.add_subcommand("scatter", "complete a scattering diagram order by order");
    std::string scatter_input, scatter_output, scatter_svg;
    int scatter_order = 0;
    scatter->add_option("--input", scatter_input, "diagram JSON")->required();
    scatter->add_option("--order", scatter_order, "truncation order")->required();
    scatter->add_option("--output", scatter_output, "output path (default stdout)");
    scatter->add_option("--svg", scatter_svg, "render the walls to an SVG file");

    // invariants
    auto* invariants = app.add_subcommand("invariants", "compute the log Gromov-Witten numbers");
    invariants->require_subcommand(1);
    auto* inv_toric = invariants->add_subcommand("toric-p2", "triangle of lines, single degree");
    int toric_degree = 0;
    inv_toric->add_option("--degree", toric_degree, "curve degree d >= 1")->required();
    std::optional<std::uint64_t> toric_seed;
    inv_toric->add_option("--seed", toric_seed, "genericity seed");

    auto* inv_lc = invariants->add_subcommand("line-conic", "line plus conic, degrees 1..D");
    int lc_max = 0;
    bool lc_tropical = false;
    std::optional<std::uint64_t> lc_seed;
    inv_lc->add_option("--max-degree", lc_max, "maximal degree D >= 1")->required();
    inv_lc->add_flag("--use-tropical", lc_tropical,
                     "route the Hirzebruch counts through tropical enumeration");
    inv_lc->add_option("--seed", lc_seed, "genericity seed");

    auto* inv_nc = invariants->add_subcommand("nodal-cubic", "nodal cubic, degrees 1..D");
    int nc_max = 0;
    inv_nc->add_option("--max-degree", nc_max, "maximal degree D >= 1")->required();

    // tropical count
    auto* tropical = app.add_subcommand("tropical", "tropical curve enumeration");
    tropical->require_subcommand(1);
    auto* trop_count = tropical->add_subcommand("count", "enumerate curves for a config");
    std::string trop_config, trop_svg;
    std::optional<std::uint64_t> trop_seed;
    trop_count->add_option("--config", trop_config, "enumeration config JSON")->required();
    trop_count->add_option("--svg", trop_svg, "render the curves to an SVG file");
    trop_count->add_option("--seed", trop_seed, "genericity seed");

    // fan
    auto* fan_cmd = app.add_subcommand("fan", "smooth complete toric surface fans");
    fan_cmd->require_subcommand(1);
    std::string fan_input, fan_output, fan_svg;
    auto add_fan_io = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("--input", fan_input, "fan JSON")->required();
        sub->add_option("--output", fan_output, "output path (default stdout)");
        sub->add_option("--svg", fan_svg, "render the fan to an SVG file");
    };
    auto* fan_selfint = fan_cmd->add_subcommand("selfint", "self-intersection sequence");
    add_fan_io(fan_selfint, true);
    auto* fan_from = fan_cmd->add_subcommand("from-selfint", "reconstruct a fan");
    std::vector<long> fan_ints;
    fan_from->add_option("--ints", fan_ints, "self-intersection sequence")
        ->required()
        ->delimiter(',');
    add_fan_io(fan_from, false);
    auto* fan_blowup = fan_cmd->add_subcommand("blowup", "corner blow-up");
    std::size_t fan_corner = 0;
    fan_blowup->add_option("--corner", fan_corner, "corner between rays i and i+1")->required();
    add_fan_io(fan_blowup, true);
    auto* fan_blowdown = fan_cmd->add_subcommand("blowdown", "contract a (-1)-ray");
    std::size_t fan_ray = 0;
    fan_blowdown->add_option("--ray", fan_ray, "ray index")->required();
    add_fan_io(fan_blowdown, true);
    auto* fan_sl2 = fan_cmd->add_subcommand("sl2", "apply a lattice automorphism");
    std::vector<long> fan_matrix;
    fan_sl2->add_option("--matrix", fan_matrix, "row-major a,b,c,d with ad-bc = 1")
        ->required()
        ->delimiter(',');
    add_fan_io(fan_sl2, true);

    // chow
    auto* chow = app.add_subcommand("chow", "divisor-class verification");
    chow->require_subcommand(1);
    auto* chow_verify = chow->add_subcommand("verify", "run all class and specialization checks");

    // acceptance
    auto* acceptance = app.add_subcommand("acceptance", "run the acceptance suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, out);  // --help
        throw;
    }

    if (scatter->parsed()) {
        if (scatter_order < 1) throw input_error("scatter: --order must be >= 1");
        ScatteringDiagram input =
            diagram_from_json(parse_json(read_file(scatter_input)), scatter_order);
        ScatteringDiagram done = complete(input, scatter_order);
        emit(scatter_output, diagram_to_json(done).dump(2), out);
        if (!scatter_svg.empty()) write_file(scatter_svg, diagram_to_svg(done));
        return 0;
    }
    if (inv_toric->parsed()) {
        if (toric_degree < 1) throw input_error("invariants toric-p2: --degree must be >= 1");
        Rational n = count_p2_toric(toric_degree, resolve_seed(toric_seed));
        out << ojson{{"d", toric_degree}, {"N", n.str()}}.dump() << "\n";
        return 0;
    }
    if (inv_lc->parsed()) {
        if (lc_max < 1) throw input_error("invariants line-conic: --max-degree must be >= 1");
        std::uint64_t seed = resolve_seed(lc_seed);
        ojson arr = ojson::array();
        for (int d = 1; d <= lc_max; ++d) {
            Rational n = lc_tropical
                             ? degeneration_sum(
                                   d, [&](const Partition& m) { return count_f2(d, m, seed); })
                             : line_conic_invariant(d);
            arr.push_back(ojson{{"d", d}, {"N", n.str()}});
        }
        out << arr.dump() << "\n";
        return 0;
    }
    if (inv_nc->parsed()) {
        if (nc_max < 1) throw input_error("invariants nodal-cubic: --max-degree must be >= 1");
        std::vector<Rational> inv = nodal_cubic_invariants(nc_max);
        ojson arr = ojson::array();
        for (int d = 1; d <= nc_max; ++d) arr.push_back(ojson{{"d", d}, {"N", inv[d - 1].str()}});
        out << arr.dump() << "\n";
        return 0;
    }
    if (trop_count->parsed()) {
        TropicalConfig cfg = tropical_config_from_json(parse_json(read_file(trop_config)));
        EnumResult res;
        if (cfg.has_instance) {
            res = enumerate_curves(cfg.degree, cfg.instance);
        } else {
            std::uint64_t seed =
                resolve_seed(trop_seed ? trop_seed
                                       : (cfg.has_seed ? std::optional<std::uint64_t>(cfg.seed)
                                                       : std::nullopt));
            PointSource source(seed);
            res = enumerate_curves(cfg.degree, source);
        }
        out << enum_result_to_json(res).dump() << "\n";
        if (!trop_svg.empty()) write_file(trop_svg, curves_to_svg(res, res.used_instance));
        return 0;
    }
    if (fan_cmd->parsed()) {
        Fan result({{1, 0}, {0, 1}, {-1, -1}});
        bool print_selfint = false;
        if (fan_selfint->parsed()) {
            result = fan_from_json(parse_json(read_file(fan_input)));
            print_selfint = true;
        } else if (fan_from->parsed()) {
            result = fan_from_self_intersections(fan_ints);
        } else if (fan_blowup->parsed()) {
            result = blow_up(fan_from_json(parse_json(read_file(fan_input))), fan_corner);
        } else if (fan_blowdown->parsed()) {
            result = blow_down(fan_from_json(parse_json(read_file(fan_input))), fan_ray);
        } else if (fan_sl2->parsed()) {
            if (fan_matrix.size() != 4) throw input_error("fan sl2: matrix needs 4 entries");
            result = apply_sl2(fan_from_json(parse_json(read_file(fan_input))),
                               {fan_matrix[0], fan_matrix[1], fan_matrix[2], fan_matrix[3]});
        }
        if (print_selfint) {
            emit(fan_output, json{{"selfint", self_intersections(result)}}.dump(), out);
        } else {
            emit(fan_output, fan_to_json(result).dump(), out);
        }
        if (!fan_svg.empty()) write_file(fan_svg, fan_to_svg(result));
        return 0;
    }
    if (chow_verify->parsed()) {
        CheckReport chow_rep = chow_verify_blowup_plane();
        auto [sH, prelog_rep] = specialize_H();
        json result{{"chow", check_report_to_json(chow_rep)},
                    {"specialization", check_report_to_json(prelog_rep)},
                    {"sigma_H", {{"f2_side", sH.f2_side}, {"y_side", sH.y_side}}}};
        out << result.dump(2) << "\n";
        return chow_rep.all_pass() && prelog_rep.all_pass() ? 0 : 1;
    }
    if (acceptance->parsed()) {
        auto results = run_acceptance();
        bool all = true;
        ojson arr = ojson::array();
        for (const auto& r : results) {
            all = all && r.pass;
            arr.push_back(ojson{{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                                {"detail", r.detail}});
        }
        out << arr.dump(2) << "\n";
        return all ? 0 : 1;
    }
    throw input_error("no command given");
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    try {
        code = dispatch(args, out);
    } catch (const CLI::ParseError& e) {
        out << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        code = 2;
    } catch (const input_error& e) {
        out << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        code = 2;
    } catch (const computation_error& e) {
        out << json{{"error", "computation"}, {"detail", e.what()}}.dump() << "\n";
        code = 1;
    } catch (const std::exception& e) {
        out << json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
        code = 1;
    }
    return {code, out.str(), err.str()};
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CommandResult result = run_command(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}

}  // namespace lgw::cli
