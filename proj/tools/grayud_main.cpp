// Command-line driver: generate the Gray graph three ways, certify the
// unit-distance construction, map the feasible parameter region and
// render figures.
//
// Exit codes: 0 success, 1 usage/parse error, 2 domain/degeneracy error,
// 3 verification failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grayud/configuration.hpp"
#include "grayud/embedding.hpp"
#include "grayud/errors.hpp"
#include "grayud/graph.hpp"
#include "grayud/isomorphism.hpp"
#include "grayud/render.hpp"
#include "grayud/serialize.hpp"
#include "grayud/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

// Temp file plus rename so sweeps never see partially written artifacts.
void write_atomically(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    const std::filesystem::path temp = target.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + temp.string());
        out << content;
        if (!out) throw std::runtime_error("failed writing " + temp.string());
    }
    std::filesystem::rename(temp, target);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomically(out_path, content);
}

double to_radians(double value, bool degrees) {
    return degrees ? value * std::numbers::pi / 180.0 : value;
}

int run_generate(const std::string& source, double h, double theta,
                 const std::string& out_path) {
    grayud::Graph graph;
    if (source == "lcf") {
        graph = grayud::gray_graph();
    } else if (source == "levi") {
        graph = grayud::levi_graph(grayud::grid3_configuration(3));
    } else if (source == "construction") {
        graph = grayud::extract_graph(grayud::assemble({h, theta}));
    } else {
        std::cerr << "error: unknown source \"" << source << "\"\n";
        return kExitUsage;
    }
    emit(out_path, grayud::graph_to_json(graph) + "\n");
    return kExitOk;
}

int run_certify(double h, double theta, double tol, double sep_threshold,
                const std::string& out_path) {
    const grayud::Embedding e = grayud::assemble({h, theta}, sep_threshold);
    const grayud::ValidationReport report = grayud::validate(e, tol, sep_threshold);

    const bool unit_ok = report.max_edge_length_error <= tol;
    const bool separation_ok = report.coincident_pairs.empty();
    const bool symmetry_ok =
        report.symmetry_order == 3 && report.induced_symmetry_permutation &&
        grayud::is_semiregular(*report.induced_symmetry_permutation, 3);
    const bool pass = unit_ok && separation_ok && symmetry_ok && report.isomorphic_to_gray;

    nlohmann::json doc;
    doc["params"]["h"] = h;
    doc["params"]["theta"] = theta;
    doc["tolerances"]["unit"] = tol;
    doc["tolerances"]["separation"] = sep_threshold;
    doc["vertices"] = e.graph.vertex_count();
    doc["edges"] = e.graph.edge_count();
    doc["max_edge_length_error"] = report.max_edge_length_error;
    doc["min_vertex_separation"] = report.min_vertex_separation;
    doc["accidental_unit_pairs"] = report.accidental_unit_pairs.size();
    doc["symmetry_order"] = report.symmetry_order;
    doc["symmetry_semiregular_z3"] = symmetry_ok;
    if (report.induced_symmetry_permutation)
        doc["symmetry_permutation"] = report.induced_symmetry_permutation->image();
    doc["unit_distance"] = unit_ok;
    doc["no_coincidences"] = separation_ok;
    doc["isomorphic_to_gray"] = report.isomorphic_to_gray;
    doc["pass"] = pass;
    emit(out_path, doc.dump() + "\n");
    return pass ? kExitOk : kExitVerification;
}

int run_sweep(double h_lo, double h_hi, double theta_lo, double theta_hi,
              int steps_h, int steps_theta, double tol, double sep_threshold,
              const std::string& out_path) {
    const grayud::FeasibilityMap map = grayud::sweep(h_lo, h_hi, theta_lo, theta_hi,
                                                     steps_h, steps_theta, tol,
                                                     sep_threshold);
    emit(out_path, grayud::sweep_to_csv(map));
    return kExitOk;
}

int run_render(double h, double theta, bool circles, const std::string& out_path) {
    const grayud::Embedding e = grayud::assemble({h, theta});
    grayud::RenderStyle style;
    style.circle_overlay = circles;
    emit(out_path, grayud::to_svg(e, style));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-distance constructions and certificates for the Gray graph"};
    app.require_subcommand(1);
    // --h is a domain flag, so the short help alias is unavailable
    app.set_help_flag("--help", "Print help and exit");

    bool degrees = false;
    app.add_flag("--degrees", degrees, "Interpret angles in degrees (default: radians)");

    std::string source = "lcf";
    double h = 0.6;
    double theta = 0.3;
    double tol = grayud::kDefaultUnitTolerance;
    double sep_threshold = grayud::kDefaultSeparationThreshold;
    std::string out_path;
    bool circles = false;
    std::vector<int> steps{16, 16};
    std::vector<double> h_range{0.1, 0.95};
    std::vector<double> theta_range{0.0, 2.0 * std::numbers::pi / 3.0};

    auto* generate = app.add_subcommand("generate", "Emit the Gray graph as JSON");
    generate->add_option("--source", source, "Construction: lcf, levi or construction")
        ->check(CLI::IsMember({"lcf", "levi", "construction"}));
    generate->add_option("--h", h, "Hexagon circumradius (construction source)");
    generate->add_option("--theta", theta, "Vector star rotation (construction source)");
    generate->add_option("--out", out_path, "Output path (default: stdout)");

    auto* certify = app.add_subcommand(
        "certify", "Assemble, validate and certify the unit-distance embedding");
    certify->add_option("--h", h, "Hexagon circumradius");
    certify->add_option("--theta", theta, "Vector star rotation");
    certify->add_option("--tol", tol, "Unit-length tolerance");
    certify->add_option("--sep-threshold", sep_threshold, "Coincidence threshold");
    certify->add_option("--out", out_path, "Output path (default: stdout)");

    auto* sweep = app.add_subcommand("sweep", "Feasibility map over (h, theta) as CSV");
    sweep->add_option("--h-range", h_range, "h grid endpoints LO HI")->expected(2);
    sweep->add_option("--theta-range", theta_range, "theta grid endpoints LO HI")
        ->expected(2);
    sweep->add_option("--steps", steps, "Grid resolution H T")->expected(2);
    sweep->add_option("--tol", tol, "Unit-length tolerance");
    sweep->add_option("--sep-threshold", sep_threshold, "Coincidence threshold");
    sweep->add_option("--out", out_path, "Output path (default: stdout)");

    auto* render = app.add_subcommand("render", "Draw the embedding as SVG");
    render->add_option("--h", h, "Hexagon circumradius");
    render->add_option("--theta", theta, "Vector star rotation");
    render->add_flag("--circles", circles, "Overlay unit circles at hollow vertices");
    render->add_option("--out", out_path, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const double theta_rad = to_radians(theta, degrees);
        if (generate->parsed())
            return run_generate(source, h, theta_rad, out_path);
        if (certify->parsed())
            return run_certify(h, theta_rad, tol, sep_threshold, out_path);
        if (sweep->parsed())
            return run_sweep(h_range[0], h_range[1],
                             to_radians(theta_range[0], degrees),
                             to_radians(theta_range[1], degrees), steps[0], steps[1],
                             tol, sep_threshold, out_path);
        if (render->parsed())
            return run_render(h, theta_rad, circles, out_path);
    } catch (const grayud::DomainError& err) {
        std::cerr << "error: no_intersection: " << err.what() << "\n";
        return kExitDomain;
    } catch (const grayud::DegenerateError& err) {
        std::cerr << "error: degenerate: " << err.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
