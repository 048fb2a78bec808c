/*
 * cli.hpp
 * -------
 * Command-line front end. Subcommands: newton, trace, curvature, fibers,
 * classify, raster, report. Exit codes: 0/1/2 are the classify verdict
 * contract (Harnack / NotHarnack / Inconclusive; 0 also means plain success
 * elsewhere), 64 is a usage or input error, 70 an internal failure.
 * Diagnostics go to stderr as one JSON object per error, never a stack
 * trace; floating-point output uses 17 significant digits everywhere.
 */
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amoebalab/classify.hpp"
#include "amoebalab/config.hpp"
#include "amoebalab/curvature.hpp"
#include "amoebalab/gauss.hpp"
#include "amoebalab/lattice.hpp"
#include "amoebalab/laurent.hpp"
#include "amoebalab/raster.hpp"
#include "amoebalab/svg.hpp"
#include "amoebalab/trace.hpp"

namespace amoebalab {

namespace clidetail {

/// Serialize with every floating-point number at 17 significant digits.
inline void dump17(const nlohmann::ordered_json& j, std::string& out) {
    using nlohmann::ordered_json;
    switch (j.type()) {
        case ordered_json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += ordered_json(it.key()).dump();
                out += ':';
                dump17(it.value(), out);
            }
            out += '}';
            break;
        }
        case ordered_json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                dump17(v, out);
            }
            out += ']';
            break;
        }
        case ordered_json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
            out += buf;
            break;
        }
        default:
            out += j.dump();
    }
}

inline std::string dump17(const nlohmann::ordered_json& j) {
    std::string out;
    dump17(j, out);
    out += '\n';
    return out;
}

inline LaurentPoly load_poly(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open polynomial file " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        std::size_t k = text.find_first_not_of(" \t\r\n");
        if (k != std::string::npos && text[k] == '{')
            return poly_from_json(nlohmann::json::parse(text));
        return parse(text);
    }
    return parse(spec);
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

inline nlohmann::ordered_json config_echo(const RunConfig& cfg, const LaurentPoly& p) {
    return {{"polynomial", to_json(p)},
            {"window", cfg.window},
            {"grid_n", cfg.grid_n},
            {"theta_samples", cfg.theta_samples},
            {"resolution", cfg.resolution},
            {"n_phi", cfg.n_phi},
            {"seed", cfg.seed}};
}

}  // namespace clidetail

inline int run_cli(std::vector<std::string> args) {
    using clidetail::dump17;
    CLI::App app{"real amoeba curvature laboratory"};
    app.require_subcommand(1);

    std::string poly_arg;
    std::string out_dir;
    std::string config_path;
    RunConfig cfg;
    std::map<std::string, double> tol_overrides;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-p,--poly", poly_arg,
                        "polynomial expression, or @file (text or JSON)")
            ->required();
        cmd->add_option("-o,--out", out_dir, "output directory for artifact files");
        cmd->add_option("--config", config_path, "JSON config file (flags win)");
        cmd->add_option("--window", cfg.window, "log-coordinate half width");
        cmd->add_option("--grid", cfg.grid_n, "seed grid lines per direction");
        cmd->add_option("--theta-samples", cfg.theta_samples, "Gauss scan samples");
        cmd->add_option("--resolution", cfg.resolution, "raster cells per axis");
        cmd->add_option("--nphi", cfg.n_phi, "phase samples per raster slice");
        cmd->add_option("--seed", cfg.seed, "seed for perturbation retries");
        cmd->add_option("--threads", cfg.threads,
                        "worker pool size (0: machine parallelism)");
        for (const auto& [name, ptr] : Tolerances::table())
            cmd->add_option_function<double>(
                "--tol-" + name,
                [&tol_overrides, n = name](double v) { tol_overrides[n] = v; },
                "override the '" + name + "' tolerance");
    };

    CLI::App* c_newton = app.add_subcommand("newton", "Newton polygon and lattice data");
    CLI::App* c_trace = app.add_subcommand("trace", "trace the real amoeba");
    CLI::App* c_curv = app.add_subcommand("curvature", "total curvature report");
    CLI::App* c_fibers = app.add_subcommand("fibers", "Gauss fiber scan");
    CLI::App* c_classify = app.add_subcommand("classify", "simple Harnack verdict");
    CLI::App* c_raster = app.add_subcommand("raster", "rasterize the amoeba");
    CLI::App* c_report = app.add_subcommand("report", "consolidated JSON report");
    for (CLI::App* c : {c_newton, c_trace, c_curv, c_fibers, c_classify, c_raster, c_report})
        add_common(c);

    try {
        std::vector<const char*> argv;
        argv.push_back("amoeba-lab");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << "{\"error\":\"usage\",\"detail\":" << nlohmann::json(e.what()).dump()
                  << "}\n";
        return 64;
    }

    try {
        // precedence: defaults, then config file, then flags re-applied by
        // re-parsing on top is avoided by only filling unset values here
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::invalid_argument("cannot open config " + config_path);
            nlohmann::json j = nlohmann::json::parse(in);
            RunConfig defaults;
            auto take = [&](const char* key, auto member, auto current) {
                using T = decltype(current);
                if (j.contains(key) && current == member) return j[key].template get<T>();
                return current;
            };
            cfg.window = take("window", defaults.window, cfg.window);
            cfg.grid_n = take("grid_n", defaults.grid_n, cfg.grid_n);
            cfg.theta_samples = take("theta_samples", defaults.theta_samples, cfg.theta_samples);
            cfg.resolution = take("resolution", defaults.resolution, cfg.resolution);
            cfg.n_phi = take("n_phi", defaults.n_phi, cfg.n_phi);
            cfg.seed = take("seed", defaults.seed, cfg.seed);
            if (j.contains("tolerances"))
                for (auto it = j["tolerances"].begin(); it != j["tolerances"].end(); ++it)
                    if (!tol_overrides.count(it.key()))
                        tol_overrides[it.key()] = it.value().get<double>();
        }
        for (const auto& [name, value] : tol_overrides) cfg.tol.set(name, value);
        if (cfg.window <= 0 || cfg.grid_n < 8 || cfg.theta_samples < 16 ||
            cfg.resolution <= 0 || cfg.n_phi < 32)
            throw std::invalid_argument("all numeric parameters must be positive "
                                        "(grid >= 8, theta-samples >= 16, nphi >= 32)");

        LaurentPoly p = clidetail::load_poly(poly_arg);
        const int threads = cfg.effective_threads();
        std::filesystem::path dir;
        if (!out_dir.empty()) {
            dir = out_dir;
            std::filesystem::create_directories(dir);
        }

        if (app.got_subcommand(c_newton)) {
            nlohmann::ordered_json j = to_json(newton_polygon(p));
            std::cout << dump17(j);
            if (!dir.empty()) clidetail::write_file(dir / "lattice.json", dump17(j));
            return 0;
        }

        if (app.got_subcommand(c_trace)) {
            ArcSet set = trace_all(p, cfg.window, cfg.grid_n, cfg.tol);
            std::cout << dump17(to_json_summary(set));
            if (!dir.empty()) clidetail::write_file(dir / "arcs.csv", to_csv(set));
            return 0;
        }

        if (app.got_subcommand(c_curv)) {
            NewtonPolygon np = newton_polygon(p);
            ArcSet set = trace_all(p, cfg.window, cfg.grid_n, cfg.tol);
            CurvatureReport rep = total_curvature(set, p, np, std::max(cfg.theta_samples, 64),
                                                  cfg.tol, threads, cfg.seed);
            std::cout << dump17(to_json(rep));
            if (!dir.empty()) {
                std::ostringstream angles;
                angles.precision(17);
                angles << "arc,arclength,angle\n";
                for (const ArcCurvature& ac : rep.per_arc) {
                    const Arc& arc = set.arcs[static_cast<std::size_t>(ac.arc)];
                    double s = 0.0;
                    for (std::size_t k = 0; k < ac.lifted.size(); ++k) {
                        if (k) s += (arc.log_pts[k] - arc.log_pts[k - 1]).norm();
                        angles << ac.arc << "," << s << "," << ac.lifted[k] << "\n";
                    }
                }
                clidetail::write_file(dir / "angles.csv", angles.str());
            }
            return 0;
        }

        if (app.got_subcommand(c_fibers)) {
            NewtonPolygon np = newton_polygon(p);
            int expected = static_cast<int>(std::llround(2.0 * np.vol.value()));
            ScanReport rep = totally_real_scan(p, cfg.theta_samples, expected, cfg.tol,
                                               threads, cfg.seed);
            std::cout << dump17(to_json(rep));
            if (!dir.empty())
                clidetail::write_file(dir / "gauss_scan.json", dump17(to_json(rep)));
            return 0;
        }

        if (app.got_subcommand(c_raster)) {
            AmoebaRaster r = rasterize(p, LogWindow::square(cfg.window), cfg.resolution,
                                       cfg.resolution, cfg.n_phi, threads);
            std::cout << dump17(to_json(r));
            if (!dir.empty()) {
                clidetail::write_file(dir / "amoeba.pbm", to_pgm(r));
                SvgLayers layers;
                layers.raster = &r;
                clidetail::write_file(dir / "amoeba.svg", render_svg(layers));
            }
            return 0;
        }

        if (app.got_subcommand(c_classify)) {
            HarnackVerdict v = classify(p, cfg);
            std::cout << dump17(to_json(v));
            if (!dir.empty()) {
                NewtonPolygon np = newton_polygon(p);
                ArcSet set = trace_all(p, cfg.window, cfg.grid_n, cfg.tol);
                clidetail::write_file(dir / "lattice.json", dump17(to_json(np)));
                clidetail::write_file(dir / "arcs.csv", to_csv(set));
                clidetail::write_file(dir / "curvature.json", dump17(to_json(v.curvature)));
                clidetail::write_file(dir / "gauss_scan.json", dump17(to_json(v.scan)));
                clidetail::write_file(dir / "verdict.json", dump17(to_json(v)));
                AmoebaRaster r =
                    rasterize(p, LogWindow::square(std::min(cfg.window, 6.0)), cfg.resolution,
                              cfg.resolution, cfg.n_phi, threads);
                SvgLayers layers;
                layers.polygon = &np;
                layers.arcs = &set;
                layers.raster = &r;
                layers.pinches = &v.curvature.pinches;
                clidetail::write_file(dir / "figure.svg", render_svg(layers));
            }
            return v.exit_code();
        }

        if (app.got_subcommand(c_report)) {
            NewtonPolygon np = newton_polygon(p);
            ArcSet set = trace_all(p, cfg.window, cfg.grid_n, cfg.tol);
            CurvatureReport curv = total_curvature(set, p, np, std::max(cfg.theta_samples, 64),
                                                   cfg.tol, threads, cfg.seed);
            int expected = static_cast<int>(std::llround(2.0 * np.vol.value()));
            ScanReport scan = totally_real_scan(p, cfg.theta_samples, expected, cfg.tol,
                                                threads, cfg.seed);
            AmoebaRaster raster = rasterize(p, LogWindow::square(std::min(cfg.window, 6.0)),
                                            cfg.resolution, cfg.resolution, cfg.n_phi, threads);
            nlohmann::ordered_json j = {{"config", clidetail::config_echo(cfg, p)},
                                        {"lattice", to_json(np)},
                                        {"trace", to_json_summary(set)},
                                        {"curvature", to_json(curv)},
                                        {"gauss_scan", to_json(scan)},
                                        {"raster", to_json(raster)}};
            std::cout << dump17(j);
            if (!dir.empty()) clidetail::write_file(dir / "report.json", dump17(j));
            return 0;
        }
        return 64;
    } catch (const ParseError& e) {
        std::cerr << "{\"error\":\"parse\",\"detail\":" << nlohmann::json(e.what()).dump()
                  << "}\n";
        return 64;
    } catch (const DegenerateSupportError& e) {
        std::cerr << "{\"error\":\"degenerate-support\",\"detail\":"
                  << nlohmann::json(e.what()).dump() << "}\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "{\"error\":\"usage\",\"detail\":" << nlohmann::json(e.what()).dump()
                  << "}\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"pipeline\",\"detail\":" << nlohmann::json(e.what()).dump()
                  << "}\n";
        return 70;
    }
}

}  // namespace amoebalab
