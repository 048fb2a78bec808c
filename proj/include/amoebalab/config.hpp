/*
 * config.hpp
 * ----------
 * Run configuration and the tolerance set shared by the pipeline stages.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace amoebalab {

struct Tolerances {
    double corrector_target = 1e-12;   // relative residual goal of the tracer corrector
    double residual_accept = 1e-8;     // relative residual bound for emitted points
    double singular_grad = 1e-10;      // |(x fx, y fy)| / scale below this aborts tracing
    double theta_step = 0.02;          // max Gauss-angle change per trace step (rad)
    double max_step = 0.1;             // max log-coordinate step length
    double merge = 3e-4;               // seed-on-arc merge distance (log units)
    double angle_match = 0.05;         // Gauss-angle agreement for seed merging (rad)
    double adjacency = 1e-3;           // arc endpoint adjacency (log units)
    double pinch = 1e-4;               // pinch proximity tolerance (log units)
    double pinch_angle = 0.02;         // min crossing angle for a pinch event (rad)
    double fiber_residual = 1e-7;      // relative residual bound for fiber solutions
    double real_imag = 1e-7;           // |Im| / max(1, |z|) bound for calling a root real
    double cluster = 1e-6;             // solution dedup radius
    double cstar_min = 1e-9;           // |z| below this counts as a boundary solution
    double side_match = 0.05;          // tentacle direction vs edge normal (rad)
    double glue = 1e-3;                // tentacle intercept matching
    double maximality = 0.01;          // |total - bound| / bound for the maximal verdict
    double near_miss = 3.0;            // near-miss factor escalating to Inconclusive
    double tangent_orth = 0.05;        // polyline tangent vs analytic normal guard

    static const std::map<std::string, double Tolerances::*>& table() {
        static const std::map<std::string, double Tolerances::*> t = {
            {"corrector", &Tolerances::corrector_target},
            {"residual", &Tolerances::residual_accept},
            {"singular", &Tolerances::singular_grad},
            {"theta-step", &Tolerances::theta_step},
            {"max-step", &Tolerances::max_step},
            {"merge", &Tolerances::merge},
            {"angle-match", &Tolerances::angle_match},
            {"adjacency", &Tolerances::adjacency},
            {"pinch", &Tolerances::pinch},
            {"pinch-angle", &Tolerances::pinch_angle},
            {"fiber-residual", &Tolerances::fiber_residual},
            {"real-imag", &Tolerances::real_imag},
            {"cluster", &Tolerances::cluster},
            {"cstar-min", &Tolerances::cstar_min},
            {"side-match", &Tolerances::side_match},
            {"glue", &Tolerances::glue},
            {"maximality", &Tolerances::maximality},
            {"near-miss", &Tolerances::near_miss},
            {"tangent-orth", &Tolerances::tangent_orth},
        };
        return t;
    }

    void set(const std::string& name, double value) {
        auto* slot = find(name);
        if (!slot) throw std::invalid_argument("unknown tolerance: " + name);
        *slot = value;
    }

    double* find(const std::string& name) {
        auto it = table().find(name);
        return it == table().end() ? nullptr : &(this->*(it->second));
    }
};

struct RunConfig {
    double window = 12.0;
    int grid_n = 32;
    int theta_samples = 64;
    int resolution = 256;
    int n_phi = 64;
    std::uint64_t seed = 0;
    int threads = 0;  // 0: use hardware_concurrency / AMOEBA_LAB_THREADS
    Tolerances tol;

    int effective_threads() const {
        if (threads > 0) return threads;
        if (const char* env = std::getenv("AMOEBA_LAB_THREADS")) {
            int n = std::atoi(env);
            if (n > 0) return n;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
};

}  // namespace amoebalab
