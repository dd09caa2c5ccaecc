/*
 * run.hpp — command-line run configurations: sweeps, figure-data
 * reproduction, validation. Emits deterministic CSV plus a JSON sidecar
 * that records every parameter needed to reproduce the file.
 */
#pragma once

#include "cavent/entanglement.hpp"
#include "cavent/freespace.hpp"
#include "cavent/spectrum.hpp"

#include <string>

namespace cavent {

inline constexpr const char* kToolVersion = "0.1.0";

enum class RunMode { spectrum, f00, concurrence, figure, validate };

struct RunConfig {
    RunMode mode = RunMode::concurrence;
    bool free_space = false;
    CavityParams params{};
    InitialState state{};
    double t_max = 10.0;
    double dt = 0.005;
    double truncation_eps = 1e-6;
    double root_rel_tol = 1e-12;
    QuadratureConfig quadrature{};
    std::string output_path;    ///< CSV path, or prefix for figure mode
    std::string figure_id;      ///< fig1a|fig1b|fig2|fig3a..fig3d|fig4a|fig4b

    void validate() const;  ///< throws std::invalid_argument
};

/// Execute one run. Returns 0 on success; 1 on configuration errors; 2 on
/// numerical failure. Error text goes to stderr; partially written output
/// files are removed on failure.
int run(const RunConfig& config);

} // namespace cavent
