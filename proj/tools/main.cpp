// cavent — entanglement dynamics of two atoms coupled to a scalar field in a
// spherical cavity. Subcommands: spectrum | f00 | concurrence | figure | validate.
#include "cavent/run.hpp"

#include <CLI11.hpp>

#include <string>

namespace {

void add_physics_options(CLI::App* cmd, cavent::RunConfig& cfg, bool with_state) {
    cmd->add_option("--omega0", cfg.params.omega0, "atomic frequency (default 1)");
    cmd->add_option("-g,--coupling", cfg.params.g, "coupling constant, frequency units");
    cmd->add_option("-R,--radius", cfg.params.radius, "cavity radius, units of 1/omega0");
    cmd->add_flag("--free-space", cfg.free_space, "infinite-cavity limit (ignores --radius)");
    cmd->add_option("--eps", cfg.truncation_eps, "spectral truncation epsilon (default 1e-6)");
    cmd->add_option("--root-tol", cfg.root_rel_tol, "root relative tolerance (default 1e-12)");
    cmd->add_option("--quad-tol", cfg.quadrature.abs_tol,
                    "free-space quadrature tolerance (default 1e-8)");
    if (with_state) {
        cmd->add_option("--xi", cfg.state.xi, "initial superposition weight, in [0,1]");
        cmd->add_option("--phi", cfg.state.phi, "initial relative phase, in [0,2pi)");
    }
}

void add_grid_options(CLI::App* cmd, cavent::RunConfig& cfg) {
    cmd->add_option("--t-max", cfg.t_max, "end of the time grid (default 10)");
    cmd->add_option("--dt", cfg.dt, "time step (default 0.005)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-atom cavity entanglement dynamics"};
    app.require_subcommand(1);

    cavent::RunConfig cfg;

    auto* spectrum = app.add_subcommand("spectrum", "normal-mode frequencies and weights");
    add_physics_options(spectrum, cfg, false);
    spectrum->add_option("-o,--output", cfg.output_path, "output CSV path")->required();

    auto* f00 = app.add_subcommand("f00", "survival coefficient f00(t)");
    add_physics_options(f00, cfg, false);
    add_grid_options(f00, cfg);
    f00->add_option("-o,--output", cfg.output_path, "output CSV path")->required();

    auto* conc = app.add_subcommand("concurrence", "concurrence time series");
    add_physics_options(conc, cfg, true);
    add_grid_options(conc, cfg);
    conc->add_option("-o,--output", cfg.output_path, "output CSV path")->required();

    auto* figure = app.add_subcommand("figure", "reproduce a figure's data set");
    add_physics_options(figure, cfg, false);
    figure->add_option("id", cfg.figure_id,
                       "figure id: fig1a fig1b fig2 fig3a fig3b fig3c fig3d fig4a fig4b")
        ->required();
    figure->add_option("--dt", cfg.dt, "time step (default 0.005)");
    figure->add_option("-o,--output", cfg.output_path, "output CSV prefix")->required();

    auto* validate = app.add_subcommand("validate", "run the self-validation battery");
    add_physics_options(validate, cfg, false);

    CLI11_PARSE(app, argc, argv);

    if (spectrum->parsed()) cfg.mode = cavent::RunMode::spectrum;
    else if (f00->parsed()) cfg.mode = cavent::RunMode::f00;
    else if (conc->parsed()) cfg.mode = cavent::RunMode::concurrence;
    else if (figure->parsed()) cfg.mode = cavent::RunMode::figure;
    else cfg.mode = cavent::RunMode::validate;

    return cavent::run(cfg);
}
