#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "elastica/errors.hpp"
#include "elastica/flow.hpp"
#include "elastica/io/config.hpp"
#include "elastica/io/format.hpp"
#include "elastica/io/initial.hpp"
#include "elastica/io/svg.hpp"
#include "elastica/io/trajectory_io.hpp"
#include "elastica/io/validate.hpp"
#include "elastica/log.hpp"

namespace fs = std::filesystem;
using namespace elastica;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kNumerical = 3;

struct Overrides {
    std::optional<std::string> output;
    std::optional<std::size_t> n_nodes;
    std::optional<double> dt;
    std::optional<double> t_end;
    std::optional<std::string> projection;
};

io::RunConfig load(const std::string& path, const Overrides& o) {
    io::RunConfig c = io::load_config(path);
    if (o.output) c.output_dir = *o.output;
    if (o.n_nodes) c.flow.n_nodes = *o.n_nodes;
    if (o.dt) c.flow.dt = *o.dt;
    if (o.t_end) c.flow.t_end = *o.t_end;
    if (o.projection) io::set_key(c, "flow.length_projection", *o.projection);
    return c;
}

bool report(const std::vector<io::Violation>& v) {
    for (const auto& x : v) std::cerr << "violation [" << io::to_string(x.kind) << "]: " << x.message << "\n";
    return v.empty();
}

int cmd_check(const std::string& path, const Overrides& o) {
    const io::RunConfig c = load(path, o);
    const DiscreteCurve curve = io::generate_initial(c);
    if (!report(io::validate_compatibility(curve))) return kValidation;
    if (const auto p = curve.boundary().problems(); !p.empty()) {
        for (const auto& s : p) std::cerr << "violation [boundary-data]: " << s << "\n";
        return kValidation;
    }
    std::cout << "ok: " << curve.size() << " nodes in R^" << curve.dim() << ", initial curve is admissible\n";
    return kOk;
}

int cmd_run(const std::string& path, const Overrides& o) {
    const io::RunConfig c = load(path, o);
    const DiscreteCurve curve = io::generate_initial(c);
    if (!report(io::validate_compatibility(curve))) return kValidation;
    const fs::path dir = c.output_dir;
    fs::create_directories(dir);
    {
        std::ofstream echo(dir / "config.echo");
        echo << io::echo(io::resolved(c, curve));
        if (!echo) throw IoError("cannot write " + (dir / "config.echo").string());
    }
    const Trajectory traj = run(curve, c.flow);
    io::write_trajectory(traj, dir);
    io::render_snapshot(curve, dir / "initial.svg");
    io::render_snapshot(curve.with_nodes(traj.snapshots.back().nodes), dir / "final.svg");
    const Record& last = traj.records.back();
    std::cout << "stopped (" << traj.stop_reason << ") at t = " << last.t << ": energy " << last.energy
              << ", length " << last.length << ", lambda " << last.lambda_direct << ", residual " << last.residual_l2
              << "\n";
    return kOk;
}

int cmd_diagnose(const std::string& run_dir) {
    const fs::path dir = run_dir;
    const io::RunConfig c = io::load_config(dir / "config.echo");
    const auto recs = io::read_diagnostics(dir / "diagnostics.csv");
    const auto index = io::read_snapshot_index(dir / "snapshots.csv");
    const double slack = c.flow.diag_slack;
    int failures = 0;
    auto fail = [&](const std::string& msg) {
        if (failures < 20) std::cerr << "violation: " << msg << "\n";
        ++failures;
    };
    double max_drift = 0.0;
    const double ell = c.boundary.ell.value_or(recs.empty() ? 1.0 : recs.front().length);
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const Record& r = recs[k];
        max_drift = std::max(max_drift, std::abs(r.length - ell) / ell);
        if (!(r.lambda_bound_lhs <= slack * r.lambda_bound_rhs))
            fail("lambda bound fails at t = " + io::format_double(r.t));
        if (!(r.velocity_bound_lhs <= slack * r.velocity_bound_rhs + c.flow.velocity_allowance * r.dt_used))
            fail("velocity bound fails at t = " + io::format_double(r.t));
        if (k > 0) {
            if (!(r.t > recs[k - 1].t)) fail("time not increasing at row " + std::to_string(k + 1));
            if (r.energy > recs[k - 1].energy + slack * r.dt_used)
                fail("energy increases at t = " + io::format_double(r.t));
        }
    }
    if (!index.empty()) {
        BoundaryData bc{*c.boundary.p0, *c.boundary.p1, *c.boundary.tau0, *c.boundary.tau1, *c.boundary.ell};
        const DiscreteCurve first(io::read_snapshot(dir / "snapshot_0.csv"), bc);
        for (const auto& v : io::validate_compatibility(first)) fail("initial snapshot: " + v.message);
    }
    std::cout << recs.size() << " records, " << index.size() << " snapshots, max relative length drift "
              << max_drift << ", " << failures << " violations\n";
    return failures == 0 ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Length-preserving elastic flow of clamped curves"};
    app.require_subcommand(1);

    Overrides o;
    std::string config_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config_file", config_path, "configuration file");
        sub->add_option("--config", config_path, "configuration file");
        sub->add_option("--output", o.output, "run directory");
        sub->add_option("--n-nodes", o.n_nodes, "number of nodes");
        sub->add_option("--dt", o.dt, "time step");
        sub->add_option("--t-end", o.t_end, "final time");
        sub->add_option("--length-projection", o.projection, "on|off")->check(CLI::IsMember({"on", "off"}));
    };
    CLI::App* run_cmd = app.add_subcommand("run", "run the flow and write a run directory");
    add_common(run_cmd);
    CLI::App* check_cmd = app.add_subcommand("check", "validate the initial data only");
    add_common(check_cmd);
    std::string run_dir;
    CLI::App* diag_cmd = app.add_subcommand("diagnose", "re-check the inequalities of a finished run");
    diag_cmd->add_option("run-dir", run_dir, "run directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kValidation;
    }

    try {
        if (*diag_cmd) return cmd_diagnose(run_dir);
        if (config_path.empty()) {
            std::cerr << "a configuration file is required\n";
            return kValidation;
        }
        if (*run_cmd) return cmd_run(config_path, o);
        return cmd_check(config_path, o);
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
}
