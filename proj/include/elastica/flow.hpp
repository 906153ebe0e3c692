#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "elastica/banded.hpp"
#include "elastica/curve.hpp"
#include "elastica/multiplier.hpp"

namespace elastica {

struct FlowConfig {
    std::size_t n_nodes = 201;
    double dt = 1e-5;
    double t_end = 1.0;
    std::size_t max_steps = 0;  // 0: no limit besides t_end
    int gamma_refreeze_every = 10;
    int save_every = 1000;
    bool length_projection = false;
    double stop_residual = 1e-4;
    double gamma_min = kDefaultGammaMin;
    double eps_E = kDefaultEpsE;
    double diag_slack = 1.05;
    // Velocity comparison of reparametrized snapshots is a forward difference,
    // so its check is lhs <= diag_slack * rhs + velocity_allowance * dt.
    double velocity_allowance = 1.0;
    int max_retries = 5;

    // InvalidArgument listing the first broken field.
    void validate() const;
};

struct FlowState {
    explicit FlowState(DiscreteCurve c) : curve(std::move(c)) {}

    DiscreteCurve curve;
    double t = 0.0;
    double lambda = 0.0;
    double energy = 0.0;
    double length = 0.0;
    VectorField velocity;  // (f_{k+1} - f_k) / dt of the step that produced this state
    VectorField dt_perp;   // its normal part
    double dt_used = 0.0;
    std::size_t step = 0;
};

// Re-solves nodes 1 and N-2 so the one-sided end derivatives equal tau times
// the current end arc element, the rows every step imposes.
DiscreteCurve clamp_end_rows(const DiscreteCurve& curve, double gamma_min = kDefaultGammaMin);

// Starts from clamp_end_rows(curve) so the first step does not jump.
FlowState make_state(const DiscreteCurve& curve, const FlowConfig& config);

// mu = -<A(f), T>, so that A(f) = grad E - mu T.
ScalarField mu_tangential(const Jet& jet);
ScalarField mu_tangential(const DiscreteCurve& curve);

// I + dt diag(gamma_frozen^-4) D4 on the interior; rows 0 and N-1 pin the
// positions, rows 1 and N-2 impose the one-sided first derivative at the ends.
struct BandedSystem {
    BandedMatrix matrix;
    BandedLU lu;
    double gamma_ref0 = 0.0;
    double gamma_ref1 = 0.0;

    // Writes p0, tau0 gamma_ref0, tau1 gamma_ref1, p1 into the boundary rows.
    void apply_boundary(std::span<double> rhs, const BoundaryData& bc, std::size_t component) const;
    // Solves in place for every component.
    void solve(VectorField& rhs) const;
};

BandedSystem assemble_system(const DiscreteCurve& curve, const ScalarField& gamma_frozen, double dt);

// Stateful stepper: keeps the frozen arc element and its factorization and
// refreezes every gamma_refreeze_every accepted steps.
class FlowStepper {
public:
    explicit FlowStepper(FlowConfig config);

    // On return *new_jet (if given) holds the derivatives of the new curve.
    FlowState step(const FlowState& state, Jet* new_jet = nullptr);

    const FlowConfig& config() const { return config_; }

private:
    FlowConfig config_;
    ScalarField gamma_frozen_;
    std::optional<BandedSystem> system_;
    int since_freeze_ = 0;
};

// One step that freezes the arc element at the current state.
FlowState step(const FlowState& state, const FlowConfig& config);

// Moves the interior along w kappa (w = sin^2(pi x)) until the discrete length is
// ell, keeping both end positions and end derivative rows exact.
DiscreteCurve project_length(const DiscreteCurve& curve, double gamma_ref0, double gamma_ref1,
                             double gamma_min = kDefaultGammaMin);

struct Record {
    double t = 0.0;
    double energy = 0.0;
    double length = 0.0;
    double lambda_direct = 0.0;
    double lambda_ibp = 0.0;
    double residual_l2 = 0.0;
    double lambda_bound_lhs = 0.0;
    double lambda_bound_rhs = 0.0;
    double velocity_bound_lhs = 0.0;
    double velocity_bound_rhs = 0.0;
    double dt_used = 0.0;
};

struct Snapshot {
    double t = 0.0;
    std::size_t step = 0;
    VectorField nodes;
};

struct Trajectory {
    std::vector<Record> records;
    std::vector<Snapshot> snapshots;
    std::string stop_reason;
};

using StepObserver = std::function<void(const FlowState&, const Record&)>;

// Steps until t_end, max_steps, or residual_l2 <= stop_residual. The observer
// sees the initial state and every accepted step.
Trajectory run(const DiscreteCurve& initial, const FlowConfig& config, const StepObserver& observer = {});

}  // namespace elastica
