#include "elastica/flow.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "elastica/elastica.hpp"
#include "elastica/errors.hpp"
#include "elastica/geometry.hpp"
#include "elastica/log.hpp"
#include "elastica/reparam.hpp"
#include "elastica/stencil.hpp"

namespace elastica {

void FlowConfig::validate() const {
    auto fail = [](const std::string& what) { throw InvalidArgument("flow config: " + what); };
    if (n_nodes < 7) fail("n_nodes must be at least 7");
    if (!(dt > 0.0) || !std::isfinite(dt)) fail("dt must be positive");
    if (!(t_end >= 0.0)) fail("t_end must be nonnegative");
    if (gamma_refreeze_every < 1) fail("gamma_refreeze_every must be at least 1");
    if (save_every < 1) fail("save_every must be at least 1");
    if (!(stop_residual > 0.0)) fail("stop_residual must be positive");
    if (!(gamma_min > 0.0)) fail("gamma_min must be positive");
    if (!(eps_E > 0.0)) fail("eps_E must be positive");
    if (!(diag_slack >= 1.0)) fail("diag_slack must be at least 1");
    if (!(velocity_allowance >= 0.0)) fail("velocity_allowance must be nonnegative");
    if (max_retries < 0) fail("max_retries must be nonnegative");
}

namespace {

// Re-solves nodes 1 and N-2 from the end derivative rows.
void restore_end_rows(VectorField& f, const BoundaryData& bc, double gamma_ref0, double gamma_ref1) {
    const std::size_t n = f.size();
    const DerivativeOperator d1(n, 1);
    const auto left = d1.row(0);
    const auto right = d1.row(n - 1);
    for (std::size_t c = 0; c < f.dim(); ++c) {
        double s = bc.tau0[c] * gamma_ref0;
        for (std::size_t j = 0; j < left.weights.size(); ++j)
            if (left.first + j != 1) s -= left.weights[j] * f(c, left.first + j);
        f(c, 1) = s / left.weights[1 - left.first];
        s = bc.tau1[c] * gamma_ref1;
        for (std::size_t j = 0; j < right.weights.size(); ++j)
            if (right.first + j != n - 2) s -= right.weights[j] * f(c, right.first + j);
        f(c, n - 2) = s / right.weights[n - 2 - right.first];
    }
}

}  // namespace

DiscreteCurve clamp_end_rows(const DiscreteCurve& curve, double gamma_min) {
    // Adds smooth cubic Hermite corrections x (1-x)^2 and x^2 (x-1) so that the
    // end rows hold exactly without kinking the curve near the ends.
    const std::size_t n = curve.size();
    const BoundaryData& bc = curve.boundary();
    const ScalarField g = arc_element(curve, gamma_min);
    const DerivativeOperator d1(n, 1);
    const auto left = d1.row(0);
    const auto right = d1.row(n - 1);
    ScalarField h0(n), h1(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = curve.parameter(i);
        h0[i] = x * (1.0 - x) * (1.0 - x);
        h1[i] = x * x * (x - 1.0);
    }
    h0.front() = h0.back() = h1.front() = h1.back() = 0.0;
    auto row_at = [](const DerivativeOperator::Row& row, std::span<const double> v) {
        double s = 0.0;
        for (std::size_t j = 0; j < row.weights.size(); ++j) s += row.weights[j] * v[row.first + j];
        return s;
    };
    const double a00 = row_at(left, h0), a01 = row_at(left, h1);
    const double a10 = row_at(right, h0), a11 = row_at(right, h1);
    const double det = a00 * a11 - a01 * a10;
    VectorField f = curve.nodes();
    for (std::size_t c = 0; c < f.dim(); ++c) {
        const auto fc = f.component(c);
        const double r0 = bc.tau0[c] * g.front() - row_at(left, fc);
        const double r1 = bc.tau1[c] * g.back() - row_at(right, fc);
        const double c0 = (r0 * a11 - r1 * a01) / det;
        const double c1 = (a00 * r1 - a10 * r0) / det;
        for (std::size_t i = 1; i + 1 < n; ++i) f(c, i) += c0 * h0[i] + c1 * h1[i];
    }
    restore_end_rows(f, bc, g.front(), g.back());
    return curve.with_nodes(std::move(f));
}

FlowState make_state(const DiscreteCurve& curve, const FlowConfig& config) {
    FlowState s(clamp_end_rows(curve, config.gamma_min));
    const Jet j = make_jet(s.curve, config.gamma_min);
    s.lambda = lambda_direct(j, config.eps_E);
    s.energy = energy(j);
    s.length = length(j);
    s.velocity = VectorField(curve.dim(), curve.size());
    s.dt_perp = VectorField(curve.dim(), curve.size());
    return s;
}

ScalarField mu_tangential(const Jet& j) {
    ScalarField mu = dot(a_of_f(j), j.tangent);
    for (double& v : mu) v = -v;
    return mu;
}

ScalarField mu_tangential(const DiscreteCurve& curve) { return mu_tangential(make_jet(curve)); }

void BandedSystem::apply_boundary(std::span<double> rhs, const BoundaryData& bc, std::size_t c) const {
    const std::size_t n = rhs.size();
    rhs[0] = bc.p0[c];
    rhs[1] = bc.tau0[c] * gamma_ref0;
    rhs[n - 2] = bc.tau1[c] * gamma_ref1;
    rhs[n - 1] = bc.p1[c];
}

void BandedSystem::solve(VectorField& rhs) const {
    for (std::size_t c = 0; c < rhs.dim(); ++c) lu.solve(rhs.component(c));
}

namespace {

BandedMatrix build_matrix(std::size_t n, const ScalarField& gamma_frozen, double dt) {
    BandedMatrix m(n, 2, 2);
    const DerivativeOperator d4(n, 4);
    const DerivativeOperator d1(n, 1);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const auto row = d4.row(i);
        const double g2 = gamma_frozen[i] * gamma_frozen[i];
        const double c = dt / (g2 * g2);
        for (std::size_t j = 0; j < row.weights.size(); ++j) {
            const std::size_t col = row.first + j;
            m.set(i, col, (col == i ? 1.0 : 0.0) + c * row.weights[j]);
        }
    }
    m.set(0, 0, 1.0);
    m.set(n - 1, n - 1, 1.0);
    const auto left = d1.row(0);
    for (std::size_t j = 0; j < left.weights.size(); ++j) m.set(1, left.first + j, left.weights[j]);
    const auto right = d1.row(n - 1);
    for (std::size_t j = 0; j < right.weights.size(); ++j) m.set(n - 2, right.first + j, right.weights[j]);
    return m;
}

}  // namespace

BandedSystem assemble_system(const DiscreteCurve& curve, const ScalarField& gamma_frozen, double dt) {
    const std::size_t n = curve.size();
    if (gamma_frozen.size() != n) throw InvalidArgument("assemble_system: frozen arc element not aligned");
    for (double g : gamma_frozen)
        if (!(g > 0.0)) throw InvalidArgument("assemble_system: frozen arc element must be positive");
    if (!(dt >= 0.0)) throw InvalidArgument("assemble_system: dt must be nonnegative");
    BandedMatrix m = build_matrix(n, gamma_frozen, dt);
    BandedLU lu(m);
    return BandedSystem{std::move(m), std::move(lu), gamma_frozen.front(), gamma_frozen.back()};
}


DiscreteCurve project_length(const DiscreteCurve& curve, double gamma_ref0, double gamma_ref1, double gamma_min) {
    const std::size_t n = curve.size();
    const BoundaryData& bc = curve.boundary();
    const Jet j = make_jet(curve, gamma_min);
    VectorField dir = curvature(j);
    ScalarField w(n, 0.0);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double s = std::sin(std::numbers::pi * curve.parameter(i));
        w[i] = s * s;
    }
    dir = scaled(w, dir);

    auto moved = [&](double s) {
        VectorField f = curve.nodes();
        add_scaled(f, s, dir);
        restore_end_rows(f, bc, gamma_ref0, gamma_ref1);
        return DiscreteCurve::pinned(std::move(f), bc);
    };
    auto excess = [&](double s) { return length(moved(s)) - bc.ell; };

    const double tol = 1e-14 * bc.ell;
    const double e0 = excess(0.0);
    if (std::abs(e0) <= tol) return moved(0.0);

    // Length decreases along w kappa at rate int w |kappa|^2 ds.
    const double rate = quad_ds(j.gamma, dot(dir, curvature(j)));
    if (!(rate > 0.0)) throw NumericalError("length projection: no curvature to move along");
    double a = 0.0, fa = e0;
    double b = e0 / rate, fb = excess(b);
    for (int it = 0; it < 60 && fa * fb > 0.0; ++it) {
        a = b;
        fa = fb;
        b *= 2.0;
        fb = excess(b);
    }
    if (fa * fb > 0.0) throw NumericalError("length projection: could not bracket the target length");
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = excess(m);
        if (std::abs(fm) <= tol || m == a || m == b) {
            a = b = m;
            break;
        }
        if (fa * fm <= 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return moved(0.5 * (a + b));
}

FlowStepper::FlowStepper(FlowConfig config) : config_(std::move(config)) { config_.validate(); }

FlowState FlowStepper::step(const FlowState& state, Jet* new_jet) {
    const DiscreteCurve& cur = state.curve;
    const std::size_t n = cur.size();
    const BoundaryData& bc = cur.boundary();
    const Jet j = make_jet(cur, config_.gamma_min);

    if (!system_ || since_freeze_ >= config_.gamma_refreeze_every) {
        gamma_frozen_ = j.gamma;
        system_.emplace(assemble_system(cur, gamma_frozen_, config_.dt));
        since_freeze_ = 0;
    }

    // -F~ + (gamma_fr^-4 - gamma^-4) D4 f + lambda kappa
    const double lambda = lambda_direct(j, config_.eps_E);
    VectorField force = -1.0 * a_of_f_lower(j);
    ScalarField lag(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double gf = gamma_frozen_[i] * gamma_frozen_[i];
        const double g = j.gamma[i] * j.gamma[i];
        lag[i] = 1.0 / (gf * gf) - 1.0 / (g * g);
    }
    add_scaled(force, lag, j.d4);
    add_scaled(force, lambda, curvature(j));

    const double energy_before = state.energy;
    double dt = config_.dt;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
        std::optional<BandedSystem> local;
        const BandedSystem* sys = &*system_;
        if (dt != config_.dt) {
            local.emplace(assemble_system(cur, gamma_frozen_, dt));
            sys = &*local;
        }
        VectorField f = cur.nodes();
        add_scaled(f, dt, force);
        for (std::size_t c = 0; c < f.dim(); ++c) sys->apply_boundary(f.component(c), bc, c);
        sys->solve(f);
        DiscreteCurve next = DiscreteCurve::pinned(std::move(f), bc);
        if (config_.length_projection)
            next = project_length(next, sys->gamma_ref0, sys->gamma_ref1, config_.gamma_min);

        Jet nj = make_jet(next, config_.gamma_min);
        const double e = energy(nj);
        if (e > energy_before + config_.diag_slack * dt) {
            log::warn("step {}: energy rose from {:.17g} to {:.17g}, retrying with dt = {:.3g}", state.step + 1,
                      energy_before, e, dt / 2);
            dt /= 2.0;
            continue;
        }

        FlowState out(std::move(next));
        out.t = state.t + dt;
        out.dt_used = dt;
        out.step = state.step + 1;
        out.energy = e;
        out.length = length(nj);
        out.lambda = lambda_direct(nj, config_.eps_E);
        out.velocity = (1.0 / dt) * (out.curve.nodes() - cur.nodes());
        out.dt_perp = project_normal_with(nj.tangent, out.velocity);
        ++since_freeze_;
        if (new_jet) *new_jet = std::move(nj);
        return out;
    }
    std::ostringstream s;
    s << "energy kept increasing after " << config_.max_retries << " halvings of dt at t = " << state.t;
    throw MaxRetries(s.str());
}

FlowState step(const FlowState& state, const FlowConfig& config) {
    FlowConfig once = config;
    once.gamma_refreeze_every = 1;
    FlowStepper stepper(once);
    return stepper.step(state);
}

namespace {

Record diagnose(const FlowState& s, const Jet& j, const FlowConfig& config) {
    Record r;
    r.t = s.t;
    r.energy = s.energy;
    r.length = s.length;
    const ElasticaReport e = residual(j, config.eps_E);
    r.lambda_direct = e.lambda_star;
    r.lambda_ibp = lambda_ibp(j, config.eps_E);
    r.residual_l2 = e.residual_l2;
    const BoundCheck b = lambda_bound(j, s.curve.boundary(), s.dt_perp, e.lambda_star);
    r.lambda_bound_lhs = b.lhs;
    r.lambda_bound_rhs = b.rhs;
    r.dt_used = s.dt_used;
    return r;
}

}  // namespace

Trajectory run(const DiscreteCurve& initial, const FlowConfig& config, const StepObserver& observer) {
    config.validate();
    Trajectory traj;
    FlowState state = make_state(initial, config);
    Jet jet = make_jet(state.curve, config.gamma_min);
    Record rec = diagnose(state, jet, config);
    traj.records.push_back(rec);
    traj.snapshots.push_back({state.t, 0, state.curve.nodes()});
    if (observer) observer(state, rec);

    const double c43 = velocity_bound_constant(initial.boundary().ell, state.energy);
    VectorField resampled = constant_speed(state.curve, config.gamma_min).nodes();
    log::info("run: N = {}, dt = {:.3g}, t_end = {:.3g}, E0 = {:.17g}, residual = {:.3e}", initial.size(), config.dt,
              config.t_end, state.energy, rec.residual_l2);

    if (rec.residual_l2 <= config.stop_residual) {
        traj.stop_reason = "stationary";
        return traj;
    }
    FlowStepper stepper(config);
    traj.stop_reason = "t_end";
    while (state.t + 0.5 * config.dt < config.t_end) {
        if (config.max_steps && state.step >= config.max_steps) {
            traj.stop_reason = "max_steps";
            break;
        }
        FlowState next = stepper.step(state, &jet);
        rec = diagnose(next, jet, config);
        VectorField next_resampled = constant_speed(next.curve, config.gamma_min).nodes();
        const BoundCheck b43 = velocity_bound_check(resampled, next_resampled, next.dt_used, c43, next.velocity,
                                                    jet.gamma);
        rec.velocity_bound_lhs = b43.lhs;
        rec.velocity_bound_rhs = b43.rhs;
        traj.records.push_back(rec);
        if (observer) observer(next, rec);
        if (next.step % static_cast<std::size_t>(config.save_every) == 0)
            traj.snapshots.push_back({next.t, next.step, next.curve.nodes()});
        if (next.step % 1000 == 0)
            log::debug("step {}: t = {:.6g}, E = {:.12g}, residual = {:.3e}, lambda = {:.9g}", next.step, next.t,
                       next.energy, rec.residual_l2, rec.lambda_direct);
        state = std::move(next);
        resampled = std::move(next_resampled);
        if (rec.residual_l2 <= config.stop_residual) {
            traj.stop_reason = "stationary";
            break;
        }
    }
    if (traj.snapshots.back().step != state.step)
        traj.snapshots.push_back({state.t, state.step, state.curve.nodes()});
    log::info("run finished ({}) after {} steps at t = {:.6g}, E = {:.17g}", traj.stop_reason, state.step, state.t,
              state.energy);
    return traj;
}

}  // namespace elastica
