#include "elastica/reparam.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "elastica/errors.hpp"

namespace elastica {

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n) throw InvalidArgument("MonotoneCubic: need matching samples, at least 2");
    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dx = xs_[i + 1] - xs_[i];
        if (!(dx > 0.0)) throw InvalidArgument("MonotoneCubic: abscissae must be strictly increasing");
        delta[i] = (ys_[i + 1] - ys_[i]) / dx;
    }
    slopes_.assign(n, 0.0);
    slopes_[0] = delta[0];
    slopes_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
        slopes_[i] = delta[i - 1] * delta[i] <= 0.0 ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (delta[i] == 0.0) {
            slopes_[i] = slopes_[i + 1] = 0.0;
            continue;
        }
        const double a = slopes_[i] / delta[i];
        const double b = slopes_[i + 1] / delta[i];
        const double r = a * a + b * b;
        if (r > 9.0) {
            const double t = 3.0 / std::sqrt(r);
            slopes_[i] = t * a * delta[i];
            slopes_[i + 1] = t * b * delta[i];
        }
    }
}

double MonotoneCubic::operator()(double x) const {
    const std::size_t n = xs_.size();
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    const std::size_t k =
        std::min<std::size_t>(n - 2, std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin() - 1);
    const double h = xs_[k + 1] - xs_[k];
    const double t = (x - xs_[k]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * ys_[k] + (t3 - 2 * t2 + t) * h * slopes_[k] + (-2 * t3 + 3 * t2) * ys_[k + 1] +
           (t3 - t2) * h * slopes_[k + 1];
}

namespace {

constexpr int kPoints = 8;

// 8-point Gauss-Legendre rule on [-1, 1]
constexpr std::array<double, 8> kGaussX = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                           -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                           0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussW = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                           0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                           0.2223810344533745, 0.1012285362903763};

// 1 / prod_{m != j} (j - m) for the nodes 0..7
constexpr std::array<double, 8> kBary = {-1.0 / 5040, 1.0 / 720, -1.0 / 240, 1.0 / 144,
                                         -1.0 / 144,  1.0 / 240, -1.0 / 720, 1.0 / 5040};

// Degree-7 interpolation of the nodes through the 8 grid points closest to a
// grid interval, shifted inwards near the ends.
class LocalInterpolant {
public:
    explicit LocalInterpolant(const VectorField& nodes)
        : f_(nodes), n_(nodes.size()), h_(1.0 / static_cast<double>(n_ - 1)), scratch_(nodes.dim()) {}

    std::size_t first_node(std::size_t interval) const {
        const std::ptrdiff_t j0 = static_cast<std::ptrdiff_t>(interval) - 3;
        return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j0, 0, static_cast<std::ptrdiff_t>(n_) - kPoints));
    }

    // Position and parameter derivative at x using the stencil of `interval`.
    void eval(std::size_t interval, double x, double* value, double* slope) const {
        const std::size_t j0 = first_node(interval);
        const double s = x / h_ - static_cast<double>(j0);
        // prefix and suffix products of (s - m) carried with their derivatives
        double lv[kPoints + 1], ld[kPoints + 1], rv[kPoints + 1], rd[kPoints + 1];
        lv[0] = 1.0;
        ld[0] = 0.0;
        for (int m = 0; m < kPoints; ++m) {
            lv[m + 1] = lv[m] * (s - m);
            ld[m + 1] = ld[m] * (s - m) + lv[m];
        }
        rv[kPoints] = 1.0;
        rd[kPoints] = 0.0;
        for (int m = kPoints - 1; m >= 0; --m) {
            rv[m] = rv[m + 1] * (s - m);
            rd[m] = rd[m + 1] * (s - m) + rv[m + 1];
        }
        double basis[kPoints], dbasis[kPoints];
        for (int j = 0; j < kPoints; ++j) {
            basis[j] = kBary[j] * lv[j] * rv[j + 1];
            dbasis[j] = kBary[j] * (ld[j] * rv[j + 1] + lv[j] * rd[j + 1]) / h_;
        }
        for (std::size_t c = 0; c < f_.dim(); ++c) {
            const double* y = f_.component(c).data() + j0;
            double v = 0.0, dv = 0.0;
            for (int j = 0; j < kPoints; ++j) {
                v += basis[j] * y[j];
                dv += dbasis[j] * y[j];
            }
            if (value) value[c] = v;
            if (slope) slope[c] = dv;
        }
    }

    double speed(std::size_t interval, double x) const {
        eval(interval, x, nullptr, scratch_.data());
        double s = 0.0;
        for (double v : scratch_) s += v * v;
        return std::sqrt(s);
    }

    double arc(std::size_t interval, double a, double b) const {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double s = 0.0;
        for (int q = 0; q < kPoints; ++q) s += kGaussW[q] * speed(interval, mid + half * kGaussX[q]);
        return s * half;
    }

    double spacing() const { return h_; }

private:
    const VectorField& f_;
    std::size_t n_;
    double h_;
    mutable std::vector<double> scratch_;
};

struct Resampling {
    std::vector<double> cumulative;  // arc length up to each node
    std::vector<double> psi;         // parameter at arc length fraction i/(N-1)
    std::vector<std::size_t> interval;
};

Resampling resample(const DiscreteCurve& curve, double gamma_min) {
    arc_element(curve, gamma_min);  // DegenerateCurve
    const std::size_t n = curve.size();
    const LocalInterpolant interp(curve.nodes());
    const double h = interp.spacing();
    Resampling r;
    r.cumulative.assign(n, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k)
        r.cumulative[k + 1] = r.cumulative[k] + interp.arc(k, k * h, (k + 1) * h);
    const double total = r.cumulative.back();

    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = i * h;
    const MonotoneCubic guess(r.cumulative, grid);

    r.psi.assign(n, 0.0);
    r.interval.assign(n, 0);
    r.psi[n - 1] = 1.0;
    r.interval[n - 1] = n - 2;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double target = static_cast<double>(j) * h * total;
        std::size_t k = std::upper_bound(r.cumulative.begin(), r.cumulative.end(), target) - r.cumulative.begin();
        k = std::clamp<std::size_t>(k, 1, n - 1) - 1;
        double lo = k * h, hi = (k + 1) * h;
        double x = std::clamp(guess(target), lo, hi);
        const double gtol = 4e-16 * total;
        for (int it = 0; it < 60; ++it) {
            const double g = r.cumulative[k] + interp.arc(k, k * h, x) - target;
            if (std::abs(g) <= gtol) break;
            if (g > 0.0) hi = x;
            else lo = x;
            const double sp = interp.speed(k, x);
            double next = sp > 0.0 ? x - g / sp : 0.5 * (lo + hi);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            const double step = std::abs(next - x);
            x = next;
            if (step <= 2e-16 * std::max(1.0, x) || hi - lo <= 2e-16) break;
        }
        r.psi[j] = x;
        r.interval[j] = k;
    }
    return r;
}

}  // namespace

ReparamMap cumulative_arclength(const DiscreteCurve& curve, double gamma_min) {
    const Resampling r = resample(curve, gamma_min);
    const std::size_t n = curve.size();
    ReparamMap m;
    m.phi.resize(n);
    const double total = r.cumulative.back();
    for (std::size_t i = 0; i < n; ++i) m.phi[i] = r.cumulative[i] / total;
    m.phi[0] = 0.0;
    m.phi[n - 1] = 1.0;
    m.psi_samples = r.psi;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = curve.parameter(i);
    m.psi = MonotoneCubic(m.phi, grid);
    return m;
}

DiscreteCurve constant_speed(const DiscreteCurve& curve, double gamma_min) {
    const Resampling r = resample(curve, gamma_min);
    const std::size_t n = curve.size();
    const LocalInterpolant interp(curve.nodes());
    VectorField out = curve.nodes();
    std::vector<double> p(curve.dim());
    for (std::size_t j = 1; j + 1 < n; ++j) {
        interp.eval(r.interval[j], r.psi[j], p.data(), nullptr);
        out.set_node(j, p);
    }
    return curve.with_nodes(std::move(out));
}

double velocity_bound_constant(double ell, double E0) {
    if (!(ell > 0.0)) throw InvalidArgument("velocity_bound_constant: length must be positive");
    if (!(E0 >= 0.0)) throw InvalidArgument("velocity_bound_constant: energy must be nonnegative");
    return std::sqrt(2.0 / ell + 16.0 * E0);
}

BoundCheck velocity_bound_check(const VectorField& prev, const VectorField& next, double dt, double constant,
                                const VectorField& velocity, std::span<const double> gamma_next) {
    const bool same = prev == next;
    if (!same && !(dt > 0.0)) throw InvalidArgument("velocity_bound_check: time step must be positive");
    ScalarField diff(prev.size(), 0.0);
    for (std::size_t c = 0; c < prev.dim(); ++c)
        for (std::size_t i = 0; i < prev.size(); ++i) {
            const double d = same ? 0.0 : (next(c, i) - prev(c, i)) / dt;
            diff[i] += d * d;
        }
    BoundCheck b;
    b.lhs = same ? 0.0 : std::sqrt(quad_dx(diff));
    b.rhs = constant * std::sqrt(quad_ds(gamma_next, norm_squared(velocity)));
    return b;
}

BoundCheck velocity_bound_check(const FlowState& prev, const FlowState& next, double E0) {
    const double dt = next.t - prev.t;
    const double c = velocity_bound_constant(next.curve.boundary().ell, E0);
    const VectorField velocity =
        next.velocity.size() == next.curve.size() ? next.velocity : VectorField(next.curve.dim(), next.curve.size());
    return velocity_bound_check(constant_speed(prev.curve).nodes(), constant_speed(next.curve).nodes(), dt, c,
                                velocity, arc_element(next.curve));
}

}  // namespace elastica
