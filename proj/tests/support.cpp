#include "support.hpp"

#include "elastica/io/initial.hpp"

#include <numbers>
#include <vector>

namespace testing_support {

VectorField sample(std::size_t n, std::size_t dim, const std::function<void(double, double*)>& f) {
    VectorField v(dim, n);
    std::vector<double> p(dim);
    for (std::size_t i = 0; i < n; ++i) {
        f(static_cast<double>(i) / static_cast<double>(n - 1), p.data());
        v.set_node(i, p);
    }
    return v;
}

DiscreteCurve semicircle(std::size_t n, double r) {
    BoundaryData bc{{-r, 0.0}, {r, 0.0}, {0.0, 1.0}, {0.0, -1.0}, std::numbers::pi * r};
    auto f = [r](double x, double* p) {
        p[0] = -r * std::cos(std::numbers::pi * x);
        p[1] = r * std::sin(std::numbers::pi * x);
    };
    return DiscreteCurve::pinned(sample(n, 2, f), bc);
}

BoundaryData boundary_of(const std::function<void(double, double*)>& f, std::size_t dim) {
    const double eps = 1e-6;
    std::vector<double> a(dim), b(dim), c(dim);
    BoundaryData bc;
    // second-order one-sided differences
    auto tangent = [&](double x, double sgn) {
        f(x, a.data());
        f(x + sgn * eps, b.data());
        f(x + sgn * 2 * eps, c.data());
        std::vector<double> t(dim);
        double s = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            t[k] = sgn * (-3 * a[k] + 4 * b[k] - c[k]);
            s += t[k] * t[k];
        }
        for (double& v : t) v /= std::sqrt(s);
        return t;
    };
    f(0.0, a.data());
    bc.p0.assign(a.begin(), a.end());
    f(1.0, a.data());
    bc.p1.assign(a.begin(), a.end());
    bc.tau0 = tangent(0.0, 1.0);
    bc.tau1 = tangent(1.0, -1.0);
    for (double& v : bc.tau1) v = -v;
    const int m = 400000;
    double len = 0.0;
    f(0.0, a.data());
    for (int i = 1; i <= m; ++i) {
        f(static_cast<double>(i) / m, b.data());
        double s = 0.0;
        for (std::size_t k = 0; k < dim; ++k) s += (b[k] - a[k]) * (b[k] - a[k]);
        len += std::sqrt(s);
        std::swap(a, b);
    }
    bc.ell = len;
    return bc;
}

RandomCurve::RandomCurve(std::mt19937_64& rng, double amp) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (double& v : a) v = amp * g(rng);
    warp = 0.05 * std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
}

void RandomCurve::operator()(double x, double* out) const {
    const double pi = std::numbers::pi;
    const double s = std::sin(pi * x);
    double u = 0.0;
    for (int m = 0; m < 4; ++m) u += a[m] * std::sin((m + 1) * pi * x);
    u *= s * s;
    const double th = pi * (x + warp * std::sin(2 * pi * x));
    out[0] = -(1.0 + u) * std::cos(th);
    out[1] = (1.0 + u) * std::sin(th);
}

DiscreteCurve RandomCurve::sampled(std::size_t n) const {
    auto f = [this](double x, double* p) { (*this)(x, p); };
    return DiscreteCurve::pinned(sample(n, 2, f), boundary_of(f, 2));
}

DiscreteCurve perturbed_arc(std::size_t n, double amp, int mode) {
    elastica::io::RunConfig cfg;
    cfg.initial.kind = elastica::io::InitialKind::PerturbedArc;
    cfg.initial.amp = amp;
    cfg.initial.mode = mode;
    cfg.flow.n_nodes = n;
    return elastica::io::generate_initial(cfg);
}

double fit_h2(double q_coarse, double q_fine, double h_coarse, double h_fine) {
    return (q_coarse - q_fine) / (h_coarse * h_coarse - h_fine * h_fine);
}

}  // namespace testing_support
