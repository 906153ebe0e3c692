#include "elastica/io/svg.hpp"

#include <algorithm>
#include <fstream>

#include "elastica/errors.hpp"
#include "elastica/io/format.hpp"
#include "elastica/log.hpp"

namespace elastica::io {

void render_snapshot(const DiscreteCurve& curve, const std::filesystem::path& path) {
    if (curve.dim() > 2)
        log::warn("render_snapshot: curve lives in R^{}, drawing coordinates 0 and 1 only", curve.dim());
    const VectorField& f = curve.nodes();
    const BoundaryData& bc = curve.boundary();
    const std::size_t n = curve.size();

    double xmin = f(0, 0), xmax = xmin, ymin = f(1, 0), ymax = ymin;
    for (std::size_t i = 0; i < n; ++i) {
        xmin = std::min(xmin, f(0, i));
        xmax = std::max(xmax, f(0, i));
        ymin = std::min(ymin, f(1, i));
        ymax = std::max(ymax, f(1, i));
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    if (!(span > 0.0)) span = 1.0;
    const double arrow = 0.1 * span;
    // tangent arrows belong in the picture too
    for (const auto& [p, t] : {std::pair{&bc.p0, &bc.tau0}, std::pair{&bc.p1, &bc.tau1}}) {
        xmin = std::min(xmin, (*p)[0] + arrow * (*t)[0]);
        xmax = std::max(xmax, (*p)[0] + arrow * (*t)[0]);
        ymin = std::min(ymin, (*p)[1] + arrow * (*t)[1]);
        ymax = std::max(ymax, (*p)[1] + arrow * (*t)[1]);
    }
    const double w = std::max(xmax - xmin, 1e-12 * span), h = std::max(ymax - ymin, 1e-12 * span);
    const double mx = 0.05 * w, my = 0.05 * h;
    const double stroke = 0.004 * span;

    // SVG y grows downwards; flip so the picture matches the coordinates.
    auto X = [&](double x) { return format_double(x); };
    auto Y = [&](double y) { return format_double(-y); };

    std::ofstream out(path);
    if (!out) throw IoError("cannot write SVG to " + path.string());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << X(xmin - mx) << " " << Y(ymax + my) << " "
        << format_double(w + 2 * mx) << " " << format_double(h + 2 * my) << "\">\n";
    out << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/></marker></defs>\n";
    out << "<polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"" << format_double(stroke) << "\" points=\"";
    for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << X(f(0, i)) << "," << Y(f(1, i));
    out << "\"/>\n";
    for (const auto& [p, t] : {std::pair{&bc.p0, &bc.tau0}, std::pair{&bc.p1, &bc.tau1}}) {
        out << "<circle class=\"endpoint\" cx=\"" << X((*p)[0]) << "\" cy=\"" << Y((*p)[1]) << "\" r=\""
            << format_double(3 * stroke) << "\" fill=\"#000\"/>\n";
        out << "<line class=\"tangent\" x1=\"" << X((*p)[0]) << "\" y1=\"" << Y((*p)[1]) << "\" x2=\""
            << X((*p)[0] + arrow * (*t)[0]) << "\" y2=\"" << Y((*p)[1] + arrow * (*t)[1]) << "\" stroke=\"#c0392b\" "
            << "stroke-width=\"" << format_double(stroke) << "\" marker-end=\"url(#head)\"/>\n";
    }
    out << "</svg>\n";
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace elastica::io
