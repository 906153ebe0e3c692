#include "elastica/io/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "elastica/errors.hpp"
#include "elastica/io/format.hpp"

namespace elastica::io {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& v) {
    try {
        return parse_double(v);
    } catch (const InvalidArgument&) {
        throw InvalidArgument("key '" + key + "': expected a number, got '" + v + "'");
    }
}

std::uint64_t to_unsigned(const std::string& key, const std::string& v) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw InvalidArgument("key '" + key + "': expected a nonnegative integer, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    throw InvalidArgument("key '" + key + "': expected on/off, got '" + v + "'");
}

Point to_point(const std::string& key, const std::string& v) {
    Point p;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        const std::string t = trim(item);
        if (!t.empty()) p.push_back(to_double(key, t));
    }
    if (p.size() < 2) throw InvalidArgument("key '" + key + "': expected a comma-separated vector, got '" + v + "'");
    return p;
}

InitialKind to_kind(const std::string& v) {
    if (v == "semicircle") return InitialKind::Semicircle;
    if (v == "arc") return InitialKind::Arc;
    if (v == "perturbed_arc") return InitialKind::PerturbedArc;
    if (v == "from_file") return InitialKind::FromFile;
    throw InvalidArgument("initial.kind: unknown kind '" + v + "'");
}

std::string point_text(const Point& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += format_double(p[i]);
    }
    return s;
}

}  // namespace

std::string to_string(InitialKind kind) {
    switch (kind) {
        case InitialKind::Semicircle: return "semicircle";
        case InitialKind::Arc: return "arc";
        case InitialKind::PerturbedArc: return "perturbed_arc";
        case InitialKind::FromFile: return "from_file";
    }
    return "?";
}

void set_key(RunConfig& c, const std::string& key, const std::string& v) {
    FlowConfig& f = c.flow;
    if (key == "boundary.p0") c.boundary.p0 = to_point(key, v);
    else if (key == "boundary.p1") c.boundary.p1 = to_point(key, v);
    else if (key == "boundary.tau0") c.boundary.tau0 = to_point(key, v);
    else if (key == "boundary.tau1") c.boundary.tau1 = to_point(key, v);
    else if (key == "boundary.ell") c.boundary.ell = to_double(key, v);
    else if (key == "initial.kind") c.initial.kind = to_kind(v);
    else if (key == "initial.radius") c.initial.radius = to_double(key, v);
    else if (key == "initial.angle") c.initial.angle = to_double(key, v);
    else if (key == "initial.amp") c.initial.amp = to_double(key, v);
    else if (key == "initial.mode") c.initial.mode = static_cast<int>(to_unsigned(key, v));
    else if (key == "initial.path") c.initial.path = v;
    else if (key == "initial.dim") c.initial.dim = to_unsigned(key, v);
    else if (key == "flow.n_nodes") f.n_nodes = to_unsigned(key, v);
    else if (key == "flow.dt") f.dt = to_double(key, v);
    else if (key == "flow.t_end") f.t_end = to_double(key, v);
    else if (key == "flow.max_steps") f.max_steps = to_unsigned(key, v);
    else if (key == "flow.gamma_refreeze_every") f.gamma_refreeze_every = static_cast<int>(to_unsigned(key, v));
    else if (key == "flow.save_every") f.save_every = static_cast<int>(to_unsigned(key, v));
    else if (key == "flow.length_projection") f.length_projection = to_bool(key, v);
    else if (key == "flow.stop_residual") f.stop_residual = to_double(key, v);
    else if (key == "flow.gamma_min") f.gamma_min = to_double(key, v);
    else if (key == "flow.eps_E") f.eps_E = to_double(key, v);
    else if (key == "flow.diag_slack") f.diag_slack = to_double(key, v);
    else if (key == "flow.velocity_allowance") f.velocity_allowance = to_double(key, v);
    else if (key == "flow.max_retries") f.max_retries = static_cast<int>(to_unsigned(key, v));
    else if (key == "output.dir") c.output_dir = v;
    else if (key == "seed") c.seed = to_unsigned(key, v);
    else throw InvalidArgument("unknown key '" + key + "'");
}

RunConfig parse_config(std::string_view text, const std::string& origin) {
    RunConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(std::string_view(t).substr(0, eq));
        const std::string value = trim(std::string_view(t).substr(eq + 1));
        try {
            set_key(c, key, value);
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

std::string echo(const RunConfig& c) {
    std::ostringstream o;
    const FlowConfig& f = c.flow;
    if (c.boundary.p0) o << "boundary.p0 = " << point_text(*c.boundary.p0) << "\n";
    if (c.boundary.p1) o << "boundary.p1 = " << point_text(*c.boundary.p1) << "\n";
    if (c.boundary.tau0) o << "boundary.tau0 = " << point_text(*c.boundary.tau0) << "\n";
    if (c.boundary.tau1) o << "boundary.tau1 = " << point_text(*c.boundary.tau1) << "\n";
    if (c.boundary.ell) o << "boundary.ell = " << format_double(*c.boundary.ell) << "\n";
    o << "initial.kind = " << to_string(c.initial.kind) << "\n";
    o << "initial.radius = " << format_double(c.initial.radius) << "\n";
    o << "initial.angle = " << format_double(c.initial.angle) << "\n";
    o << "initial.amp = " << format_double(c.initial.amp) << "\n";
    o << "initial.mode = " << c.initial.mode << "\n";
    if (!c.initial.path.empty()) o << "initial.path = " << c.initial.path << "\n";
    o << "initial.dim = " << c.initial.dim << "\n";
    o << "flow.n_nodes = " << f.n_nodes << "\n";
    o << "flow.dt = " << format_double(f.dt) << "\n";
    o << "flow.t_end = " << format_double(f.t_end) << "\n";
    o << "flow.max_steps = " << f.max_steps << "\n";
    o << "flow.gamma_refreeze_every = " << f.gamma_refreeze_every << "\n";
    o << "flow.save_every = " << f.save_every << "\n";
    o << "flow.length_projection = " << (f.length_projection ? "on" : "off") << "\n";
    o << "flow.stop_residual = " << format_double(f.stop_residual) << "\n";
    o << "flow.gamma_min = " << format_double(f.gamma_min) << "\n";
    o << "flow.eps_E = " << format_double(f.eps_E) << "\n";
    o << "flow.diag_slack = " << format_double(f.diag_slack) << "\n";
    o << "flow.velocity_allowance = " << format_double(f.velocity_allowance) << "\n";
    o << "flow.max_retries = " << f.max_retries << "\n";
    o << "output.dir = " << c.output_dir << "\n";
    o << "seed = " << c.seed << "\n";
    return o.str();
}

}  // namespace elastica::io
