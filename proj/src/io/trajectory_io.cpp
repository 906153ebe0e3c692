#include "elastica/io/trajectory_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "elastica/errors.hpp"
#include "elastica/io/format.hpp"

namespace elastica::io {

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

double parse_double(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InvalidArgument("not a number: '" + std::string(s) + "'");
    return v;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    return in;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(line);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

void write_snapshot(const VectorField& nodes, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "x";
    for (std::size_t c = 0; c < nodes.dim(); ++c) out << ",coord_" << c;
    out << "\n";
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        out << format_double(static_cast<double>(i) / static_cast<double>(n - 1));
        for (std::size_t c = 0; c < nodes.dim(); ++c) out << "," << format_double(nodes(c, i));
        out << "\n";
    }
    finish(out, path);
}

VectorField read_snapshot(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw IoError(path.string() + ": empty snapshot file");
    const std::size_t cols = split(line).size();
    if (cols < 3) throw IoError(path.string() + ": expected columns x,coord_0,coord_1,...");
    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto items = split(line);
        if (items.size() != cols) throw IoError(path.string() + ":" + std::to_string(lineno) + ": wrong column count");
        std::vector<double> row;
        try {
            for (std::size_t c = 1; c < cols; ++c) row.push_back(parse_double(items[c]));
        } catch (const InvalidArgument& e) {
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        rows.push_back(std::move(row));
    }
    VectorField f(cols - 1, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) f.set_node(i, rows[i]);
    return f;
}

void write_trajectory(const Trajectory& traj, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
    {
        const auto path = dir / "diagnostics.csv";
        std::ofstream out = open_out(path);
        out << kDiagnosticsHeader << "\n";
        for (const Record& r : traj.records) {
            const double v[] = {r.t,           r.energy,      r.length,      r.lambda_direct,
                                r.lambda_ibp,  r.residual_l2, r.lambda_bound_lhs, r.lambda_bound_rhs,
                                r.velocity_bound_lhs, r.velocity_bound_rhs, r.dt_used};
            for (std::size_t j = 0; j < std::size(v); ++j) out << (j ? "," : "") << format_double(v[j]);
            out << "\n";
        }
        finish(out, path);
    }
    const auto index_path = dir / "snapshots.csv";
    std::ofstream index = open_out(index_path);
    index << "k,step,t\n";
    for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
        const Snapshot& s = traj.snapshots[k];
        write_snapshot(s.nodes, dir / ("snapshot_" + std::to_string(k) + ".csv"));
        index << k << "," << s.step << "," << format_double(s.t) << "\n";
    }
    finish(index, index_path);
}

std::vector<Record> read_diagnostics(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != kDiagnosticsHeader)
        throw IoError(path.string() + ": missing or unexpected header");
    std::vector<Record> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto items = split(line);
        if (items.size() != 11) throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected 11 columns");
        double v[11];
        try {
            for (int j = 0; j < 11; ++j) v[j] = parse_double(items[j]);
        } catch (const InvalidArgument& e) {
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        out.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10]});
    }
    return out;
}

std::vector<SnapshotEntry> read_snapshot_index(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string line;
    std::getline(in, line);
    std::vector<SnapshotEntry> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto items = split(line);
        if (items.size() != 3) throw IoError(path.string() + ": expected k,step,t rows");
        out.push_back({static_cast<std::size_t>(parse_double(items[0])), static_cast<std::size_t>(parse_double(items[1])),
                       parse_double(items[2])});
    }
    return out;
}

}  // namespace elastica::io
