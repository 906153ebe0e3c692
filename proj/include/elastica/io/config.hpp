#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "elastica/curve.hpp"
#include "elastica/flow.hpp"

namespace elastica::io {

enum class InitialKind { Semicircle, Arc, PerturbedArc, FromFile };

struct InitialSpec {
    InitialKind kind = InitialKind::Semicircle;
    double radius = 1.0;
    double angle = 3.141592653589793;  // opening angle of the arc
    double amp = 0.1;
    int mode = 1;
    std::string path;  // from_file
    std::size_t dim = 2;
};

// Boundary entries given in the file; anything missing is derived from the
// generated curve.
struct BoundaryOverrides {
    std::optional<Point> p0, p1, tau0, tau1;
    std::optional<double> ell;
};

struct RunConfig {
    BoundaryOverrides boundary;
    InitialSpec initial;
    FlowConfig flow;
    std::string output_dir = "run";
    std::uint64_t seed = 0;
};

// `key = value` lines, `#` starts a comment. InvalidArgument names the line.
RunConfig parse_config(std::string_view text, const std::string& origin = "<config>");
RunConfig load_config(const std::filesystem::path& path);

// Sets one dotted key; the same routine backs the parser and CLI overrides.
void set_key(RunConfig& config, const std::string& key, const std::string& value);

// Canonical text form; parse_config(echo(c)) reproduces c.
std::string echo(const RunConfig& config);

std::string to_string(InitialKind kind);

}  // namespace elastica::io
