#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "elastica/flow.hpp"

namespace elastica::io {

inline constexpr const char* kDiagnosticsHeader =
    "t,energy,length,lambda_direct,lambda_ibp,residual_l2,lambda_bound_lhs,lambda_bound_rhs,velocity_bound_lhs,velocity_bound_rhs,dt_used";

// diagnostics.csv, snapshot_<k>.csv and snapshots.csv (k, step, t) in dir.
void write_trajectory(const Trajectory& traj, const std::filesystem::path& dir);

void write_snapshot(const VectorField& nodes, const std::filesystem::path& path);
VectorField read_snapshot(const std::filesystem::path& path);

std::vector<Record> read_diagnostics(const std::filesystem::path& path);

struct SnapshotEntry {
    std::size_t index = 0;
    std::size_t step = 0;
    double t = 0.0;
};
std::vector<SnapshotEntry> read_snapshot_index(const std::filesystem::path& path);

}  // namespace elastica::io
