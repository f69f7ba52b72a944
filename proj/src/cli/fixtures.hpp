#pragma once

#include <filesystem>

#include "navecon/analysis/sweep.hpp"

// Versioned calibration files. The bundled set under data/paper_baseline/
// carries the published reference calibration (hardware bill of materials,
// cost parameters, training statistics, evaluation metrics); alternate
// calibrations are plain edits of the same schemas.

namespace navecon::cli {

// Compile-time default (the repository's data/ directory); --data-dir
// overrides it at runtime.
std::filesystem::path default_data_dir();

econ::HardwareBOM load_bom(const std::filesystem::path& path);
econ::CostParams load_params(const std::filesystem::path& path);
econ::TrainingStats load_training(const std::filesystem::path& path);
econ::RunMetrics load_metrics(const std::filesystem::path& path);

// The four reference files from <data_dir>/paper_baseline/.
analysis::EconBaseline load_paper_baseline(const std::filesystem::path& data_dir);

}  // namespace navecon::cli
