// Copyright 2026 The comqel Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * CSV/JSON persistence of experiment results.
 *
 * results.csv header:
 *   seed,method,tau,ansatz,x_hat_0..x_hat_{d-1},f_true,usefulness,novelty,
 *   final_mse,final_C,final_alpha,wall_ms
 * Floats carry 17 significant digits; tau is "none" for unconstrained runs.
 */
#pragma once

#include "comqel/experiment.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace comqel {

std::string format_double(double v);
std::string format_tau(const std::optional<double>& tau);

std::vector<std::string> results_header(int dim);

/// One CSV row; wall_ms is left out when `with_wall_time` is false, which is
/// the form used for replay comparison.
std::string format_result_row(const RunResult& r, bool with_wall_time = true);

void write_results_csv(std::ostream& os, const std::vector<RunResult>& results, int dim);

/// Parses a results.csv. Throws ConfigError on a malformed file.
std::vector<RunResult> read_results_csv(std::istream& is);

/// seed,method,tau,ansatz,epoch,mse,C,alpha,wall_ms
void write_traces_csv(std::ostream& os, const std::vector<RunResult>& results);

/// method,tau,ansatz,count,{usefulness,novelty}_{min,q25,median,q75,max}
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

/// seed,method,tau,ansatz,error
void write_errors_csv(std::ostream& os, const std::vector<RunResult>& results);

/// Resolved config plus code version and RNG description.
nlohmann::json run_metadata(const ExperimentConfig& config);

/// Writes results.csv, traces.csv, summary.csv, metadata.json and, if any
/// run failed, errors.csv into `dir`.
void write_experiment(const std::filesystem::path& dir, const ExperimentConfig& config,
                      const std::vector<RunResult>& results);

} // namespace comqel
