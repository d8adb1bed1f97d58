#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tubal/multiway.hpp"

namespace tubal {

/// Configuration of the random-recovery benchmark: the observed tensor is
/// A = A0/||A0|| + beta * E/||E|| with A0 a rank-`rank` sum of Gaussian
/// outer products over all axes (tubal axis = dims.back(), never truncated)
/// and E Gaussian. Both algorithms truncate every non-tubal mode to `trunc`.
struct BenchConfig {
    std::vector<Index> dims;  // I1, ..., IN, last entry = tubal length p
    int rank = 5;
    double beta = 0.1;
    Index trunc = 5;
    int trials = 50;
    std::uint64_t seed = 0;
};

struct BenchRow {
    std::string config;  // e.g. "10x10x10x10"
    std::string algo;    // "tr" or "seq"
    Index trunc;
    double err;      // ||signal - reconstruction|| (signal has unit norm)
    double bound;    // Thm-level bound on ||A - reconstruction|| plus beta
    double time_ms;  // wall time of the decomposition + reconstruction
};

struct BenchReport {
    std::vector<BenchRow> rows;  // trials x {tr, seq}, in trial order
    double mean_err_tr = 0, mean_err_seq = 0;
    double mean_time_tr_ms = 0, mean_time_seq_ms = 0;
};

/// Deterministic given (seed, config): trial t draws from stream (seed, t).
BenchReport run_bench(const BenchConfig& cfg);

/// Observed tensor and unit-norm signal for one trial (exposed for tests).
void make_bench_instance(const BenchConfig& cfg, int trial, TubalTensor& signal,
                         TubalTensor& observed);

/// Header `config,algo,trunc,err,bound,time_ms`; floats at 6 significant
/// digits. Appends two aggregate rows with algo "tr_mean" / "seq_mean".
std::string to_csv(const BenchReport& report);

} // namespace tubal
