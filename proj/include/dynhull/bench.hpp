#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dynhull/generators.hpp"
#include "dynhull/scalar.hpp"

namespace dynhull {

std::uint64_t fnv1a64(std::string_view s);

/// One benchmark measurement. op_counts describe a single representative
/// operation (one determinant / one update / one query), collected outside
/// the timed region so instrumentation never distorts wall times.
struct BenchRecord {
  std::string algorithm;
  int d = 0;
  long n = 0;  // input size where meaningful (points, queries); else 0
  char scenario = '-';
  std::string distribution = "-";
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t wall_time_ns = 0;
  OpCounter op_counts;
  std::uint64_t peak_mem_bytes_estimate = 0;
  std::uint64_t result_hash = 0;
  std::string status = "ok";  // ok | budget | skipped | oom | n/a
  std::string note;
};

/// Versioned CSV: "--" stands for not-measured (budget/skip), mirroring
/// the usual tables convention.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

struct DetBenchConfig {
  std::vector<int> dims;
  std::vector<Scenario> scenarios;
  std::vector<std::string> algorithms;  // subset of {laplace,bird,lu,dyninv,dynadj}
  std::uint64_t seed = 1;
  std::uint64_t trials_override = 0;  // 0: 1000 below dim 7, 100 from dim 7 on
  std::uint64_t budget_ms = 0;        // 0: unlimited; per (algorithm, dim) batch
};

/// Per-determinant timings of the static algorithms against the dynamic
/// updates, on a shared non-singular update chain per (scenario, dim).
/// Dynamic algorithms pay one untimed init, then are timed per update.
std::vector<BenchRecord> bench_determinants(const DetBenchConfig& cfg);

struct HullBenchConfig {
  std::vector<int> dims;
  std::vector<long> n_list;
  Distribution dist = Distribution::Sphere;
  bool integer_input = true;            // scalar kind of the generated points
  std::vector<std::string> variants;    // subset of {hashed-z,hashed-q,laplace}
  int threshold_dim = 6;
  std::uint64_t seed = 1;
  std::uint64_t budget_ms = 0;
};

/// Hull construction timings: hashed integer kernel, hashed rational
/// kernel, and the from-scratch Laplace baseline, on identical inputs.
std::vector<BenchRecord> bench_hull(const HullBenchConfig& cfg);

struct LocateBenchConfig {
  int d = 8;
  long n = 120;
  Distribution build_dist = Distribution::Sphere;
  Distribution query_dist = Distribution::Cube;
  long q_count = 1000;
  std::uint64_t seed = 1;
  std::uint64_t budget_ms = 0;
};

/// Point-location timings over one hashed build: preprocessing record,
/// then hashed-predicate queries vs from-scratch queries on the same walk.
std::vector<BenchRecord> bench_locate(const LocateBenchConfig& cfg);

}  // namespace dynhull
