#pragma once

// Box scans over homogeneous systems: deterministic enumeration ordered by
// oracle matrix cost, per-system comparison of the reduction classifier with
// the modular oracle, frozen CSV output, and a worker pool that emits records
// in enumeration order regardless of completion order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scrollsys/oracle.hpp"
#include "scrollsys/reduction.hpp"

namespace scrollsys {

struct Range {
  Int lo = 0;
  Int hi = 0;  // inclusive
};

struct ScanConfig {
  Range n{0, 5};
  Range a{0, 12};
  Range b{0, 8};
  Range m{1, 3};
  Range r{1, 12};
  std::uint64_t prime1 = kDefaultPrime;
  std::uint64_t prime2 = kSecondPrime;
  int trials = 1;
  std::uint64_t seed = 42;
  std::size_t resume = 0;  // skip this many systems of the enumeration order
  int workers = 0;         // 0 = hardware concurrency
};

struct ScanRecord {
  SystemSpec spec;
  Int v = 0;
  Int e = -1;
  Int l_est = -1;
  Verdict verdict = Verdict::Inconclusive;  // oracle verdict
  bool classifier_special = false;          // reduction-procedure verdict
  std::optional<int> table1_row;
  bool agree = false;
};

// Every homogeneous system in the box, sorted by condition-matrix cost
// (rows x columns), ties by (n, a, b, m, r).  The order is the resume/token
// order and never depends on the configuration beyond the ranges.
std::vector<SystemSpec> enumerate_box(const ScanConfig& cfg);

// Classifier + two-prime oracle comparison for one system.
ScanRecord evaluate_system(const SystemSpec& s, const ScanConfig& cfg);

struct ScanSummary {
  std::size_t total = 0;
  std::size_t special = 0;
  std::size_t disagreements = 0;
  std::size_t inconclusive = 0;
};

// Runs the scan from cfg.resume to the end of the enumeration.  sink is
// called from the calling thread, in enumeration order, with the global
// index of each record.
ScanSummary run_scan(const ScanConfig& cfg,
                     const std::function<void(std::size_t, const ScanRecord&)>& sink);

// Frozen CSV surface, versioned in the header comment.
std::string csv_header();
std::string to_csv(const ScanRecord& rec);

}  // namespace scrollsys
