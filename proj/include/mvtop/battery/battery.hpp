#pragma once

#include <string>
#include <vector>

namespace mvtop {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    long cases = 0;
    long failures = 0;
    double seconds = 0;
    double limit_seconds = 0;
    std::vector<std::string> notes; // certificates and first failures
};

struct BatteryOptions {
    int bound_degree = 2;
    long bound_height = 2;
    unsigned jobs = 1;
};

std::vector<int> criterion_ids();

/// Runs one criterion; pass requires zero failures, enough cases and the
/// time limit. Never throws: errors count as failures.
CriterionResult run_criterion(int id, const BatteryOptions& options);

/// Results sorted by id regardless of jobs.
std::vector<CriterionResult> run_battery(const BatteryOptions& options, const std::vector<int>& ids = {});

std::string summary_line(const CriterionResult& r);

} // namespace mvtop
