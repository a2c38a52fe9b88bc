#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimahonian/error.hpp"
#include "bimahonian/json_io.hpp"

namespace bimahonian {

struct CheckResult {
    std::string name;
    Json inputs;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Unset sizes fall back to each suite's default range.
struct VerifyConfig {
    std::optional<int> d;
    std::optional<int> n;
    std::optional<int> degree;  // genfun (t,q)-degree bound
    Budget budget;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg = {});

Json suite_report_to_json(const SuiteReport& rep);

}  // namespace bimahonian
