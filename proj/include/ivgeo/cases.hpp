#ifndef IVGEO_CASES_HPP
#define IVGEO_CASES_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivgeo/directional.hpp"

namespace ivgeo {

struct UnknownCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ToleranceConfig {
    double tol = 1e-6;
    StepSchedule sched{};
    int theta_count = 17;
    int s_count = 9;
};

/// Plain key=value configuration (tol, s0, rho, K, grid.theta.count,
/// grid.s.count). Later keys win; unknown keys are rejected.
ToleranceConfig load_config(std::istream& in, ToleranceConfig base = {});

struct Assertion {
    std::string name;
    nlohmann::json expected;
    nlohmann::json actual;
    double tol = 0.0;
    bool pass = false;
};

struct Report {
    std::string case_id;
    std::string paper_location;
    std::vector<Assertion> assertions;
    long long runtime_ms = 0;

    bool pass() const;
};

struct CaseInfo {
    std::string id;
    std::string location;
};

/// Fixed verification registry, in deterministic run order.
const std::vector<CaseInfo>& registry();

Report run_case(const std::string& id, const ToleranceConfig& cfg);

struct RunSummary {
    std::vector<Report> reports;
    int passed = 0;
    int failed = 0;

    bool all_pass() const { return failed == 0; }
};

RunSummary run_all(const ToleranceConfig& cfg);

nlohmann::json report_json(const Report& r);
std::string report_markdown(const Report& r);

} // namespace ivgeo

#endif
