// Verification driver: runs registry cases and emits text/JSON/markdown
// reports. Exit code 0 = all requested cases pass, 1 = at least one
// assertion failed, 2 = usage / configuration error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivgeo/cases.hpp"

namespace {

void print_text(const ivgeo::Report& r) {
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.case_id << "  (" << r.paper_location << ", "
              << r.runtime_ms << " ms)\n";
    for (const ivgeo::Assertion& a : r.assertions) {
        std::cout << "  [" << (a.pass ? "ok" : "FAIL") << "] " << a.name;
        if (!a.pass)
            std::cout << "  expected=" << a.expected.dump() << " actual=" << a.actual.dump()
                      << " tol=" << a.tol;
        std::cout << "\n";
    }
}

// "-" means stdout
bool write_out(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return true;
    }
    std::ofstream out(path);
    if (!out) return false;
    out << payload;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval-valued function verification lab"};

    std::string case_id;
    bool run_all = false, list_only = false;
    double tol = -1.0;
    std::string schedule, config_path, json_path, md_path;

    app.add_option("case", case_id, "Case id to run (see --list)");
    app.add_flag("--all", run_all, "Run every registered case");
    app.add_flag("--list", list_only, "List registered case ids and exit");
    app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
    app.add_option("--md", md_path, "Write the markdown report to this path ('-' for stdout)");
    app.add_option("--tol", tol, "Convergence/comparison tolerance");
    app.add_option("--schedule", schedule, "Step schedule as s0,rho,K");
    app.add_option("--config", config_path, "key=value configuration file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (list_only) {
        for (const ivgeo::CaseInfo& c : ivgeo::registry())
            std::cout << c.id << "\t" << c.location << "\n";
        return 0;
    }
    if (!run_all && case_id.empty()) {
        std::cerr << "error: give a case id or --all (see --list)\n";
        return 2;
    }
    if (run_all && !case_id.empty()) {
        std::cerr << "error: a case id and --all are mutually exclusive\n";
        return 2;
    }

    ivgeo::ToleranceConfig cfg;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot open config file: " + config_path);
            cfg = ivgeo::load_config(in, cfg);
        }
        if (tol > 0.0) cfg.tol = tol;
        if (!schedule.empty()) {
            std::istringstream ss(schedule);
            char c1 = 0, c2 = 0;
            if (!(ss >> cfg.sched.s0 >> c1 >> cfg.sched.rho >> c2 >> cfg.sched.steps) ||
                c1 != ',' || c2 != ',')
                throw std::runtime_error("bad --schedule, expected s0,rho,K");
        }
        cfg.sched.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<ivgeo::Report> reports;
    try {
        if (run_all) {
            reports = ivgeo::run_all(cfg).reports;
        } else {
            reports.push_back(ivgeo::run_case(case_id, cfg));
        }
    } catch (const ivgeo::UnknownCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (!json_path.empty()) {
        nlohmann::json out = nlohmann::json::array();
        for (const ivgeo::Report& r : reports) out.push_back(ivgeo::report_json(r));
        const std::string payload =
            (reports.size() == 1 ? out[0].dump(2) : out.dump(2)) + "\n";
        if (!write_out(json_path, payload)) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
    }
    if (!md_path.empty()) {
        std::string payload;
        for (const ivgeo::Report& r : reports) payload += ivgeo::report_markdown(r);
        if (!write_out(md_path, payload)) {
            std::cerr << "error: cannot write " << md_path << "\n";
            return 2;
        }
    }

    bool all_pass = true;
    const bool quiet = json_path == "-" || md_path == "-";
    for (const ivgeo::Report& r : reports) {
        if (!quiet) print_text(r);
        all_pass = all_pass && r.pass();
    }
    if (!quiet && reports.size() > 1) {
        int passed = 0;
        for (const ivgeo::Report& r : reports) passed += r.pass();
        std::cout << passed << "/" << reports.size() << " cases passed\n";
    }
    return all_pass ? 0 : 1;
}
