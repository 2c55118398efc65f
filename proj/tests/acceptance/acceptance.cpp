#include "mvtop/battery/battery.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    mvtop::BatteryOptions o;
    std::vector<int> only;
    bool verbose = false;
    CLI::App app{"acceptance battery"};
    app.add_option("--only", only, "criterion ids to run");
    app.add_option("--bound-degree", o.bound_degree, "brute-force bidegree bound");
    app.add_option("--bound-height", o.bound_height, "brute-force coefficient bound");
    app.add_option("--jobs", o.jobs, "criteria run in parallel");
    app.add_flag("-v,--verbose", verbose, "print notes");
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (const auto& r : mvtop::run_battery(o, only)) {
        std::cout << mvtop::summary_line(r) << "\n";
        if (verbose || !r.pass) {
            for (const auto& n : r.notes) {
                std::cout << "    " << n << "\n";
            }
        }
        failed += r.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
