// Acceptance gate: runs every acceptance criterion and prints one line per
// item. Exit 0 iff all selected items pass.

#include "isoclass/acceptance.hpp"

#include "CLI11.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    CLI::App app{"isoclass acceptance suite"};
    isoclass::AcceptanceOptions opts;
    app.add_option("--filter", opts.filter, "run only criteria whose id or tag contains this");
    app.add_option("--workers", opts.workers, "worker threads for parallel criteria")
        ->check(CLI::PositiveNumber);
    app.add_flag("--inject-failure", opts.inject_failure,
                 "self-test: perturb a class number so criterion 1 must fail");
    CLI11_PARSE(app, argc, argv);

    const auto results = isoclass::acceptance_suite(opts);
    bool all_pass = !results.empty();
    for (const auto& r : results) {
        std::puts(isoclass::format_result_line(r).c_str());
        all_pass = all_pass && r.pass;
    }
    if (results.empty())
        std::puts("no acceptance criteria matched the filter");
    return all_pass ? 0 : 1;
}
