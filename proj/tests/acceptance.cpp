// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <cstdlib>
#include <iostream>
#include <string>

#include "rigidwitt/suites.hpp"

int main(int argc, char** argv) {
    rigidwitt::SuiteOptions opts;
    std::string suite = "acceptance";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--verbose") opts.log = &std::cerr;
        else if (arg == "--seed" && i + 1 < argc) opts.seed = std::stoull(argv[++i]);
        else if (arg == "--samples" && i + 1 < argc) opts.samples = std::stoi(argv[++i]);
        else suite = arg;
    }
    bool all = true;
    for (const auto& r : rigidwitt::run_suite(suite, opts)) {
        std::cout << rigidwitt::format_result(r) << std::endl;
        all = all && r.passed;
    }
    std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
