// Acceptance battery: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion.  Exits nonzero when any fails.
#include "blockspec/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    blockspec::VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&](const char* what) {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << what << "\n";
                std::exit(2);
            }
            return std::string(argv[++i]);
        };
        if (arg == "--digits") opt.digits = static_cast<unsigned>(std::stoul(next("--digits")));
        else if (arg == "--seed") opt.seed = std::stoull(next("--seed"));
        else if (arg == "--samples") opt.samples = std::stoi(next("--samples"));
        else {
            std::cerr << "usage: acceptance [--digits D] [--seed S] [--samples N]\n";
            return 2;
        }
    }
    auto results = blockspec::run_acceptance(std::cout, opt);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::cout << (failed == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failed) + " criterion(s) failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
