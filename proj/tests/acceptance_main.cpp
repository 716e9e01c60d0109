// Acceptance suite: twelve numbered criteria, one pass/fail line each.
// Run with no arguments for the whole ladder or with --criterion N for a
// single one (the ctest registration uses the latter).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "merosin/verify.hpp"

namespace {

const char* kCriterionTitle[13] = {
    nullptr,
    "bifurcation constants match ranges and bisection oracles",
    "ladder ordering and 2-equation solve2d oracles",
    "multipliers at the bifurcation points",
    "real orbit convergence (origin regime and attracting pair)",
    "turbulence certificate across the chaos threshold",
    "period-doubling probe around lambda_star",
    "imaginary axis orbit fates",
    "forward-invariant disk around the origin",
    "figure-window grid classification",
    "classification commutes with the symmetries",
    "critical points stay on the axes",
    "oracle equivalence for every derived value",
};

int run_criterion(merosin::verify::Suite& suite, int n) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto checks = suite.criterion(n);
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int passed = 0;
    for (const auto& chk : checks) passed += chk.pass;
    const bool ok = passed == static_cast<int>(checks.size());
    std::printf("[criterion %2d] %s  %-58s (%d/%zu checks, %.2fs)\n", n, ok ? "PASS" : "FAIL",
                kCriterionTitle[n], passed, checks.size(), dt);
    for (const auto& chk : checks)
        if (!chk.pass)
            std::printf("    FAIL %s\n      expected %s\n      observed %s\n", chk.name.c_str(),
                        chk.expected.dump().c_str(), chk.observed.dump().c_str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            threads = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--criterion N] [--threads N]\n", argv[0]);
            return 2;
        }
    }
    merosin::verify::Options opts;
    opts.threads = threads;
    merosin::verify::Suite suite(opts);

    int failures = 0;
    if (only != 0) {
        failures = run_criterion(suite, only);
    } else {
        for (int n = 1; n <= 12; ++n) failures += run_criterion(suite, n);
        std::printf("%d/12 criteria passed\n", 12 - failures);
    }
    return failures == 0 ? 0 : 1;
}
