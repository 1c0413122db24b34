// One PASS/FAIL line per acceptance criterion, with wall-clock limits.
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "ssp/ssp.hpp"

namespace {

struct Criterion {
    int id;
    double limit_ms;
    std::function<ssp::CheckResult()> run;
};

} // namespace

int main(int argc, char** argv) {
    ssp::VerifyOptions opt;
    opt.slow = true;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--no-slow")) {
            opt.slow = false;
        } else {
            std::fprintf(stderr, "usage: acceptance [--no-slow]\n");
            return 3;
        }
    }

    const std::vector<Criterion> criteria{
        {1, 1e3, [] { return ssp::checks::interaction_table(); }},
        {2, 1e3, [] { return ssp::checks::classification(true); }},
        {3, 1e3, [] { return ssp::checks::figure_fixtures(); }},
        {4, 120e3, [&] { return ssp::checks::oracle_equivalence(opt); }},
        {5, 60e3, [&] { return ssp::checks::nop_inp_reduction(opt); }},
        {6, 120e3, [&] { return ssp::checks::extension_equivalence(opt); }},
        {7, 300e3, [&] { return ssp::checks::nop_free_reduction(opt, 189 * 6 + 1); }},
        {8, 30e3, [] { return ssp::checks::swap_core_family(); }},
        {9, 120e3, [&] { return ssp::checks::engine_properties(opt); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto r = c.run();
        bool in_time = r.ms < c.limit_ms;
        bool ok = r.passed && in_time;
        if (!ok) ++failed;
        std::printf("%s %d %s [%.0f ms / limit %.0f ms] %s%s\n", ok ? "PASS" : "FAIL", c.id, r.name.c_str(), r.ms,
                    c.limit_ms, r.detail.c_str(), in_time ? "" : " (over time limit)");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
