// Acceptance gate: one pass/fail line per criterion. Every comparison is
// exact rational equality at the stated truncations; the listed wall-clock
// budgets are asserted as well. Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>

#include "vertexlab/suites.hpp"

using vtx::SuiteParams;
using vtx::VerificationReport;

namespace {

int failures = 0;

struct Outcome {
    bool pass;
    long ms;
    std::string detail;
};

void line(int idx, const char* name, const Outcome& o) {
    std::printf("criterion %2d [%s] %-52s (%ld ms)%s%s\n", idx, o.pass ? "PASS" : "FAIL", name,
                o.ms, o.detail.empty() ? "" : " -- ", o.detail.c_str());
    if (!o.pass) ++failures;
}

Outcome run(const char* suite, long budget_ms, SuiteParams params = {}) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    bool pass = false;
    std::string detail;
    try {
        rep = vtx::run_suite(suite, params);
        pass = rep.pass();
        if (!pass)
            for (auto& c : rep.cases)
                if (!c.pass) {
                    detail = c.name + ": expected " + c.expected + ", got " + c.actual;
                    break;
                }
    } catch (const std::exception& e) {
        detail = e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (budget_ms > 0 && ms > budget_ms) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over the ") +
                  std::to_string(budget_ms) + " ms budget";
    }
    return {pass, ms, detail};
}

}  // namespace

int main() {
    std::printf("acceptance: exact checks at the stated truncations\n");

    line(1, "current OPEs of the thetas (all 9 basis pairs)", run("ope-currents", 1000));
    line(2, "Virasoro vectors and primaries", run("virasoro", 5000));
    line(3, "commutant memberships", run("commutant-membership", 5000));
    line(4, "structural identities on 200 seeded triples", run("identities", 60000));

    SuiteParams howe;
    howe.max_weight = 3;
    line(5, "Howe-pair dimensions w <= 3 (1, 3, 9, 22)", run("howe-dims", 120000, howe));

    SuiteParams t41;
    t41.level = 1;
    t41.max_level = 2;
    t41.max_degree = 6;
    line(6, "graded kernel = tau span (N=1, level<=2, deg<=6)", run("theorem41", 0, t41));

    line(7, "classical Weyl dimensions (4 copies, deg <= 4)", run("weyl", 0));
    line(8, "tau independence (rank 12) and PBW counts", run("tau-independence", 0));

    SuiteParams gb;
    gb.level = 1;
    line(9, "truncated Grobner ideal at N = 1", run("groebner", 120000, gb));

    line(10, "Der-action tables against the engine; k invariants", run("gr-compat", 0));

    std::printf(failures ? "ACCEPTANCE FAILED (%d criteria)\n" : "ACCEPTANCE PASSED\n", failures);
    return failures ? 1 : 0;
}
