// Gate binary: one line per acceptance criterion, exit 0 only if every
// criterion passes.  Seeds and sizes are fixed so reruns are comparable.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "matdec/suites.hpp"

using namespace matdec;

namespace {

struct Criterion {
    int number;
    const char* name;
    std::function<SuiteResult()> go;
    double limit_seconds;  // 0 = untimed
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "refinement containment", [] { return refinement_suite(1, 200); }, 600.0},
        {2, "class-count ceilings", [] { return bounds_suite(2, 60); }, 0.0},
        {3, "parse-tree equivalence", [] { return parsetree_suite(3, 20); }, 0.0},
        {4, "width values and staircase cap", [] { return width_suite(4, 12); }, 0.0},
        {5, "certificate compatibility", [] { return ftcompat_suite(5, 100); }, 0.0},
        {6, "graph-level minors", [] { return minors_suite(6, 100); }, 0.0},
        {7, "construction circuits", [] { return constructions_suite(); }, 0.0},
        {8, "gadget circuits on small graphs", [] { return courcelle_suite(); }, 0.0},
        {9, "cycle-count identity", [] { return nu_identity_suite(9, 1000); }, 0.0},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult res = c.go();
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool timed_out = c.limit_seconds > 0.0 && secs > c.limit_seconds;
        bool pass = res.pass && !timed_out;
        all = all && pass;

        char detail[128];
        std::snprintf(detail, sizeof detail, "%zu cases, %d failures, %.1fs%s", res.rows.size(),
                      res.failures(), secs, timed_out ? ", over the time limit" : "");
        std::printf("criterion %d %s: %s (%s)\n", c.number, c.name, pass ? "PASS" : "FAIL",
                    detail);
        std::fflush(stdout);
        if (!res.pass) {
            int shown = 0;
            for (const SuiteRow& row : res.rows) {
                if (row.pass) continue;
                if (++shown > 3) break;
                std::fprintf(stderr, "  case %d (instance %016llx): %s\n", row.index,
                             static_cast<unsigned long long>(row.instance), row.note.c_str());
            }
        }
    }
    return all ? 0 : 1;
}
