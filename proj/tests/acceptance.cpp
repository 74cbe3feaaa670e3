// Runs the twelve acceptance criteria with the default seed and prints one line each.
// Bounds are pinned inside the criterion functions; exit status is 1 if any criterion fails.

#include <cstdio>

#include "scalar/fixture.hpp"
#include "scalar/suites.hpp"

int main() {
    using namespace scalar::suites;
    const Options opt;
    int failed = 0;
    for (const Criterion& c : run_all(opt)) {
        std::printf("%s %2d  %s  value %s  bound %s  (%s)\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    scalar::format_number(c.worst).c_str(), scalar::format_number(c.bound).c_str(), c.detail.c_str());
        failed += !c.pass;
    }
    std::printf("%d/12 criteria passed\n", 12 - failed);
    return failed ? 1 : 0;
}
