// Acceptance suite: runs the desk-profile verification grid and prints one
// pass/fail line per criterion.  Exit code is the number of failed
// criteria, so 0 means everything holds at the declared windows.

#include <cstdio>
#include <map>

#include "schroder/schroder.hpp"

int main() {
    using namespace schroder;
    CheckSet cs = desk_profile();
    std::vector<VerificationReport> reports = cs.run();

    std::map<int, std::vector<const VerificationReport*>> by_criterion;
    for (const auto& r : reports) by_criterion[r.criterion].push_back(&r);

    int failed_criteria = 0;
    double total_ms = 0;
    for (const auto& [criterion, group] : by_criterion) {
        bool pass = true;
        double ms = 0;
        for (const auto* r : group) {
            pass = pass && r->pass;
            ms += r->ms;
        }
        total_ms += ms;
        std::printf("[%s] criterion %2d: %s (%d checks, %.0f ms)\n",
                    pass ? "PASS" : "FAIL", criterion, criterion_title(criterion),
                    static_cast<int>(group.size()), ms);
        if (!pass) {
            ++failed_criteria;
            for (const auto* r : group) {
                if (r->pass) continue;
                std::string detail = "mismatch";
                if (r->discrepancy) {
                    if (!r->discrepancy->note.empty()) detail = r->discrepancy->note;
                    if (r->discrepancy->x)
                        detail += " at x^" + std::to_string(*r->discrepancy->x);
                    if (r->discrepancy->a)
                        detail += " a^" + std::to_string(*r->discrepancy->a);
                    if (r->discrepancy->q)
                        detail += " q^" + std::to_string(*r->discrepancy->q);
                    if (!r->discrepancy->expected.empty())
                        detail += " expected " + r->discrepancy->expected + " got " +
                                  r->discrepancy->got;
                }
                std::printf("       %s %s: %s\n", r->check.c_str(),
                            r->params.dump().c_str(), detail.c_str());
            }
        }
    }
    std::printf("%d/%d criteria passed in %.1f s\n",
                static_cast<int>(by_criterion.size()) - failed_criteria,
                static_cast<int>(by_criterion.size()), total_ms / 1000.0);
    return failed_criteria;
}
