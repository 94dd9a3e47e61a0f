#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pp4q/pyramid.hpp"
#include "pp4q/sequences.hpp"

namespace pp4q {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // filled on failure (expected vs got), often empty on pass
};

/// A named discrepancy between a printed formula/value and the structure
/// itself, together with the reading this implementation uses instead.
struct ErratumNote {
    std::string id;        // stable key, e.g. "sum-table-a9"
    std::string statement; // what the printed source says
    std::string evidence;  // the exact mismatch, with numbers
    std::string adopted;   // the reading used here
};

struct VerifyReport {
    int q = 0;
    unsigned n_max = 0;
    bool printed_d_feed = false;  // literal d^ feed was used (debug)
    std::vector<CheckResult> checks;
    std::vector<ErratumNote> errata;  // informational, not failures
    bool all_passed = false;
    std::string error;  // set when the run aborted (capacity, bad args)
    double elapsed_seconds = 0;
};

/// Cross-validates every independent computation route on the built pyramid:
/// graph censuses vs count recurrences, label sums vs sum recurrences vs the
/// matrix route, closed forms, generating-function series, order-reduced
/// recurrences, the interior identities, binomial product structure of the
/// labels, and (q = 5) the frozen per-level tables. n_max >= 4 recommended;
/// levels above what fits in `vertex_cap` are skipped for graph-backed
/// checks but sequence routes still run.
///
/// Passing DhatReading::PrintedUnhatted feeds the sum system with plain
/// vertex counts on the d^ line, a debug mode that demonstrates the
/// mismatch against the built structure (d^_3 = 4 vs 6 at q = 5).
VerifyReport run_verify(int q, unsigned n_max,
                        std::size_t vertex_cap = kDefaultVertexCap,
                        DhatReading reading = DhatReading::Hatted);

std::string verify_text(const VerifyReport& r);
std::string verify_json(const VerifyReport& r);

/// 0 = all passed, 1 = some check failed, 2 = run aborted.
int verify_exit_code(const VerifyReport& r);

}  // namespace pp4q
