#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homim {

struct SelftestCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool all_pass() const;
};

/// Always-on property suite: noiseless round trips over the full
/// scheme/N/L/alpha grid plus the structural invariants (anti-symmetry,
/// unit energy, clipping halving, filter idempotence, activation-pattern
/// bijection, superposition table cross-check, noise calibration, channel
/// delay spread).
SelftestReport run_selftest();

void print_report(const SelftestReport& report, std::ostream& out);

}  // namespace homim
