#pragma once

#include <string>
#include <vector>

namespace lgv::verify {

inline constexpr const char* kReportVersion = "1.0.0";

enum class Provenance { Paper, Trivial, Derived };
std::string provenance_name(Provenance p);

struct CheckResult {
    std::string id;           // "<group>.<name>", group in {rep, form, lattice,
                              // monodromy, elliptic}
    std::string description;
    std::string anchor;       // section/theorem + short quote, or "plumbing"
    std::string expected;
    std::string computed;
    Provenance provenance = Provenance::Derived;
    bool pass = false;
    long long elapsed_ms = 0;  // never serialized: reports must be byte-identical
};

struct VerificationReport {
    std::string version = kReportVersion;
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
};

struct Options {
    // Empty = run everything; otherwise one of the group prefixes.
    std::string only;
    // Test fixture: corrupts one entry of tau6 before the monodromy checks.
    bool corrupt_tau6 = false;
};

// Runs every registered check in fixed order (rep, form, lattice, monodromy,
// elliptic). Individual failures are recorded, never thrown.
VerificationReport run_all(const Options& options = {});

std::vector<std::string> known_groups();

std::string to_json(const VerificationReport& report);
// One line per check plus a summary; quiet prints the summary only.
std::string to_text(const VerificationReport& report, bool quiet);

}  // namespace lgv::verify
