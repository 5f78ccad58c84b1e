#pragma once

#include <optional>
#include <string>

#include "spectra/constructions.hpp"

namespace spectra {

// Every bound expression of the theorems and their corollaries. The corollary
// ids are fixed-parameter presets of the theorem formulas.
enum class BoundId { T1, T2, C1, C2, C3, C4, C5pi, C55, C5final, T5, T6 };

const char* bound_name(BoundId id);

// Exact integer threshold for the bound; all arithmetic is integral and
// divisibility implied by the biregular structure is asserted, never rounded.
long long bound_value(BoundId id, const Graph& g,
                      const Bipartition* b = nullptr);

struct TheoremReport {
    enum class Status { Passed, BoundViolated, Inapplicable, Error };

    TheoremId theorem = TheoremId::T1;
    Status status = Status::Error;
    long long bound = 0;
    int achieved = 0; // guaranteed-set vertices satisfying the predicate
    int f_total = 0;  // predicate count over all vertices
    bool budget_exhausted = false;
    std::string reason;
    std::optional<ConstructionResult> witness;

    bool passed() const { return status == Status::Passed; }
};

struct VerifyOptions {
    long long chi_budget = kDefaultChromaticBudget;
    PersistentOnYOptions persistent_y;
};

// Runs the construction matching the theorem, re-validates coloring and
// predicate, and compares the achieved count against the exact bound.
// Construction errors become structured failed reports, not exceptions.
TheoremReport verify_theorem(TheoremId id, const Graph& g,
                             const VerifyOptions& options = {});

struct DivisibilityReport {
    int k = 0;
    bool x_divisible = false; // k | |X|
    bool y_divisible = false; // k-1 | |Y|
    bool v_divisible = false; // 2k-1 | |V|

    bool ok() const { return x_divisible && y_divisible && v_divisible; }
};

// The divisibility facts forced by (k-1,k)-biregularity.
DivisibilityReport verify_remark2(const Graph& g, const Bipartition& b);

struct SharpnessReport {
    int n = 0;
    long long bound = 0; // 1 + n
    int eta = 0;         // eta_pi(K_{n+1,n}), exact or lower bound
    bool exact = false;
    bool sharp = false; // exact and eta == bound
};

// eta_pi(K_{n+1,n}) equals the 1+|Y| bound, showing it is sharp.
SharpnessReport verify_remark1(int n, long long budget = kDefaultEtaBudget);

} // namespace spectra
