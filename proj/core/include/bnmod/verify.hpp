#pragma once

#include <string>
#include <vector>

#include "bnmod/rational.hpp"

namespace bnmod::verify {

struct GridBounds {
    long max_genus = 3;
    long max_rank = 3;
    long max_dim = 8;
};

struct SuiteResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0; }
    void check(bool cond, const std::string& what);
};

// Two-route Euler characteristic over the parameter grid.
SuiteResult run_euler(const GridBounds& b);
// Betti table invariants (duality, chi sum, nonnegativity, point values).
SuiteResult run_betti(const GridBounds& b);
// Hodge table invariants (symmetry, duality, row sums = Betti).
SuiteResult run_hodge(const GridBounds& b);
// Index bundle pipeline vs closed form, twist routes, homotopy invariance.
SuiteResult run_km(const GridBounds& b);
// N=1 Betti tables vs the symmetric-product generating function.
SuiteResult run_macdonald(const GridBounds& b);
// Pushforward vs Leray-Hirsch reduction, K-invariance, idempotence.
SuiteResult run_pushforward(const GridBounds& b);
// Fulton-Lazarsfeld bound and spectral-curve bookkeeping.
SuiteResult run_spectral(const GridBounds& b);

std::vector<SuiteResult> run_suite(const std::string& name,
                                   const GridBounds& b);

}  // namespace bnmod::verify
