#pragma once

#include "notch/model.hpp"

#include <string>
#include <vector>

namespace notch {

struct RootScanOptions {
    double p_min = 1.0 + 1e-6;
    double p_max = 4.0;
    double grid_step = 1e-3;
    double refine_tol = 1e-12;
    double cluster_merge = 1e-9;
};

struct Root {
    double p = 0.0;
    double residual = 0.0;          // |bracket(p)|
    bool even_multiplicity = false;  // tangent root, no sign change
};

struct ScanWarning {
    std::string kind;  // NoSignChange
    double p = 0.0;
    double value = 0.0;
    std::string message;
};

struct RootScan {
    std::vector<Root> roots;
    std::vector<ScanWarning> warnings;

    std::vector<double> values() const;
};

struct ExponentSummary {
    double p = 0.0;
    double exp_monopolar = 0.0;
    double exp_dipolar = 0.0;
    double exp_total = 0.0;
};

enum class RootOrigin { SpecialP1, BracketRoot };

struct AdmissibleEigenvalue {
    double p = 0.0;
    RootOrigin origin = RootOrigin::BracketRoot;
    bool even_multiplicity = false;
    bool admissible = true;
    std::string reason;
};

void validate_options(const RootScanOptions& o);

RootScan find_roots(const WedgeCase& wc, double nu, const RootScanOptions& opts = {});

// p = 1 first, then every bracket root; roots below 1 are marked inadmissible.
std::vector<AdmissibleEigenvalue> admissible_eigenvalues(const WedgeCase& wc, double nu,
                                                         const RootScanOptions& opts = {});

ExponentSummary exponents_for(double p);
ExponentSummary smallest_exponents(const WedgeCase& wc, double nu, const RootScanOptions& opts = {});

}  // namespace notch
