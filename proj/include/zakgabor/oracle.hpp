#pragma once

#include "zakgabor/transforms.hpp"

namespace zakgabor {
namespace oracle {

// Brute-force references for the acceptance suites.  These deliberately share
// no matrix-assembly code with the primary paths.

/// Extreme squared singular values of the |G| x N weighted synthesis matrix.
std::pair<double, double> brute_frame_bounds(
    const std::vector<std::pair<Window, double>>& atoms);

/// Literal Zak sum with no fundamental-domain reduction.
std::complex<double> naive_zak(const Window& f, const Subgroup& h, const GroupElement& x,
                               const GroupElement& xi);

struct GramClassification {
    bool complete = false;
    bool minimal = false;
    bool onb = false;
};

/// Rank/Gram classification of a weighted atom family.
GramClassification gram_classify(const std::vector<std::pair<Window, double>>& atoms,
                                 double tol = 1e-10);

/// The full weighted Gabor atom list of a system over Lambda x Gamma;
/// assembled here from scratch so oracle checks stay independent.
std::vector<std::pair<Window, double>> gabor_atoms(const Window& g, const Subgroup& lambda,
                                                   const Subgroup& gamma, double w_lambda,
                                                   double w_gamma);

}  // namespace oracle
}  // namespace zakgabor
