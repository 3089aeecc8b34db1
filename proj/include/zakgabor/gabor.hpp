#pragma once

#include <optional>
#include <utility>

#include "zakgabor/transforms.hpp"

namespace zakgabor {

/**
 * Measure convention for the (Lambda x Gamma) index set.
 *  - plancherel:  wLambda = 1, wGamma = 1/|Gamma|.  the modulation-average identity
 *    and the support-disjointness sufficient condition hold with no extra
 *    constants.
 *  - zak_chain(H): wLambda = 1, wGamma = |H|/|G| = 1/|Hperp|.  Requires
 *    H <= Lambda and Hperp <= Gamma; the Zak diagonalization eigenvalue
 *    identity holds with no extra constants.
 * Bounds convert by the factor [Gamma : Hperp].
 */
enum class Convention { plancherel, zak_chain };

struct GaborSystem {
    FiniteAbelianGroup group;
    Window g;
    Subgroup lambda;  // subgroup of G
    Subgroup gamma;   // subgroup of Ghat
    Convention convention;
    std::optional<Subgroup> chainH;  // set iff convention == zak_chain
    double wLambda = 1.0;
    double wGamma = 1.0;

    std::int64_t atom_count() const { return lambda.size() * gamma.size(); }
};

GaborSystem make_gabor_system(Window g, Subgroup lambda, Subgroup gamma, Convention convention,
                              std::optional<Subgroup> chain_h = std::nullopt);

/// (E_gamma T_lambda g)(x) = chi_gamma(x) g(x - lambda); lambda and gamma must
/// lie in the system's subgroups.
Window gabor_atom(const GaborSystem& sys, const GroupElement& lambda, const GroupElement& gamma);

/// S = sum_{lambda, gamma} wLambda wGamma (atom)(atom)^*; Hermitian PSD.
Eigen::MatrixXcd frame_operator(const GaborSystem& sys);

/// |G| x (atom count) matrix with columns sqrt(wLambda wGamma) * atom,
/// (lambda, gamma) in row-major order over the canonical subgroup element
/// orders.
Eigen::MatrixXcd synthesis_matrix(const GaborSystem& sys);

/// Optimal bounds: extreme eigenvalues of the frame operator (A clamped to 0).
std::pair<double, double> frame_bounds(const GaborSystem& sys);

struct FrameReport {
    double lowerBound = 0.0;
    double upperBound = 0.0;
    bool isFrame = false;
    bool isTight = false;
    bool isParseval = false;
    bool isComplete = false;
    bool isMinimal = false;
    bool isONB = false;
    double conditionNumber = 0.0;  // B/A, inf when A ~ 0
};

FrameReport classify(const GaborSystem& sys, double tol = 1e-10);

/// Support-disjointness sufficient condition (plancherel convention): when it
/// applies, the optimal frame bounds lie in [lower, upper].
struct SufficientCondition {
    bool applies = false;
    double lower = 0.0;
    double upper = 0.0;
};

SufficientCondition sufficient_condition(const GaborSystem& sys, double tol = 1e-10);

/// Both sides of the Gamma-average identity
///   sum_{gamma in Gamma} wGamma |<f, E_gamma T_lambda g>|^2
///   = sum_x sum_{alpha in Gammaperp} f(x) conj(f(x-alpha))
///                                    conj(T_lambda g(x)) T_lambda g(x-alpha),
/// computed independently (plancherel convention).
struct TwoSides {
    double lhs = 0.0;
    std::complex<double> rhs = 0.0;
};

TwoSides modulation_average_check(const GaborSystem& sys, const Window& f, const GroupElement& lambda);

}  // namespace zakgabor
