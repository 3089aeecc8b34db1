#pragma once

#include "zakgabor/zak_analysis.hpp"

namespace zakgabor {

/// Per-fiber optimal frame bounds over the section Omega of Hperp in Ghat.
struct FiberFrameReport {
    std::vector<std::int64_t> omega;                  // indices in Ghat
    std::vector<std::pair<double, double>> perOmega;  // (A(w), B(w))
    double globalA = 0.0;
    double globalB = 0.0;
};

/**
 * Fiber-side bounds of the translation-invariant system
 * {T_h g_p}_{h in H, p} with w_H = 1 and per-generator weights w_p.
 * For each omega the |Hperp| x |P| fiber matrix has columns
 * sqrt(w_p * |H|/|G|) * {ghat_p(omega + alpha)}_alpha; the |H|/|G| factor is
 * the Weil-dual weight of the section Omega under the canonical chain, and
 * makes the per-omega extreme squared singular values reproduce the direct
 * frame bounds of the translated system.
 */
FiberFrameReport ti_fiber_bounds(const FiniteAbelianGroup& g, const Subgroup& h,
                                 const std::vector<std::pair<Window, double>>& generators);

/**
 * Zak-fiber criterion for a Gabor system over an admissible H, with
 * g_ku = T_k E_u g over transversals of Lambda/H and Gamma/Lambdaperp.
 *
 * Two readings are computed, converting the criterion's ambiguity into a
 * measurement:
 *  - printed:   fibers indexed by (k, u) only, weight wGamma * |Lambdaperp|
 *               per fiber (total mass preserved);
 *  - modulated: fibers indexed by (mu, k, u) over mu in Lambdaperp with
 *               weight wGamma each, which is what the translation-invariant
 *               fiber criterion yields before the index reduction.
 * Fiber vectors are the unitarily normalized Zak transforms
 * Z_{Hperp} ghat_ku(omega, .) / sqrt(|Hperp|), so bounds coincide with the
 * raw-fiber route.
 */
enum class FiberReading { printed, modulated };

FiberFrameReport gabor_fiber_bounds(const GaborSystem& sys, const AdmissibleH& adm,
                                    FiberReading reading);

/// Three routes to the frame bounds of a Gabor system with Gammaperp <=
/// Lambda under the plancherel convention: direct spectrum, per-alpha fiber
/// singular values, and the Zak-average scalar function.
struct ThreeRouteResult {
    std::pair<double, double> boundsDirect;
    std::pair<double, double> boundsFiber;  // route (ii)
    std::pair<double, double> boundsZak;    // route (iii)
};

ThreeRouteResult three_route_check(const GaborSystem& sys);

}  // namespace zakgabor
