#pragma once

#include "zakgabor/gabor.hpp"

namespace zakgabor {

/// An intermediate subgroup H with Gammaperp <= H <= Lambda (equivalently
/// H <= Lambda and Hperp <= Gamma), plus deterministic transversals of
/// Lambda/H and Gamma/Hperp.
struct AdmissibleH {
    Subgroup h;
    Subgroup hperp;
    std::vector<std::int64_t> lambdaTransversal;  // reps lambda_i, indices in G
    std::vector<std::int64_t> gammaTransversal;   // reps gamma_j, indices in Ghat
};

/// All admissible H for the pair (Lambda, Gamma); empty iff Gammaperp is not
/// contained in Lambda.
std::vector<AdmissibleH> admissible_h(const FiniteAbelianGroup& g, const Subgroup& lambda,
                                      const Subgroup& gamma);

/// Same, with a precomputed all_subgroups(g) list (the enumeration dominates
/// the cost when this is called in a tight loop).
std::vector<AdmissibleH> admissible_h(const FiniteAbelianGroup& g, const Subgroup& lambda,
                                      const Subgroup& gamma,
                                      const std::vector<Subgroup>& subgroups);

/// Cyclic-group certificate: with Lambda = <N>, Gamma = <M>, H = <R> inside
/// Z_L, H is admissible iff N | R | L and M | L/R.
bool divisor_condition(std::int64_t l, std::int64_t n, std::int64_t m, std::int64_t r);

/// The windows g_ij = T_{lambda_i} E_{gamma_j} g, row-major over (i, j).
std::vector<Window> gij_family(const GaborSystem& sys, const AdmissibleH& adm);

/// m(x, xi) = sum_{ij} |Z_H g_ij(x, xi)|^2 on the fundamental domain; the
/// multiplier through which Z_H diagonalizes the frame operator.
struct EigenvalueFunction {
    Eigen::MatrixXd values;  // (|G|/|H|) x |H|
    double min = 0.0;
    double max = 0.0;
    std::vector<std::int64_t> row_transversal;
    std::vector<std::int64_t> col_transversal;
};

EigenvalueFunction eigenvalue_function(const GaborSystem& sys, const AdmissibleH& adm);

/// Frame bounds and flags read off the eigenvalue function (zak-chain
/// convention): A = min m, B = max m.
FrameReport zak_frame_bounds(const GaborSystem& sys, const AdmissibleH& adm, double tol = 1e-10);

/// Completeness/minimality of {E_gamma T_lambda g} over H x Hperp via
/// non-vanishing of Z_H g; when non-vanishing, the biorthogonal dual window
/// h with Z_H h = 1 / conj(Z_H g) is constructed.
struct CompletenessResult {
    bool complete = false;
    bool minimal = false;
    std::optional<Window> dualWindow;
};

CompletenessResult zak_complete_minimal(const Window& g, const Subgroup& h,
                                        double rank_tol = 1e-12);

/// Invariant factors of Lambda/H and Hperp/Lambdaperp, computed independently;
/// they must agree on every valid input.
struct QuotientIsoResult {
    std::vector<std::int64_t> factorsLeft;
    std::vector<std::int64_t> factorsRight;
    bool isomorphic = false;
};

QuotientIsoResult quotient_iso_check(const FiniteAbelianGroup& g, const Subgroup& lambda,
                                     const Subgroup& h);

}  // namespace zakgabor
