#include "zakgabor/zak_analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zakgabor {

std::vector<AdmissibleH> admissible_h(const FiniteAbelianGroup& g, const Subgroup& lambda,
                                      const Subgroup& gamma) {
    return admissible_h(g, lambda, gamma, all_subgroups(g));
}

std::vector<AdmissibleH> admissible_h(const FiniteAbelianGroup& g, const Subgroup& lambda,
                                      const Subgroup& gamma,
                                      const std::vector<Subgroup>& subgroups) {
    const Subgroup gammaperp = annihilator(g.dual(), gamma);  // inside G
    std::vector<AdmissibleH> out;
    if (!is_subgroup_of(gammaperp, lambda)) return out;
    for (const auto& h : subgroups) {
        if (!is_subgroup_of(gammaperp, h) || !is_subgroup_of(h, lambda)) continue;
        AdmissibleH adm{h, annihilator(g, h), {}, {}};
        adm.lambdaTransversal = relative_transversal(g, lambda.element_indices(), adm.h);
        adm.gammaTransversal =
            relative_transversal(g.dual(), gamma.element_indices(), adm.hperp);
        out.push_back(std::move(adm));
    }
    return out;
}

bool divisor_condition(std::int64_t l, std::int64_t n, std::int64_t m, std::int64_t r) {
    if (l < 1 || n < 1 || m < 1 || r < 1 || l % n != 0 || l % m != 0 || l % r != 0)
        throw std::invalid_argument("divisor_condition: arguments must be divisors of L");
    return r % n == 0 && (l / r) % m == 0;
}

std::vector<Window> gij_family(const GaborSystem& sys, const AdmissibleH& adm) {
    if (!(adm.h.parent() == sys.group))
        throw std::invalid_argument("gij_family: group mismatch");
    std::vector<Window> out;
    out.reserve(adm.lambdaTransversal.size() * adm.gammaTransversal.size());
    for (auto li : adm.lambdaTransversal) {
        const GroupElement le = sys.group.element_at(li);
        for (auto gi : adm.gammaTransversal) {
            const GroupElement ge = sys.group.dual().element_at(gi);
            out.push_back(translate(modulate(sys.g, ge), le));  // T_{lambda_i} E_{gamma_j} g
        }
    }
    return out;
}

EigenvalueFunction eigenvalue_function(const GaborSystem& sys, const AdmissibleH& adm) {
    if (sys.convention != Convention::zak_chain || !sys.chainH || !(*sys.chainH == adm.h))
        throw std::invalid_argument(
            "eigenvalue_function requires the zak-chain convention on the same H");
    EigenvalueFunction out;
    bool first = true;
    for (const auto& gij : gij_family(sys, adm)) {
        const ZakArray z = zak(gij, adm.h);
        if (first) {
            out.values = Eigen::MatrixXd::Zero(z.data.rows(), z.data.cols());
            out.row_transversal = z.row_transversal;
            out.col_transversal = z.col_transversal;
            first = false;
        }
        out.values += z.data.cwiseAbs2();
    }
    if (first) throw std::logic_error("empty g_ij family");
    out.min = out.values.minCoeff();
    out.max = out.values.maxCoeff();
    return out;
}

FrameReport zak_frame_bounds(const GaborSystem& sys, const AdmissibleH& adm, double tol) {
    const EigenvalueFunction m = eigenvalue_function(sys, adm);
    FrameReport r;
    r.lowerBound = std::max(0.0, m.min);
    r.upperBound = m.max;
    r.isFrame = r.lowerBound > tol;
    r.isTight = r.isFrame && (r.upperBound - r.lowerBound) <= tol * r.upperBound;
    r.isParseval = r.isFrame && std::abs(r.lowerBound - 1.0) <= tol &&
                   std::abs(r.upperBound - 1.0) <= tol;
    r.isONB = r.isParseval && std::abs(window_norm(sys.g) - 1.0) <= tol;
    // A frame spans; it is also independent exactly at critical atom density.
    r.isComplete = r.isFrame;
    r.isMinimal = r.isFrame && sys.atom_count() == sys.group.order();
    r.conditionNumber = r.isFrame ? r.upperBound / r.lowerBound
                                  : std::numeric_limits<double>::infinity();
    return r;
}

CompletenessResult zak_complete_minimal(const Window& g, const Subgroup& h, double rank_tol) {
    const ZakArray z = zak(g, h);
    const double zmin = z.data.cwiseAbs().minCoeff();
    const double zmax = z.data.cwiseAbs().maxCoeff();
    CompletenessResult out;
    out.complete = zmax > 0.0 && zmin > rank_tol * zmax;
    // Finite case: |H| * |Hperp| = |G| = dim, so minimality coincides with
    // completeness, both meaning Z_H g vanishes nowhere.
    out.minimal = out.complete;
    if (out.complete) {
        ZakArray zdual = z;
        zdual.data = z.data.conjugate().cwiseInverse();  // Z_H h = 1 / conj(Z_H g)
        out.dualWindow = inverse_zak(zdual);
    }
    return out;
}

QuotientIsoResult quotient_iso_check(const FiniteAbelianGroup& g, const Subgroup& lambda,
                                     const Subgroup& h) {
    if (!is_subgroup_of(h, lambda))
        throw std::invalid_argument("quotient_iso_check: H must be contained in Lambda");
    QuotientIsoResult out;
    out.factorsLeft = quotient_invariant_factors(g, lambda, h);
    const Subgroup hperp = annihilator(g, h);
    const Subgroup lambdaperp = annihilator(g, lambda);
    out.factorsRight = quotient_invariant_factors(g.dual(), hperp, lambdaperp);
    out.isomorphic = out.factorsLeft == out.factorsRight;
    return out;
}

}  // namespace zakgabor
