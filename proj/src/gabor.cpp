#include "zakgabor/gabor.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zakgabor {

GaborSystem make_gabor_system(Window g, Subgroup lambda, Subgroup gamma, Convention convention,
                              std::optional<Subgroup> chain_h) {
    const FiniteAbelianGroup grp = g.group;
    if (!(lambda.parent() == grp) || !(gamma.parent() == grp.dual()))
        throw std::invalid_argument("gabor system: subgroup group mismatch");
    if (g.values.size() != grp.order()) throw std::invalid_argument("gabor system: bad window");

    GaborSystem sys{grp, std::move(g), std::move(lambda), std::move(gamma), convention,
                    std::nullopt};
    sys.wLambda = 1.0;
    if (convention == Convention::plancherel) {
        if (chain_h) throw std::invalid_argument("plancherel convention takes no chain subgroup");
        sys.wGamma = 1.0 / static_cast<double>(sys.gamma.size());
    } else {
        if (!chain_h) throw std::invalid_argument("zak-chain convention requires a subgroup H");
        if (!is_subgroup_of(*chain_h, sys.lambda))
            throw std::invalid_argument("zak-chain convention requires H <= Lambda");
        const Subgroup hperp = annihilator(grp, *chain_h);
        if (!is_subgroup_of(hperp, sys.gamma))
            throw std::invalid_argument("zak-chain convention requires Hperp <= Gamma");
        sys.wGamma = static_cast<double>(chain_h->size()) / static_cast<double>(grp.order());
        sys.chainH = std::move(chain_h);
    }
    return sys;
}

Window gabor_atom(const GaborSystem& sys, const GroupElement& lambda, const GroupElement& gamma) {
    if (!sys.lambda.contains(lambda)) throw std::invalid_argument("lambda not in Lambda");
    if (!sys.gamma.contains(gamma)) throw std::invalid_argument("gamma not in Gamma");
    return modulate(translate(sys.g, lambda), gamma);
}

Eigen::MatrixXcd synthesis_matrix(const GaborSystem& sys) {
    const auto n = sys.group.order();
    Eigen::MatrixXcd t(n, sys.atom_count());
    const double w = std::sqrt(sys.wLambda * sys.wGamma);
    Eigen::Index col = 0;
    for (auto li : sys.lambda.element_indices()) {
        const GroupElement le = sys.group.element_at(li);
        for (auto gi : sys.gamma.element_indices()) {
            const GroupElement ge = sys.group.dual().element_at(gi);
            t.col(col++) = w * gabor_atom(sys, le, ge).values;
        }
    }
    return t;
}

Eigen::MatrixXcd frame_operator(const GaborSystem& sys) {
    const auto n = sys.group.order();
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    const double w = sys.wLambda * sys.wGamma;
    for (auto li : sys.lambda.element_indices()) {
        const GroupElement le = sys.group.element_at(li);
        for (auto gi : sys.gamma.element_indices()) {
            const Eigen::VectorXcd a = gabor_atom(sys, le, sys.group.dual().element_at(gi)).values;
            s.noalias() += w * a * a.adjoint();
        }
    }
    return s;
}

std::pair<double, double> frame_bounds(const GaborSystem& sys) {
    const Eigen::MatrixXcd s = frame_operator(sys);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("frame_bounds: eigensolver failed, ||S|| = " +
                                 std::to_string(s.norm()));
    const auto& ev = es.eigenvalues();
    double a = ev.minCoeff();
    if (a < 0.0) a = 0.0;  // clamp eigensolver noise
    return {a, ev.maxCoeff()};
}

FrameReport classify(const GaborSystem& sys, double tol) {
    FrameReport r;
    std::tie(r.lowerBound, r.upperBound) = frame_bounds(sys);
    r.isFrame = r.lowerBound > tol;
    r.isTight = r.isFrame && (r.upperBound - r.lowerBound) <= tol * r.upperBound;
    r.isParseval = r.isFrame && std::abs(r.lowerBound - 1.0) <= tol &&
                   std::abs(r.upperBound - 1.0) <= tol;
    r.conditionNumber = r.lowerBound > tol ? r.upperBound / r.lowerBound
                                           : std::numeric_limits<double>::infinity();

    const Eigen::MatrixXcd t = synthesis_matrix(sys);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > 1e-10 * smax && smax > 0.0) ++rank;
    r.isComplete = rank == sys.group.order();
    r.isMinimal = rank == t.cols();
    const Eigen::MatrixXcd gram = t.adjoint() * t;
    r.isONB = (gram - Eigen::MatrixXcd::Identity(t.cols(), t.cols())).norm() <=
              tol * std::max<double>(1.0, static_cast<double>(t.cols()));
    return r;
}

SufficientCondition sufficient_condition(const GaborSystem& sys, double tol) {
    if (sys.convention != Convention::plancherel)
        throw std::invalid_argument("sufficient_condition is pinned to the plancherel convention");
    const auto& g = sys.group;
    const Subgroup gammaperp = annihilator(g.dual(), sys.gamma);  // subgroup of G

    const double gmax = sys.g.values.cwiseAbs().maxCoeff();
    const double support_cut = tol * gmax;
    auto in_support = [&](std::int64_t x) { return std::abs(sys.g.values[x]) > support_cut; };

    SufficientCondition out;
    for (auto ai : gammaperp.element_indices()) {
        if (ai == 0) continue;
        for (std::int64_t x = 0; x < g.order(); ++x)
            if (in_support(x) && in_support(g.sub_indices(x, ai))) return out;  // overlap
    }
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::int64_t x = 0; x < g.order(); ++x) {
        double s = 0.0;
        for (auto li : sys.lambda.element_indices())
            s += std::norm(sys.g.values[g.sub_indices(x, li)]) * sys.wLambda;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    out.applies = lo > tol;
    out.lower = lo;
    out.upper = hi;
    return out;
}

TwoSides modulation_average_check(const GaborSystem& sys, const Window& f, const GroupElement& lambda) {
    if (sys.convention != Convention::plancherel)
        throw std::invalid_argument("modulation_average_check is pinned to the plancherel convention");
    const auto& g = sys.group;
    const Window tg = translate(sys.g, lambda);

    TwoSides out;
    for (auto gi : sys.gamma.element_indices()) {
        const GroupElement ge = g.dual().element_at(gi);
        const Window atom = modulate(tg, ge);
        out.lhs += sys.wGamma * std::norm(f.values.dot(atom.values));
    }
    const Subgroup gammaperp = annihilator(g.dual(), sys.gamma);
    for (std::int64_t x = 0; x < g.order(); ++x)
        for (auto ai : gammaperp.element_indices()) {
            const std::int64_t xa = g.sub_indices(x, ai);
            out.rhs += f.values[x] * std::conj(f.values[xa]) * std::conj(tg.values[x]) *
                       tg.values[xa];
        }
    return out;
}

}  // namespace zakgabor
