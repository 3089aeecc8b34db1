#include "zakgabor/fiber_analysis.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zakgabor {

namespace {

// Extreme squared singular values of a fiber matrix, as frame bounds for
// l^2(rows): A = 0 whenever the columns cannot span.
std::pair<double, double> extreme_squared_singular_values(const Eigen::MatrixXcd& m) {
    if (m.cols() == 0) return {0.0, 0.0};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    const double b = sv.size() > 0 ? sv[0] * sv[0] : 0.0;
    double a = 0.0;
    if (m.cols() >= m.rows() && sv.size() >= m.rows()) {
        const double smin = sv[m.rows() - 1];
        a = smin * smin;
    }
    return {a, b};
}

void finalize_globals(FiberFrameReport& rep) {
    rep.globalA = std::numeric_limits<double>::infinity();
    rep.globalB = 0.0;
    for (auto& [a, b] : rep.perOmega) {
        rep.globalA = std::min(rep.globalA, a);
        rep.globalB = std::max(rep.globalB, b);
    }
    if (rep.perOmega.empty()) rep.globalA = 0.0;
}

}  // namespace

FiberFrameReport ti_fiber_bounds(const FiniteAbelianGroup& g, const Subgroup& h,
                                 const std::vector<std::pair<Window, double>>& generators) {
    if (generators.empty()) throw std::invalid_argument("ti_fiber_bounds: empty generator list");
    for (const auto& [w, weight] : generators) {
        if (!(w.group == g)) throw std::invalid_argument("ti_fiber_bounds: generator group mismatch");
        if (weight <= 0.0) throw std::invalid_argument("ti_fiber_bounds: weights must be positive");
    }
    const Subgroup hperp = annihilator(g, h);
    const auto d = g.dual();
    FiberFrameReport rep;
    rep.omega = transversal(d, hperp);

    std::vector<Window> hats;
    hats.reserve(generators.size());
    for (const auto& [w, weight] : generators) hats.push_back(fourier(w));

    const double section_weight = static_cast<double>(h.size()) / static_cast<double>(g.order());
    for (auto w : rep.omega) {
        Eigen::MatrixXcd m(hperp.size(), static_cast<Eigen::Index>(generators.size()));
        for (std::size_t p = 0; p < generators.size(); ++p) {
            const double scale = std::sqrt(generators[p].second * section_weight);
            Eigen::Index row = 0;
            for (auto alpha : hperp.element_indices())
                m(row++, static_cast<Eigen::Index>(p)) =
                    scale * hats[p].values[d.add_indices(w, alpha)];
        }
        rep.perOmega.push_back(extreme_squared_singular_values(m));
    }
    finalize_globals(rep);
    return rep;
}

FiberFrameReport gabor_fiber_bounds(const GaborSystem& sys, const AdmissibleH& adm,
                                    FiberReading reading) {
    const auto& g = sys.group;
    const auto d = g.dual();
    if (!(adm.h.parent() == g) || !is_subgroup_of(adm.h, sys.lambda) ||
        !is_subgroup_of(adm.hperp, sys.gamma))
        throw std::invalid_argument("gabor_fiber_bounds: H is not admissible for this system");

    const Subgroup lambdaperp = annihilator(g, sys.lambda);  // inside Ghat, <= Hperp
    const std::vector<std::int64_t> u_reps =
        relative_transversal(d, sys.gamma.element_indices(), lambdaperp);

    // g_ku = T_k E_u g, then Fourier.
    std::vector<Window> ghat_ku;
    for (auto ki : adm.lambdaTransversal) {
        const GroupElement ke = g.element_at(ki);
        for (auto ui : u_reps) {
            const GroupElement ue = d.element_at(ui);
            ghat_ku.push_back(fourier(translate(modulate(sys.g, ue), ke)));
        }
    }

    // xi-side sample points for Z_{Hperp} ghat(omega, .): a transversal of
    // G/H represents the dual of Hperp.
    const std::vector<std::int64_t> xi_reps = transversal(g, adm.h);
    const auto fiber_dim = static_cast<Eigen::Index>(adm.hperp.size());

    FiberFrameReport rep;
    rep.omega = transversal(d, adm.hperp);
    const double section_weight =
        static_cast<double>(adm.h.size()) / static_cast<double>(g.order());
    const double unitary_scale = 1.0 / std::sqrt(static_cast<double>(adm.hperp.size()));

    for (auto w : rep.omega) {
        // Normalized Zak fibers Phi_ku(xi) = Z_{Hperp} ghat_ku(omega, xi) / sqrt(|Hperp|).
        std::vector<Eigen::VectorXcd> phi;
        phi.reserve(ghat_ku.size());
        for (const auto& gh : ghat_ku) {
            Eigen::VectorXcd v(fiber_dim);
            for (Eigen::Index r = 0; r < fiber_dim; ++r) {
                const GroupElement xr = g.element_at(xi_reps[static_cast<std::size_t>(r)]);
                std::complex<double> acc = 0.0;
                for (auto alpha : adm.hperp.element_indices())
                    acc += gh.values[d.add_indices(w, alpha)] *
                           character_value(g, xr, d.element_at(alpha));
                v[r] = unitary_scale * acc;
            }
            phi.push_back(std::move(v));
        }

        Eigen::MatrixXcd m;
        if (reading == FiberReading::printed) {
            const double scale =
                std::sqrt(sys.wGamma * static_cast<double>(lambdaperp.size()) * section_weight);
            m.resize(fiber_dim, static_cast<Eigen::Index>(phi.size()));
            for (std::size_t c = 0; c < phi.size(); ++c)
                m.col(static_cast<Eigen::Index>(c)) = scale * phi[c];
        } else {
            // Modulated reading: one column chi_mu .* Phi_ku per mu in
            // Lambdaperp, weight wGamma each.
            const double scale = std::sqrt(sys.wGamma * section_weight);
            m.resize(fiber_dim,
                     static_cast<Eigen::Index>(phi.size() * lambdaperp.element_indices().size()));
            Eigen::Index c = 0;
            for (auto mu : lambdaperp.element_indices()) {
                Eigen::VectorXcd chi(fiber_dim);
                for (Eigen::Index r = 0; r < fiber_dim; ++r)
                    chi[r] = character_value(g, g.element_at(xi_reps[static_cast<std::size_t>(r)]),
                                             d.element_at(mu));
                for (const auto& p : phi) m.col(c++) = scale * chi.cwiseProduct(p);
            }
        }
        rep.perOmega.push_back(extreme_squared_singular_values(m));
    }
    finalize_globals(rep);
    return rep;
}

ThreeRouteResult three_route_check(const GaborSystem& sys) {
    if (sys.convention != Convention::plancherel)
        throw std::invalid_argument("three_route_check is pinned to the plancherel convention");
    const auto& g = sys.group;
    const auto d = g.dual();
    const Subgroup gammaperp = annihilator(d, sys.gamma);
    if (!is_subgroup_of(gammaperp, sys.lambda))
        throw std::invalid_argument("three_route_check requires Gammaperp <= Lambda");

    ThreeRouteResult out;
    out.boundsDirect = frame_bounds(sys);

    const Subgroup lambdaperp = annihilator(g, sys.lambda);
    const Window ghat = fourier(sys.g);
    const std::vector<std::int64_t> alpha_reps = transversal(d, lambdaperp);
    const double section_weight =
        static_cast<double>(sys.lambda.size()) / static_cast<double>(g.order());

    // Route (ii): per alpha, fibers {ghat(alpha + gamma + y)}_{y in Lambdaperp}
    // over gamma in Gamma.
    {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        const double scale = std::sqrt(sys.wGamma * section_weight);
        for (auto a : alpha_reps) {
            Eigen::MatrixXcd m(lambdaperp.size(),
                               static_cast<Eigen::Index>(sys.gamma.size()));
            Eigen::Index c = 0;
            for (auto gi : sys.gamma.element_indices()) {
                const std::int64_t base = d.add_indices(a, gi);
                Eigen::Index r = 0;
                for (auto y : lambdaperp.element_indices())
                    m(r++, c) = scale * ghat.values[d.add_indices(base, y)];
                ++c;
            }
            auto [pa, pb] = extreme_squared_singular_values(m);
            lo = std::min(lo, pa);
            hi = std::max(hi, pb);
        }
        out.boundsFiber = {lo, hi};
    }

    // Route (iii): weighted Zak average over a section K of Lambdaperp in
    // Gamma; the weight per k is fixed by the canonical chain.
    {
        const ZakArray z = zak(ghat, lambdaperp);
        const std::vector<std::int64_t> k_reps =
            relative_transversal(d, sys.gamma.element_indices(), lambdaperp);
        const double wk = sys.wGamma * section_weight;
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (auto a : alpha_reps) {
            for (auto xr : z.col_transversal) {
                const GroupElement x = g.element_at(xr);
                double s = 0.0;
                for (auto k : k_reps)
                    s += wk * std::norm(zak_eval(z, d.element_at(d.add_indices(a, k)), x));
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
        }
        out.boundsZak = {lo, hi};
    }
    return out;
}

}  // namespace zakgabor
