#include "zakgabor/oracle.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace zakgabor {
namespace oracle {

std::pair<double, double> brute_frame_bounds(
    const std::vector<std::pair<Window, double>>& atoms) {
    if (atoms.empty()) throw std::invalid_argument("brute_frame_bounds: empty atom list");
    const auto n = atoms.front().first.group.order();
    Eigen::MatrixXcd t(n, static_cast<Eigen::Index>(atoms.size()));
    for (std::size_t c = 0; c < atoms.size(); ++c)
        t.col(static_cast<Eigen::Index>(c)) = std::sqrt(atoms[c].second) * atoms[c].first.values;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
    const auto& sv = svd.singularValues();
    const double b = sv.size() > 0 ? sv[0] * sv[0] : 0.0;
    double a = 0.0;
    if (t.cols() >= t.rows() && sv.size() >= t.rows()) a = sv[t.rows() - 1] * sv[t.rows() - 1];
    return {a, b};
}

std::complex<double> naive_zak(const Window& f, const Subgroup& h, const GroupElement& x,
                               const GroupElement& xi) {
    const auto& g = f.group;
    std::complex<double> acc = 0.0;
    for (const auto& he : h.elements())
        acc += f.values[g.index_of(g.add(x, he))] * character_value(g, he, xi);
    return acc;
}

GramClassification gram_classify(const std::vector<std::pair<Window, double>>& atoms,
                                 double tol) {
    if (atoms.empty()) throw std::invalid_argument("gram_classify: empty atom list");
    const auto n = atoms.front().first.group.order();
    Eigen::MatrixXcd t(n, static_cast<Eigen::Index>(atoms.size()));
    for (std::size_t c = 0; c < atoms.size(); ++c)
        t.col(static_cast<Eigen::Index>(c)) = std::sqrt(atoms[c].second) * atoms[c].first.values;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (smax > 0.0 && sv[i] > 1e-10 * smax) ++rank;

    GramClassification out;
    out.complete = rank == n;
    out.minimal = rank == t.cols();
    const Eigen::MatrixXcd gram = t.adjoint() * t;
    out.onb = (gram - Eigen::MatrixXcd::Identity(t.cols(), t.cols())).norm() <=
              tol * std::max<double>(1.0, static_cast<double>(t.cols()));
    return out;
}

std::vector<std::pair<Window, double>> gabor_atoms(const Window& g, const Subgroup& lambda,
                                                   const Subgroup& gamma, double w_lambda,
                                                   double w_gamma) {
    const auto& grp = g.group;
    const auto d = grp.dual();
    std::vector<std::pair<Window, double>> out;
    out.reserve(static_cast<std::size_t>(lambda.size() * gamma.size()));
    for (const auto& le : lambda.elements()) {
        for (auto gi : gamma.element_indices()) {
            const GroupElement ge = d.element_at(gi);
            Eigen::VectorXcd v(grp.order());
            for (std::int64_t x = 0; x < grp.order(); ++x) {
                const GroupElement xe = grp.element_at(x);
                v[x] = character_value(grp, xe, ge) * g.values[grp.index_of(grp.sub(xe, le))];
            }
            out.push_back({Window{grp, std::move(v)}, w_lambda * w_gamma});
        }
    }
    return out;
}

}  // namespace oracle
}  // namespace zakgabor
