#pragma once

#include <Eigen/Dense>
#include <complex>

#include "zakgabor/group.hpp"

namespace zakgabor {

/// Complex-valued function on a group, stored in canonical element order.
struct Window {
    FiniteAbelianGroup group;
    Eigen::VectorXcd values;
};

Window make_window(const FiniteAbelianGroup& g, Eigen::VectorXcd values);
Window delta_window(const FiniteAbelianGroup& g);
Window constant_window(const FiniteAbelianGroup& g, std::complex<double> c = 1.0);

double window_norm(const Window& f);

/// (T_a f)(x) = f(x - a)
Window translate(const Window& f, const GroupElement& a);
/// (E_gamma f)(x) = chi_gamma(x) f(x)
Window modulate(const Window& f, const GroupElement& gamma);

/// fhat(xi) = sum_x f(x) conj(chi_xi(x)); direct O(|G|^2) summation.
Window fourier(const Window& f);
/// f(x) = (1/|G|) sum_xi F(xi) chi_xi(x)
Window inverse_fourier(const Window& big_f);

/**
 * Zak transform values on a fundamental domain of G/H x Ghat/Hperp.
 * data(i, j) = Z_H f(t_i, s_j) = sum_{h in H} f(t_i + h) chi_{s_j}(h) * wH,
 * with the kernel oriented as xi(lambda) (no conjugate).  Arbitrary
 * evaluation goes through quasi-periodicity (zak_eval).
 */
struct ZakArray {
    FiniteAbelianGroup group;
    Subgroup subgroupH;
    std::vector<std::int64_t> row_transversal;  // reps of G/H, indices in G
    std::vector<std::int64_t> col_transversal;  // reps of Ghat/Hperp, indices in dual
    Eigen::MatrixXcd data;                      // (|G|/|H|) x |H|
    MeasureChain chain;

    // Reduction tables: for x in G, x = row_rep + h_part with h_part in H;
    // for xi in Ghat, xi = col_rep + (Hperp part).
    std::vector<std::int64_t> row_of;     // |G|
    std::vector<std::int64_t> h_part_of;  // |G|, element index of the H part
    std::vector<std::int64_t> col_of;     // |Ghat|
};

ZakArray zak(const Window& f, const Subgroup& h);

/// Quasi-periodic evaluation at an arbitrary (x, xi) pair.
std::complex<double> zak_eval(const ZakArray& z, const GroupElement& x, const GroupElement& xi);

/// Inverse of the unitary Z_H; exact round trip.
Window inverse_zak(const ZakArray& z);

/// Fiberization T f(omega) = { fhat(omega + alpha) }_{alpha in Hperp}.
struct FiberMap {
    FiniteAbelianGroup group;
    Subgroup subgroupH;
    Subgroup hperp;
    std::vector<std::int64_t> omega;           // transversal of Hperp in Ghat
    std::vector<Eigen::VectorXcd> fibers;      // one per omega, length |Hperp|
};

FiberMap fiberize(const Window& f, const Subgroup& h);

/// JSON window file format: {"group": [12], "values": [[re, im], ...]}.
Window read_window_json(const std::string& path);
void write_window_json(const Window& f, const std::string& path);
std::string window_to_json(const Window& f);
Window window_from_json_text(const std::string& text);

}  // namespace zakgabor
