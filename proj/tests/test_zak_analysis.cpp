#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "zakgabor/oracle.hpp"
#include "zakgabor/zak_analysis.hpp"

using namespace zakgabor;
using test_util::cyclic;
using test_util::el;

TEST_CASE("admissible intermediate subgroups") {
    FiniteAbelianGroup z12({12});
    const auto adm = admissible_h(z12, cyclic(z12, 2), cyclic(z12, 3));
    REQUIRE(adm.size() == 2);
    CHECK(adm[0].h == cyclic(z12, 4));
    CHECK(adm[1].h == cyclic(z12, 2));
    // transversal shapes |Lambda|/|H| and |Gamma| |H| / |G|
    CHECK(adm[0].lambdaTransversal.size() == 2);
    CHECK(adm[0].gammaTransversal.size() == 1);
    CHECK(adm[1].lambdaTransversal.size() == 1);
    CHECK(adm[1].gammaTransversal.size() == 2);

    CHECK(admissible_h(z12, full_subgroup(z12), full_subgroup(z12.dual())).size() ==
          all_subgroups(z12).size());
    CHECK(admissible_h(z12, cyclic(z12, 3), cyclic(z12, 3)).empty());
}

TEST_CASE("divisor certificate") {
    CHECK(divisor_condition(12, 2, 3, 4));
    CHECK(!divisor_condition(12, 2, 3, 6));
    CHECK(divisor_condition(12, 1, 1, 1));
    CHECK_THROWS_AS(divisor_condition(12, 5, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(divisor_condition(12, 2, 3, 0), std::invalid_argument);
}

TEST_CASE("g_ij family") {
    FiniteAbelianGroup z4({4});
    const Subgroup h = cyclic(z4, 2);
    const Subgroup hperp = annihilator(z4, h);
    {
        const GaborSystem sys =
            make_gabor_system(delta_window(z4), h, hperp, Convention::zak_chain, h);
        const auto adm = admissible_h(z4, h, hperp);
        REQUIRE(adm.size() == 1);
        const auto fam = gij_family(sys, adm[0]);
        REQUIRE(fam.size() == 1);
        CHECK((fam[0].values - delta_window(z4).values).norm() < 1e-14);
    }
    {
        const GaborSystem sys = make_gabor_system(delta_window(z4), full_subgroup(z4),
                                                  full_subgroup(z4.dual()),
                                                  Convention::zak_chain, h);
        auto adm_list = admissible_h(z4, full_subgroup(z4), full_subgroup(z4.dual()));
        const auto it = std::find_if(adm_list.begin(), adm_list.end(),
                                     [&](const AdmissibleH& a) { return a.h == h; });
        REQUIRE(it != adm_list.end());
        const auto fam = gij_family(sys, *it);
        REQUIRE(fam.size() == 4);
        // first two windows are deltas at 0, last two are unimodular multiples
        // of the delta at 1
        for (int k : {0, 1}) CHECK(test_util::cdist(fam[k].values[0], 1.0) < 1e-14);
        for (int k : {2, 3}) {
            CHECK(std::abs(std::abs(fam[k].values[1]) - 1.0) < 1e-14);
            CHECK(std::abs(fam[k].values[0]) < 1e-14);
        }
    }
    const Window zero{z4, Eigen::VectorXcd::Zero(4)};
    const GaborSystem zsys = make_gabor_system(zero, h, hperp, Convention::zak_chain, h);
    const auto fam = gij_family(zsys, admissible_h(z4, h, hperp)[0]);
    CHECK(fam[0].values.norm() == 0.0);
}

TEST_CASE("eigenvalue function of the diagonalized frame operator") {
    FiniteAbelianGroup z4({4});
    const Subgroup h = cyclic(z4, 2);
    const auto adm_list = admissible_h(z4, full_subgroup(z4), full_subgroup(z4.dual()));
    const auto it = std::find_if(adm_list.begin(), adm_list.end(),
                                 [&](const AdmissibleH& a) { return a.h == h; });
    REQUIRE(it != adm_list.end());
    const GaborSystem sys = make_gabor_system(delta_window(z4), full_subgroup(z4),
                                              full_subgroup(z4.dual()), Convention::zak_chain, h);
    const EigenvalueFunction m = eigenvalue_function(sys, *it);
    CHECK(m.min == doctest::Approx(2.0));
    CHECK(m.max == doctest::Approx(2.0));

    FiniteAbelianGroup z2({2});
    const GaborSystem sys2 = make_gabor_system(delta_window(z2), full_subgroup(z2),
                                               full_subgroup(z2.dual()), Convention::zak_chain,
                                               full_subgroup(z2));
    const auto adm2 = admissible_h(z2, full_subgroup(z2), full_subgroup(z2.dual()));
    const auto it2 = std::find_if(adm2.begin(), adm2.end(), [&](const AdmissibleH& a) {
        return a.h == full_subgroup(z2);
    });
    const EigenvalueFunction m2 = eigenvalue_function(sys2, *it2);
    CHECK(m2.min == doctest::Approx(2.0));
    CHECK(m2.max == doctest::Approx(2.0));

    // convention guard
    const GaborSystem wrong = make_gabor_system(delta_window(z4), full_subgroup(z4),
                                                full_subgroup(z4.dual()), Convention::plancherel);
    CHECK_THROWS_AS(eigenvalue_function(wrong, *it), std::invalid_argument);
}

TEST_CASE("eigenvalue function is transversal independent") {
    // |Z|^2 is genuinely quasi-periodic: summing over any representative of a
    // coset pair gives the same m value.
    FiniteAbelianGroup z12({12});
    Xoshiro256StarStar rng(37);
    const Subgroup lambda = cyclic(z12, 2);
    const Subgroup gamma = full_subgroup(z12.dual());
    for (const auto& adm : admissible_h(z12, lambda, gamma)) {
        const Window g = random_window(z12, rng);
        const GaborSystem sys = make_gabor_system(g, lambda, gamma, Convention::zak_chain, adm.h);
        const EigenvalueFunction m = eigenvalue_function(sys, adm);
        const auto fam = gij_family(sys, adm);
        std::vector<ZakArray> zs;
        for (const auto& w : fam) zs.push_back(zak(w, adm.h));
        for (Eigen::Index r = 0; r < m.values.rows(); ++r)
            for (Eigen::Index c = 0; c < m.values.cols(); ++c) {
                const auto x0 = m.row_transversal[static_cast<std::size_t>(r)];
                const auto s0 = m.col_transversal[static_cast<std::size_t>(c)];
                // shift the evaluation point by a random (H, Hperp) offset
                const auto hs = adm.h.element_indices();
                const auto ps = adm.hperp.element_indices();
                const auto x = z12.add_indices(x0, hs[rng.below(hs.size())]);
                const auto s = z12.dual().add_indices(s0, ps[rng.below(ps.size())]);
                double val = 0.0;
                for (const auto& z : zs)
                    val += std::norm(zak_eval(z, z12.element_at(x), z12.element_at(s)));
                CHECK(val == doctest::Approx(m.values(r, c)).epsilon(1e-12));
            }
    }
}

TEST_CASE("zak frame bounds classify the system") {
    FiniteAbelianGroup z4({4});
    const Subgroup h = cyclic(z4, 2);
    const auto adm_list = admissible_h(z4, full_subgroup(z4), full_subgroup(z4.dual()));
    const auto it = std::find_if(adm_list.begin(), adm_list.end(),
                                 [&](const AdmissibleH& a) { return a.h == h; });

    const GaborSystem sys = make_gabor_system(delta_window(z4), full_subgroup(z4),
                                              full_subgroup(z4.dual()), Convention::zak_chain, h);
    const FrameReport r = zak_frame_bounds(sys, *it);
    CHECK(r.lowerBound == doctest::Approx(2.0));
    CHECK(r.upperBound == doctest::Approx(2.0));
    CHECK(r.isTight);
    CHECK(!r.isParseval);

    Window scaled = delta_window(z4);
    scaled.values /= std::sqrt(2.0);
    const GaborSystem psys = make_gabor_system(scaled, full_subgroup(z4),
                                               full_subgroup(z4.dual()), Convention::zak_chain, h);
    const FrameReport rp = zak_frame_bounds(psys, *it);
    CHECK(rp.isParseval);
    CHECK(!rp.isONB);

    const Window zero{z4, Eigen::VectorXcd::Zero(4)};
    const GaborSystem zsys = make_gabor_system(zero, full_subgroup(z4), full_subgroup(z4.dual()),
                                               Convention::zak_chain, h);
    CHECK(!zak_frame_bounds(zsys, *it).isFrame);
}

TEST_CASE("completeness, minimality, and the biorthogonal dual") {
    FiniteAbelianGroup z2({2});
    const Subgroup h0 = trivial_subgroup(z2);
    const CompletenessResult good = zak_complete_minimal(constant_window(z2), h0);
    CHECK(good.complete);
    CHECK(good.minimal);
    REQUIRE(good.dualWindow.has_value());

    const CompletenessResult bad = zak_complete_minimal(delta_window(z2), h0);
    CHECK(!bad.complete);
    CHECK(!bad.dualWindow.has_value());

    const Window zero{z2, Eigen::VectorXcd::Zero(2)};
    const CompletenessResult z = zak_complete_minimal(zero, h0);
    CHECK(!z.complete);
    CHECK(!z.minimal);

    // the dual biorthogonalizes {E_gamma T_lambda g} over H x Hperp with
    // pairing constant |G| / |H|
    FiniteAbelianGroup z12({12});
    Xoshiro256StarStar rng(43);
    for (const auto& h : all_subgroups(z12)) {
        const Window g = random_window(z12, rng);
        const auto res = zak_complete_minimal(g, h);
        if (!res.dualWindow) continue;
        const Subgroup hperp = annihilator(z12, h);
        const auto atoms = oracle::gabor_atoms(g, h, hperp, 1.0, 1.0);
        const auto duals = oracle::gabor_atoms(*res.dualWindow, h, hperp, 1.0, 1.0);
        const double c = 12.0 / static_cast<double>(h.size());
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = 0; j < duals.size(); ++j) {
                const std::complex<double> ip = duals[j].first.values.dot(atoms[i].first.values);
                const std::complex<double> want = (i == j) ? c : 0.0;
                CHECK(std::abs(ip - want) < 1e-9);
            }
    }
}

TEST_CASE("completeness is monotone in the lattice pair") {
    FiniteAbelianGroup z12({12});
    Xoshiro256StarStar rng(47);
    for (const auto& h : all_subgroups(z12)) {
        const Window g = random_window(z12, rng);
        if (!zak_complete_minimal(g, h).complete) continue;
        // enlarge (H, Hperp) to (Lambda, Gamma): completeness must survive
        const Subgroup lambda = full_subgroup(z12);
        const Subgroup gamma = full_subgroup(z12.dual());
        const GaborSystem sys = make_gabor_system(g, lambda, gamma, Convention::plancherel);
        CHECK(classify(sys).isComplete);
    }
}

TEST_CASE("quotient duality") {
    FiniteAbelianGroup z12({12});
    const auto r = quotient_iso_check(z12, cyclic(z12, 2), cyclic(z12, 4));
    CHECK(r.factorsLeft == std::vector<std::int64_t>{2});
    CHECK(r.factorsRight == std::vector<std::int64_t>{2});
    CHECK(r.isomorphic);

    const auto triv = quotient_iso_check(z12, cyclic(z12, 3), cyclic(z12, 3));
    CHECK(triv.factorsLeft.empty());
    CHECK(triv.isomorphic);

    FiniteAbelianGroup v({2, 2});
    const auto k4 = quotient_iso_check(v, full_subgroup(v), trivial_subgroup(v));
    CHECK(k4.factorsLeft == std::vector<std::int64_t>{2, 2});
    CHECK(k4.isomorphic);

    CHECK_THROWS_AS(quotient_iso_check(z12, cyclic(z12, 4), cyclic(z12, 2)),
                    std::invalid_argument);
}
