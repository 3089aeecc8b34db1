#include <doctest.h>

#include "helpers.hpp"
#include "zakgabor/gabor.hpp"

using namespace zakgabor;
using test_util::cyclic;
using test_util::el;

namespace {

GaborSystem full_system(const Window& g, Convention conv,
                        std::optional<Subgroup> h = std::nullopt) {
    return make_gabor_system(g, full_subgroup(g.group), full_subgroup(g.group.dual()), conv,
                             std::move(h));
}

}  // namespace

TEST_CASE("gabor atoms") {
    FiniteAbelianGroup z4({4});
    const GaborSystem sys = full_system(delta_window(z4), Convention::plancherel);
    const Window a = gabor_atom(sys, el({2}), el({0}));
    CHECK(test_util::cdist(a.values[2], 1.0) < 1e-14);
    CHECK(a.values.cwiseAbs().sum() == doctest::Approx(1.0));
    const Window b = gabor_atom(sys, el({0}), el({1}));
    CHECK(test_util::cdist(b.values[0], 1.0) < 1e-14);

    FiniteAbelianGroup z2({2});
    const GaborSystem sys2 = full_system(constant_window(z2), Convention::plancherel);
    const Window c = gabor_atom(sys2, el({0}), el({1}));
    CHECK(test_util::cdist(c.values[0], 1.0) < 1e-14);
    CHECK(test_util::cdist(c.values[1], -1.0) < 1e-14);

    const GaborSystem small = make_gabor_system(delta_window(z4), cyclic(z4, 2),
                                                full_subgroup(z4.dual()), Convention::plancherel);
    CHECK_THROWS_AS(gabor_atom(small, el({1}), el({0})), std::invalid_argument);
}

TEST_CASE("system construction validates the chain subgroup") {
    FiniteAbelianGroup z4({4});
    CHECK_THROWS_AS(full_system(delta_window(z4), Convention::zak_chain), std::invalid_argument);
    CHECK_THROWS_AS(full_system(delta_window(z4), Convention::plancherel, cyclic(z4, 2)),
                    std::invalid_argument);
    // H must sit inside Lambda and Hperp inside Gamma
    CHECK_THROWS_AS(make_gabor_system(delta_window(z4), cyclic(z4, 2), full_subgroup(z4.dual()),
                                      Convention::zak_chain, full_subgroup(z4)),
                    std::invalid_argument);
    const GaborSystem ok = full_system(delta_window(z4), Convention::zak_chain, cyclic(z4, 2));
    CHECK(ok.wGamma == doctest::Approx(0.5));
    CHECK(full_system(delta_window(z4), Convention::plancherel).wGamma == doctest::Approx(0.25));
}

TEST_CASE("frame operator and bounds") {
    FiniteAbelianGroup z2({2});
    const Eigen::MatrixXcd s2 =
        frame_operator(full_system(delta_window(z2), Convention::zak_chain, full_subgroup(z2)));
    CHECK((s2 - 2.0 * Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-13);

    FiniteAbelianGroup z4({4});
    const GaborSystem sys = full_system(delta_window(z4), Convention::zak_chain, cyclic(z4, 2));
    const Eigen::MatrixXcd s4 = frame_operator(sys);
    CHECK((s4 - 2.0 * Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-13);
    CHECK((s4 - s4.adjoint()).norm() <= 1e-12 * s4.norm());
    auto [a, b] = frame_bounds(sys);
    CHECK(a == doctest::Approx(2.0));
    CHECK(b == doctest::Approx(2.0));

    auto [pa, pb] = frame_bounds(full_system(delta_window(z4), Convention::plancherel));
    CHECK(pa == doctest::Approx(1.0));
    CHECK(pb == doctest::Approx(1.0));

    const GaborSystem single = make_gabor_system(delta_window(z2), trivial_subgroup(z2),
                                                 trivial_subgroup(z2.dual()),
                                                 Convention::plancherel);
    auto [sa, sb] = frame_bounds(single);
    CHECK(sa == doctest::Approx(0.0));
    CHECK(sb == doctest::Approx(1.0));

    const Window zero{z4, Eigen::VectorXcd::Zero(4)};
    CHECK(frame_operator(full_system(zero, Convention::plancherel)).norm() == 0.0);
}

TEST_CASE("classification flags") {
    FiniteAbelianGroup z4({4});
    const FrameReport r = classify(full_system(delta_window(z4), Convention::plancherel));
    CHECK(r.isComplete);
    CHECK(r.isFrame);
    CHECK(r.isTight);
    CHECK(!r.isMinimal);  // 16 atoms in dimension 4

    // hand-weighted system: {(1,1), (1,-1)}/sqrt(2) is an ONB of C^2
    FiniteAbelianGroup z2({2});
    Window g2 = constant_window(z2);
    g2.values /= std::sqrt(2.0);
    GaborSystem onb = make_gabor_system(g2, trivial_subgroup(z2), full_subgroup(z2.dual()),
                                        Convention::plancherel);
    onb.wGamma = 1.0;
    const FrameReport ro = classify(onb);
    CHECK(ro.isONB);
    CHECK(ro.isParseval);
    CHECK(ro.isMinimal);

    const Window zero{z4, Eigen::VectorXcd::Zero(4)};
    const FrameReport rz = classify(full_system(zero, Convention::plancherel));
    CHECK(!rz.isFrame);
    CHECK(!rz.isTight);
    CHECK(!rz.isParseval);
    CHECK(!rz.isComplete);
    CHECK(!rz.isMinimal);
    CHECK(!rz.isONB);
}

TEST_CASE("support-disjointness sufficient condition") {
    FiniteAbelianGroup z4({4});
    const GaborSystem sys = make_gabor_system(delta_window(z4), full_subgroup(z4),
                                              cyclic(z4, 2), Convention::plancherel);
    const SufficientCondition sc = sufficient_condition(sys);
    CHECK(sc.applies);
    CHECK(sc.lower == doctest::Approx(1.0));
    CHECK(sc.upper == doctest::Approx(1.0));
    auto [a, b] = frame_bounds(sys);
    CHECK(a == doctest::Approx(1.0));
    CHECK(b == doctest::Approx(1.0));

    // Gamma = dual: disjointness is vacuous, applies iff the lattice sum has a
    // positive floor
    Xoshiro256StarStar rng(7);
    Window w = random_window(z4, rng);
    const auto sc2 = sufficient_condition(full_system(w, Convention::plancherel));
    CHECK(sc2.applies);
    CHECK(sc2.lower > 0.0);

    // full support with a nontrivial annihilator: overlap everywhere
    const auto sc3 = sufficient_condition(
        make_gabor_system(constant_window(z4), full_subgroup(z4), cyclic(z4, 2),
                          Convention::plancherel));
    CHECK(!sc3.applies);

    CHECK_THROWS_AS(
        sufficient_condition(full_system(delta_window(z4), Convention::zak_chain, cyclic(z4, 2))),
        std::invalid_argument);
}

TEST_CASE("modulation average identity") {
    FiniteAbelianGroup z12({12});
    Xoshiro256StarStar rng(13);
    const GaborSystem sys = make_gabor_system(random_window(z12, rng), full_subgroup(z12),
                                              cyclic(z12, 3), Convention::plancherel);
    const Window f = random_window(z12, rng);
    const TwoSides sides = modulation_average_check(sys, f, el({0}));
    CHECK(std::abs(sides.lhs - sides.rhs) <= 1e-10 * std::max(1.0, sides.lhs));
    CHECK(std::abs(sides.rhs.imag()) < 1e-10);

    const Window zero{z12, Eigen::VectorXcd::Zero(12)};
    const TwoSides z = modulation_average_check(sys, zero, el({5}));
    CHECK(z.lhs == doctest::Approx(0.0));
    CHECK(std::abs(z.rhs) < 1e-14);

    const GaborSystem fullg = full_system(random_window(z12, rng), Convention::plancherel);
    const TwoSides c = modulation_average_check(fullg, f, el({4}));
    CHECK(std::abs(c.lhs - c.rhs) <= 1e-10 * std::max(1.0, c.lhs));
}

TEST_CASE("bounds invariant under time-frequency shifting the window") {
    FiniteAbelianGroup z12({12});
    Xoshiro256StarStar rng(19);
    const Window g = random_window(z12, rng);
    const GaborSystem sys = make_gabor_system(g, cyclic(z12, 2), cyclic(z12, 3),
                                              Convention::plancherel);
    const Window shifted = modulate(translate(g, el({4})), el({6}));
    const GaborSystem sys2 = make_gabor_system(shifted, cyclic(z12, 2), cyclic(z12, 3),
                                               Convention::plancherel);
    auto [a1, b1] = frame_bounds(sys);
    auto [a2, b2] = frame_bounds(sys2);
    CHECK(a1 == doctest::Approx(a2).epsilon(1e-10));
    CHECK(b1 == doctest::Approx(b2).epsilon(1e-10));
}

TEST_CASE("convention scaling matches the subgroup index") {
    FiniteAbelianGroup z12({12});
    Xoshiro256StarStar rng(29);
    const Window g = random_window(z12, rng);
    const Subgroup lambda = cyclic(z12, 2);
    const Subgroup gamma = cyclic(z12, 3);
    const Subgroup h = cyclic(z12, 2);  // gammaperp = <4> <= h <= lambda, [Gamma:Hperp] = 2
    const GaborSystem zc = make_gabor_system(g, lambda, gamma, Convention::zak_chain, h);
    const GaborSystem pl = make_gabor_system(g, lambda, gamma, Convention::plancherel);
    const double factor = static_cast<double>(gamma.size()) /
                          static_cast<double>(annihilator(z12, h).size());
    auto [za, zb] = frame_bounds(zc);
    auto [pa, pb] = frame_bounds(pl);
    CHECK(za == doctest::Approx(factor * pa).epsilon(1e-12));
    CHECK(zb == doctest::Approx(factor * pb).epsilon(1e-12));
}
