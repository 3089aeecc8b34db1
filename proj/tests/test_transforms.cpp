#include <doctest.h>

#include "helpers.hpp"
#include "zakgabor/oracle.hpp"

using namespace zakgabor;
using test_util::cyclic;
using test_util::el;

TEST_CASE("fourier basics and inversion") {
    FiniteAbelianGroup z4({4});
    const Window fhat = fourier(delta_window(z4));
    for (std::int64_t i = 0; i < 4; ++i) CHECK(test_util::cdist(fhat.values[i], 1.0) < 1e-14);

    FiniteAbelianGroup z2({2});
    const Window two = fourier(constant_window(z2));
    CHECK(test_util::cdist(two.values[0], 2.0) < 1e-14);
    CHECK(test_util::cdist(two.values[1], 0.0) < 1e-14);

    CHECK(test_util::cdist(inverse_fourier(constant_window(z4)).values[0], 1.0) < 1e-14);
    CHECK(test_util::cdist(inverse_fourier(constant_window(z4)).values[2], 0.0) < 1e-14);
    const Window back = inverse_fourier(delta_window(z4));
    for (std::int64_t i = 0; i < 4; ++i) CHECK(test_util::cdist(back.values[i], 0.25) < 1e-14);

    FiniteAbelianGroup g({2, 4});
    Xoshiro256StarStar rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        const Window f = random_window(g, rng);
        const Window rt = inverse_fourier(fourier(f));
        CHECK((rt.values - f.values).norm() <= 1e-12 * f.values.norm());
        // Plancherel with counting measure: ||fhat||^2 = |G| ||f||^2
        CHECK(fourier(f).values.squaredNorm() ==
              doctest::Approx(g.order() * f.values.squaredNorm()));
    }
}

TEST_CASE("fourier intertwines translation and modulation") {
    FiniteAbelianGroup g({3, 4});
    Xoshiro256StarStar rng(9);
    const Window f = random_window(g, rng);
    const GroupElement lam = el({1, 3});
    const Window lhs = fourier(translate(f, lam));
    const Window rhs = modulate(fourier(f), g.negate(lam));
    CHECK((lhs.values - rhs.values).norm() < 1e-12);
    const Window lhs2 = fourier(modulate(f, lam));
    const Window rhs2 = translate(fourier(f), lam);
    CHECK((lhs2.values - rhs2.values).norm() < 1e-12);
}

TEST_CASE("zak transform on a fundamental domain") {
    FiniteAbelianGroup z4({4});
    const Subgroup h = cyclic(z4, 2);
    const ZakArray z = zak(delta_window(z4), h);
    CHECK(z.data.rows() == 2);
    CHECK(z.data.cols() == 2);
    CHECK(test_util::cdist(z.data(0, 0), 1.0) < 1e-14);
    CHECK(test_util::cdist(z.data(0, 1), 1.0) < 1e-14);
    CHECK(test_util::cdist(z.data(1, 0), 0.0) < 1e-14);
    CHECK(test_util::cdist(z.data(1, 1), 0.0) < 1e-14);
    CHECK(test_util::cdist(zak_eval(z, el({2}), el({1})), -1.0) < 1e-14);

    const ZakArray zg = zak(constant_window(z4), full_subgroup(z4));
    CHECK(zg.data.rows() == 1);
    CHECK(zg.data.cols() == 4);
    CHECK(test_util::cdist(zg.data(0, 0), 4.0) < 1e-13);
    for (int j = 1; j < 4; ++j) CHECK(std::abs(zg.data(0, j)) < 1e-13);

    Xoshiro256StarStar rng(17);
    const Window f = random_window(z4, rng);
    const ZakArray z0 = zak(f, trivial_subgroup(z4));
    CHECK(z0.data.cols() == 1);
    for (std::int64_t x = 0; x < 4; ++x)
        CHECK(test_util::cdist(z0.data(x, 0), f.values[x]) < 1e-14);
}

TEST_CASE("zak_eval agrees with the literal sum everywhere") {
    FiniteAbelianGroup g({2, 4});
    Xoshiro256StarStar rng(23);
    for (const auto& h : all_subgroups(g)) {
        const Window f = random_window(g, rng);
        const ZakArray z = zak(f, h);
        for (int rep = 0; rep < 150; ++rep) {
            const auto x = g.element_at(static_cast<std::int64_t>(rng.below(g.order())));
            const auto xi = g.element_at(static_cast<std::int64_t>(rng.below(g.order())));
            CHECK(test_util::cdist(zak_eval(z, x, xi), oracle::naive_zak(f, h, x, xi)) < 1e-12);
        }
    }
}

TEST_CASE("zak is unitary and invertible") {
    FiniteAbelianGroup z12({12});
    Xoshiro256StarStar rng(31);
    for (const auto& h : all_subgroups(z12)) {
        for (int rep = 0; rep < 20; ++rep) {
            const Window f = random_window(z12, rng);
            const ZakArray z = zak(f, h);
            const double energy =
                z.chain.wGmodH * z.chain.wGhatModHperp * z.data.cwiseAbs2().sum();
            CHECK(energy == doctest::Approx(f.values.squaredNorm()).epsilon(1e-10));
            const Window back = inverse_zak(z);
            CHECK((back.values - f.values).norm() <= 1e-12 * f.values.norm());
        }
    }
    FiniteAbelianGroup z4({4});
    const Window d0 = delta_window(z4);
    const Window rt = inverse_zak(zak(d0, cyclic(z4, 2)));
    CHECK((rt.values - d0.values).norm() < 1e-13);
}

TEST_CASE("fiberization") {
    FiniteAbelianGroup z4({4});
    const FiberMap fm = fiberize(delta_window(z4), cyclic(z4, 2));
    CHECK(fm.fibers.size() == 2);
    for (const auto& fib : fm.fibers) {
        CHECK(fib.size() == 2);
        CHECK(test_util::cdist(fib[0], 1.0) < 1e-14);
        CHECK(test_util::cdist(fib[1], 1.0) < 1e-14);
    }

    Xoshiro256StarStar rng(41);
    const Window f = random_window(z4, rng);
    const FiberMap whole = fiberize(f, full_subgroup(z4));
    CHECK(whole.fibers.size() == 4);
    for (const auto& fib : whole.fibers) CHECK(fib.size() == 1);

    FiniteAbelianGroup g({2, 4});
    for (const auto& h : all_subgroups(g)) {
        for (int rep = 0; rep < 10; ++rep) {
            const Window w = random_window(g, rng);
            const FiberMap m = fiberize(w, h);
            double total = 0.0;
            for (const auto& fib : m.fibers) total += fib.squaredNorm();
            CHECK(total / g.order() == doctest::Approx(w.values.squaredNorm()).epsilon(1e-10));
        }
    }
}

TEST_CASE("window JSON round trip and validation") {
    FiniteAbelianGroup g({2, 3});
    Xoshiro256StarStar rng(53);
    const Window f = random_window(g, rng);
    const Window back = window_from_json_text(window_to_json(f));
    CHECK(back.group == g);
    CHECK((back.values - f.values).norm() < 1e-13);

    CHECK_THROWS_AS(window_from_json_text("{\"group\": [4], \"values\": [[1, 0]]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(window_from_json_text("{\"group\": [2], \"values\": [[1], [0]]}"),
                    std::invalid_argument);
    CHECK_THROWS(window_from_json_text("not json"));
    CHECK_THROWS_AS(read_window_json("/nonexistent/window.json"), std::runtime_error);
}

TEST_CASE("make_window validation") {
    FiniteAbelianGroup g({3});
    CHECK_THROWS_AS(make_window(g, Eigen::VectorXcd::Zero(2)), std::invalid_argument);
    Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(3);
    bad[1] = std::complex<double>(std::nan(""), 0.0);
    CHECK_THROWS_AS(make_window(g, bad), std::invalid_argument);
}
