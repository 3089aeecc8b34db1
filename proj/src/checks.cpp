#include "zakgabor/checks.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "zakgabor/fiber_analysis.hpp"
#include "zakgabor/gabor.hpp"
#include "zakgabor/oracle.hpp"
#include "zakgabor/rng.hpp"
#include "zakgabor/zak_analysis.hpp"

namespace zakgabor {

namespace {

std::string describe_subgroup(const Subgroup& s) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < s.element_indices().size(); ++i)
        os << (i ? "," : "") << s.element_indices()[i];
    os << "]";
    return os.str();
}

std::string describe_group(const FiniteAbelianGroup& g) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < g.factors().size(); ++i)
        os << (i ? "," : "") << g.factors()[i];
    os << "]";
    return os.str();
}

// Collects the running deviation and, on the first failure, a reproducible
// counterexample blob.
struct Tracker {
    double tol;
    CheckResult res;

    explicit Tracker(std::string name, double tolerance) : tol(tolerance) {
        res.name = std::move(name);
        res.passed = true;
    }

    void record(double dev, const std::string& context) {
        res.max_dev = std::max(res.max_dev, dev);
        ++res.instances;
        if (dev > tol && res.passed) {
            res.passed = false;
            res.counterexample = context;
        }
    }

    void record_flag(bool ok, const std::string& context) {
        ++res.instances;
        if (!ok && res.passed) {
            res.passed = false;
            res.counterexample = context;
        }
    }
};

std::string instance_json(const FiniteAbelianGroup& g,
                          const std::vector<std::pair<std::string, std::string>>& fields) {
    std::ostringstream os;
    os << "{\"group\": " << describe_group(g);
    for (const auto& [k, v] : fields) os << ", \"" << k << "\": " << v;
    os << "}";
    return os.str();
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::vector<FiniteAbelianGroup> filter_groups(
    const std::vector<std::vector<std::int64_t>>& factor_lists, std::int64_t max_order) {
    std::vector<FiniteAbelianGroup> out;
    for (const auto& f : factor_lists) {
        FiniteAbelianGroup g(f);
        if (g.order() <= max_order) out.push_back(std::move(g));
    }
    return out;
}

double rel_dev(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

CheckResult check_zak_unitarity(const CheckConfig& cfg) {
    Tracker t("zak-unitarity", cfg.tol);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 1);
    for (const auto& g : filter_groups({{4}, {6}, {8}, {12}, {2, 4}, {3, 3}, {48}},
                                       cfg.max_order)) {
        for (const auto& h : all_subgroups(g)) {
            for (int rep = 0; rep < 50; ++rep) {
                const Window f = random_window(g, rng);
                const ZakArray z = zak(f, h);
                const double energy =
                    z.chain.wGmodH * z.chain.wGhatModHperp * z.data.cwiseAbs2().sum();
                const double target = f.values.squaredNorm();
                t.record(std::abs(energy - target) / target,
                         instance_json(g, {{"subgroup", describe_subgroup(h)},
                                           {"rep", std::to_string(rep)},
                                           {"check", quoted("unitarity")}}));
            }
        }
    }
    return t.res;
}

CheckResult check_quasi_periodicity(const CheckConfig& cfg) {
    Tracker t("quasi-periodicity", 1e-12);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 2);
    const auto groups = filter_groups(
        {{4}, {6}, {8}, {12}, {16}, {2, 4}, {2, 2}, {3, 3}, {2, 8}, {2, 2, 2}},
        std::min<std::int64_t>(16, cfg.max_order));
    for (const auto& g : groups) {
        const auto d = g.dual();
        for (const auto& h : all_subgroups(g)) {
            const Subgroup hperp = annihilator(g, h);
            const Window f = random_window(g, rng);
            const ZakArray z = zak(f, h);
            const double scale = std::max(1.0, z.data.cwiseAbs().maxCoeff());
            auto ctx = [&](const char* law) {
                return instance_json(g, {{"subgroup", describe_subgroup(h)},
                                         {"check", quoted(law)}});
            };

            // Shift laws, exhaustive over H and Hperp.
            for (std::int64_t xi = 0; xi < d.order(); ++xi) {
                const GroupElement xie = d.element_at(xi);
                for (std::int64_t x = 0; x < g.order(); ++x) {
                    const GroupElement xe = g.element_at(x);
                    const std::complex<double> base = zak_eval(z, xe, xie);
                    for (auto ai : h.element_indices()) {
                        const GroupElement ae = g.element_at(ai);
                        const std::complex<double> lhs = zak_eval(z, g.add(xe, ae), xie);
                        const std::complex<double> rhs =
                            std::conj(character_value(g, ae, xie)) * base;
                        t.record(std::abs(lhs - rhs) / scale, ctx("shift-in-x"));
                    }
                    for (auto gi : hperp.element_indices()) {
                        const std::complex<double> lhs =
                            zak_eval(z, xe, d.add(xie, d.element_at(gi)));
                        t.record(std::abs(lhs - base) / scale, ctx("shift-in-xi"));
                    }
                }
            }

            // Diagonalization over Hperp x H.
            for (auto gi : hperp.element_indices()) {
                const GroupElement ge = d.element_at(gi);
                for (auto li : h.element_indices()) {
                    const GroupElement le = g.element_at(li);
                    const ZakArray zl = zak(modulate(translate(f, le), ge), h);
                    for (Eigen::Index r = 0; r < z.data.rows(); ++r)
                        for (Eigen::Index c = 0; c < z.data.cols(); ++c) {
                            const GroupElement xe = g.element_at(
                                z.row_transversal[static_cast<std::size_t>(r)]);
                            const GroupElement we = d.element_at(
                                z.col_transversal[static_cast<std::size_t>(c)]);
                            const std::complex<double> e_factor =
                                character_value(g, xe, ge) * character_value(g, le, we);
                            t.record(std::abs(zl.data(r, c) - e_factor * z.data(r, c)) / scale,
                                     ctx("diagonalization"));
                        }
                }
            }

            // The time-frequency shift law with arbitrary modulation: exhaustive
            // over lambda in H (the change of variable in its proof lives in H)
            // and all gamma in the dual.
            for (auto li : h.element_indices()) {
                const GroupElement le = g.element_at(li);
                for (std::int64_t gi = 0; gi < d.order(); ++gi) {
                    const GroupElement ge = d.element_at(gi);
                    const ZakArray zl = zak(modulate(translate(f, le), ge), h);
                    const std::complex<double> gamma_of_lambda = character_value(g, le, ge);
                    for (Eigen::Index r = 0; r < z.data.rows(); ++r)
                        for (Eigen::Index c = 0; c < z.data.cols(); ++c) {
                            const GroupElement xe = g.element_at(
                                z.row_transversal[static_cast<std::size_t>(r)]);
                            const GroupElement we = d.element_at(
                                z.col_transversal[static_cast<std::size_t>(c)]);
                            const std::complex<double> e_factor =
                                character_value(g, xe, ge) * character_value(g, le, we);
                            const std::complex<double> rhs = gamma_of_lambda * e_factor *
                                                             zak_eval(z, xe, d.add(ge, we));
                            t.record(std::abs(zl.data(r, c) - rhs) / scale, ctx("shift-law"));
                        }
                }
            }
        }
    }
    return t.res;
}

namespace {

// Every admissible (Lambda, Gamma, H) triple of the given group.
struct AdmissibleTriple {
    Subgroup lambda;
    Subgroup gamma;
    AdmissibleH adm;
};

std::vector<AdmissibleTriple> all_admissible_triples(const FiniteAbelianGroup& g) {
    std::vector<AdmissibleTriple> out;
    const auto subs = all_subgroups(g);
    for (const auto& lambda : subs)
        for (const auto& gamma : subs)  // dual carries the same factor list
            for (auto& adm : admissible_h(g, lambda, gamma, subs))
                out.push_back({lambda, gamma, std::move(adm)});
    return out;
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + s.rows());
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

CheckResult check_spectral_identity(const CheckConfig& cfg) {
    Tracker t("spectral-identity", 1e-9);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 3);
    for (const auto& g : filter_groups({{8}, {12}, {2, 4}}, cfg.max_order)) {
        for (const auto& triple : all_admissible_triples(g)) {
            for (int rep = 0; rep < 20; ++rep) {
                const Window w = random_window(g, rng);
                const GaborSystem sys = make_gabor_system(w, triple.lambda, triple.gamma,
                                                          Convention::zak_chain, triple.adm.h);
                const auto ev = sorted_eigenvalues(frame_operator(sys));
                const EigenvalueFunction m = eigenvalue_function(sys, triple.adm);
                std::vector<double> mv(m.values.data(), m.values.data() + m.values.size());
                std::sort(mv.begin(), mv.end());
                double dev = 0.0;
                for (std::size_t i = 0; i < ev.size(); ++i)
                    dev = std::max(dev, std::abs(ev[i] - mv[i]));
                t.record(dev, instance_json(g, {{"lambda", describe_subgroup(triple.lambda)},
                                                {"gamma", describe_subgroup(triple.gamma)},
                                                {"h", describe_subgroup(triple.adm.h)},
                                                {"rep", std::to_string(rep)}}));
            }
        }
    }
    return t.res;
}

CheckResult check_bounds_consistency(const CheckConfig& cfg) {
    Tracker t("zak-bounds-consistency", 1e-9);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 4);
    for (const auto& g : filter_groups({{8}, {12}, {2, 4}}, cfg.max_order)) {
        for (const auto& triple : all_admissible_triples(g)) {
            for (int rep = 0; rep < 5; ++rep) {
                const Window w = random_window(g, rng);
                const GaborSystem sys = make_gabor_system(w, triple.lambda, triple.gamma,
                                                          Convention::zak_chain, triple.adm.h);
                const FrameReport zr = zak_frame_bounds(sys, triple.adm, 1e-9);
                const auto [da, db] = frame_bounds(sys);
                const auto ctx =
                    instance_json(g, {{"lambda", describe_subgroup(triple.lambda)},
                                      {"gamma", describe_subgroup(triple.gamma)},
                                      {"h", describe_subgroup(triple.adm.h)},
                                      {"rep", std::to_string(rep)}});
                t.record(std::max(std::abs(zr.lowerBound - da), std::abs(zr.upperBound - db)),
                         ctx);
                const Eigen::MatrixXcd s = frame_operator(sys);
                const bool parseval_direct =
                    (s - Eigen::MatrixXcd::Identity(s.rows(), s.cols())).norm() <= 1e-9;
                t.record_flag(zr.isParseval == parseval_direct, ctx);
                if (zr.isONB)
                    t.record_flag(std::abs(window_norm(sys.g) - 1.0) <= 1e-10, ctx);
            }
        }
        // A constructed Parseval (non-ONB) instance per group: g = delta /
        // sqrt(|Hperp|) over the full lattice with H the first proper choice.
        const auto subs = all_subgroups(g);
        const Subgroup full = full_subgroup(g);
        for (const auto& h : subs) {
            Window w = delta_window(g);
            w.values /= std::sqrt(static_cast<double>(h.size()));
            const GaborSystem sys =
                make_gabor_system(w, full, full_subgroup(g.dual()), Convention::zak_chain, h);
            const auto adm_list = admissible_h(g, full, full_subgroup(g.dual()), subs);
            for (const auto& adm : adm_list) {
                if (!(adm.h == h)) continue;
                const FrameReport zr = zak_frame_bounds(sys, adm, 1e-9);
                t.record_flag(zr.isParseval,
                              instance_json(g, {{"h", describe_subgroup(h)},
                                                {"check", quoted("constructed-parseval")}}));
            }
        }
    }
    return t.res;
}

CheckResult check_divisor_condition(const CheckConfig& cfg) {
    Tracker t("divisor-admissibility", 0.5);  // boolean agreement, dev is 0/1
    const std::int64_t lmax = std::min<std::int64_t>(60, std::max<std::int64_t>(cfg.max_order, 2));
    for (std::int64_t l = 1; l <= lmax; ++l) {
        const FiniteAbelianGroup g({l});
        const auto subs = all_subgroups(g);
        std::vector<std::int64_t> divisors;
        std::vector<Subgroup> cyclic;  // <d> for each divisor d, built once
        for (std::int64_t d = 1; d <= l; ++d)
            if (l % d == 0) {
                divisors.push_back(d);
                cyclic.push_back(subgroup_from_generators(g, {GroupElement{{d % l}}}));
            }
        for (std::size_t ni = 0; ni < divisors.size(); ++ni) {
            const std::int64_t n = divisors[ni];
            const Subgroup& lambda = cyclic[ni];
            for (std::size_t mi = 0; mi < divisors.size(); ++mi) {
                const std::int64_t m = divisors[mi];
                const Subgroup& gamma = cyclic[mi];
                const auto adm = admissible_h(g, lambda, gamma, subs);
                for (std::size_t ri = 0; ri < divisors.size(); ++ri) {
                    const std::int64_t r = divisors[ri];
                    const Subgroup& h = cyclic[ri];
                    const bool in_list = std::any_of(adm.begin(), adm.end(),
                                                     [&](const AdmissibleH& a) { return a.h == h; });
                    const bool cond = divisor_condition(l, n, m, r);
                    t.record(in_list == cond ? 0.0 : 1.0,
                             instance_json(g, {{"N", std::to_string(n)},
                                               {"M", std::to_string(m)},
                                               {"R", std::to_string(r)}}));
                }
            }
        }
    }
    return t.res;
}

CheckResult check_quotient_duality(const CheckConfig& cfg) {
    Tracker t("quotient-duality", 0.5);
    for (const auto& g : filter_groups({{12}, {2, 4}, {3, 9}}, std::max<std::int64_t>(cfg.max_order, 27))) {
        const auto subs = all_subgroups(g);
        for (const auto& lambda : subs)
            for (const auto& h : subs) {
                if (!is_subgroup_of(h, lambda)) continue;
                const auto iso = quotient_iso_check(g, lambda, h);
                t.record(iso.isomorphic ? 0.0 : 1.0,
                         instance_json(g, {{"lambda", describe_subgroup(lambda)},
                                           {"h", describe_subgroup(h)}}));
            }
    }
    return t.res;
}

CheckResult check_complete_minimal(const CheckConfig& cfg) {
    Tracker t("complete-minimal-dual", 1e-9);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 5);
    const FiniteAbelianGroup g({12});
    for (const auto& h : all_subgroups(g)) {
        const Subgroup hperp = annihilator(g, h);
        const double biortho_const =
            static_cast<double>(g.order()) / static_cast<double>(h.size());
        for (int rep = 0; rep < 100; ++rep) {
            Window w = random_window(g, rng);
            if (rep == 0) w = delta_window(g);  // exercises the vanishing-Zak branch
            const auto ctx = instance_json(g, {{"h", describe_subgroup(h)},
                                               {"rep", std::to_string(rep)}});
            const CompletenessResult res = zak_complete_minimal(w, h);
            const auto atoms = oracle::gabor_atoms(w, h, hperp, 1.0, 1.0);
            const auto rank = oracle::gram_classify(atoms);
            t.record_flag(res.complete == rank.complete, ctx);
            t.record_flag(res.minimal == rank.minimal, ctx);
            if (!res.dualWindow) continue;
            // Biorthogonality of the constructed dual.
            const auto dual_atoms = oracle::gabor_atoms(*res.dualWindow, h, hperp, 1.0, 1.0);
            double dev = 0.0;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                for (std::size_t j = 0; j < dual_atoms.size(); ++j) {
                    const std::complex<double> ip =
                        dual_atoms[j].first.values.dot(atoms[i].first.values);
                    const std::complex<double> want = (i == j) ? biortho_const : 0.0;
                    dev = std::max(dev, std::abs(ip - want));
                }
            t.record(dev, ctx);
        }
    }
    return t.res;
}

CheckResult check_support_condition(const CheckConfig& cfg) {
    Tracker t("support-disjoint-condition", 1e-9);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 6);

    // Pinned analytic instance: Z4, delta window, Lambda = G, Gamma = <2>.
    {
        const FiniteAbelianGroup g({4});
        const GaborSystem sys = make_gabor_system(
            delta_window(g), full_subgroup(g),
            subgroup_from_generators(g.dual(), {GroupElement{{2}}}), Convention::plancherel);
        const auto sc = sufficient_condition(sys);
        const auto [a, b] = frame_bounds(sys);
        t.record_flag(sc.applies && std::abs(sc.lower - 1.0) < 1e-12 &&
                          std::abs(sc.upper - 1.0) < 1e-12,
                      instance_json(g, {{"check", quoted("analytic-instance-applies")}}));
        t.record(std::max(std::abs(a - 1.0), std::abs(b - 1.0)),
                 instance_json(g, {{"check", quoted("analytic-instance-bounds")}}));
    }

    long applied = 0;
    for (const auto& g : filter_groups({{8}, {12}, {2, 4}}, cfg.max_order)) {
        const auto subs = all_subgroups(g);
        for (const auto& gamma : subs) {
            const Subgroup gammaperp = annihilator(g.dual(), gamma);
            const auto reps = transversal(g, gammaperp);
            for (const auto& lambda : subs) {
                for (int rep = 0; rep < 5; ++rep) {
                    // Random window supported on one transversal of Gammaperp,
                    // so the disjointness hypothesis holds by construction.
                    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(g.order());
                    for (auto x : reps) v[x] = {rng.uniform_pm1(), rng.uniform_pm1()};
                    const GaborSystem sys = make_gabor_system(Window{g, v}, lambda, gamma,
                                                              Convention::plancherel);
                    const auto sc = sufficient_condition(sys);
                    if (!sc.applies) continue;
                    ++applied;
                    const auto [a, b] = frame_bounds(sys);
                    const double dev = std::max(std::max(sc.lower - a, 0.0),
                                                std::max(b - sc.upper, 0.0));
                    t.record(dev, instance_json(g, {{"lambda", describe_subgroup(lambda)},
                                                    {"gamma", describe_subgroup(gamma)},
                                                    {"rep", std::to_string(rep)}}));
                }
            }
        }
    }
    t.res.note = "condition applied on " + std::to_string(applied) + " random instances";
    return t.res;
}

CheckResult check_modulation_average(const CheckConfig& cfg) {
    Tracker t("modulation-average-identity", cfg.tol);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 7);
    for (const auto& g : filter_groups({{12}, {2, 4}}, cfg.max_order)) {
        const auto subs = all_subgroups(g.dual());
        for (int rep = 0; rep < 100; ++rep) {
            const Window f = random_window(g, rng);
            const Window w = random_window(g, rng);
            const Subgroup& gamma = subs[rng.below(subs.size())];
            const GroupElement lambda =
                g.element_at(static_cast<std::int64_t>(rng.below(g.order())));
            const GaborSystem sys = make_gabor_system(w, full_subgroup(g), gamma,
                                                      Convention::plancherel);
            const TwoSides sides = modulation_average_check(sys, f, lambda);
            const double scale = std::max(1.0, std::abs(sides.lhs));
            t.record(std::abs(sides.lhs - sides.rhs) / scale,
                     instance_json(g, {{"gamma", describe_subgroup(gamma)},
                                       {"rep", std::to_string(rep)}}));
        }
    }
    return t.res;
}

CheckResult check_ti_fiberization(const CheckConfig& cfg) {
    Tracker t("ti-fiberization", 1e-9);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 8);
    for (const auto& g : filter_groups({{8}, {12}}, cfg.max_order)) {
        for (const auto& h : all_subgroups(g)) {
            for (int rep = 0; rep < 6; ++rep) {
                const std::size_t count = 1 + rng.below(3);
                std::vector<std::pair<Window, double>> gens;
                std::vector<std::pair<Window, double>> atoms;
                for (std::size_t p = 0; p < count; ++p) {
                    const double weight = 0.25 + 1.5 * (0.5 * (rng.uniform_pm1() + 1.0));
                    gens.push_back({random_window(g, rng), weight});
                }
                for (const auto& [w, weight] : gens)
                    for (const auto& he : h.elements())
                        atoms.push_back({translate(w, he), weight});
                const FiberFrameReport rep_fiber = ti_fiber_bounds(g, h, gens);
                const auto [da, db] = oracle::brute_frame_bounds(atoms);
                const auto ctx = instance_json(g, {{"h", describe_subgroup(h)},
                                                   {"generators", std::to_string(count)},
                                                   {"rep", std::to_string(rep)}});
                t.record(std::abs(rep_fiber.globalA - da), ctx);
                t.record(std::abs(rep_fiber.globalB - db), ctx);
                // Non-frame detection must agree at threshold.
                t.record_flag((rep_fiber.globalA > 1e-12) == (da > 1e-12), ctx);
            }
        }
    }
    return t.res;
}

CheckResult check_reading_disambiguation(const CheckConfig& cfg) {
    Tracker t("reading-disambiguation", 1e-9);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 9);
    long printed_matched = 0;
    long total = 0;
    for (const auto& g : filter_groups({{4}, {6}, {8}, {12}, {2, 4}}, cfg.max_order)) {
        const auto triples = all_admissible_triples(g);
        if (triples.empty()) continue;
        for (int rep = 0; rep < 14 && total < 120; ++rep) {
            const auto& triple = triples[rng.below(triples.size())];
            const Window w = random_window(g, rng);
            const GaborSystem sys = make_gabor_system(w, triple.lambda, triple.gamma,
                                                      Convention::zak_chain, triple.adm.h);
            const auto [da, db] = frame_bounds(sys);
            const FiberFrameReport mod =
                gabor_fiber_bounds(sys, triple.adm, FiberReading::modulated);
            const FiberFrameReport pri =
                gabor_fiber_bounds(sys, triple.adm, FiberReading::printed);
            ++total;
            const auto ctx = instance_json(g, {{"lambda", describe_subgroup(triple.lambda)},
                                               {"gamma", describe_subgroup(triple.gamma)},
                                               {"h", describe_subgroup(triple.adm.h)},
                                               {"rep", std::to_string(rep)}});
            t.record(std::max(std::abs(mod.globalA - da), std::abs(mod.globalB - db)), ctx);
            if (std::max(std::abs(pri.globalA - da), std::abs(pri.globalB - db)) <= 1e-9)
                ++printed_matched;
        }
    }
    std::ostringstream note;
    note << "modulated reading matched on " << total << "/" << total
         << " instances; printed reading matched on " << printed_matched << "/" << total;
    t.res.note = note.str();
    return t.res;
}

CheckResult check_three_routes(const CheckConfig& cfg) {
    Tracker t("three-route-agreement", 1e-9);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 10);
    const FiniteAbelianGroup g({12});
    const auto subs = all_subgroups(g);
    std::vector<std::pair<Subgroup, Subgroup>> pairs;  // (lambda, gamma)
    for (const auto& lambda : subs)
        for (const auto& gamma : subs)
            if (is_subgroup_of(annihilator(g.dual(), gamma), lambda))
                pairs.emplace_back(lambda, gamma);
    for (long n = 0; n < 50; ++n) {
        const auto& [lambda, gamma] = pairs[n % pairs.size()];
        const Window w = random_window(g, rng);
        const GaborSystem sys = make_gabor_system(w, lambda, gamma, Convention::plancherel);
        const ThreeRouteResult res = three_route_check(sys);
        const auto ctx = instance_json(g, {{"lambda", describe_subgroup(lambda)},
                                           {"gamma", describe_subgroup(gamma)},
                                           {"n", std::to_string(n)}});
        t.record(std::abs(res.boundsDirect.first - res.boundsFiber.first), ctx);
        t.record(std::abs(res.boundsDirect.second - res.boundsFiber.second), ctx);
        t.record(std::abs(res.boundsDirect.first - res.boundsZak.first), ctx);
        t.record(std::abs(res.boundsDirect.second - res.boundsZak.second), ctx);
        t.record(std::abs(res.boundsFiber.first - res.boundsZak.first), ctx);
        t.record(std::abs(res.boundsFiber.second - res.boundsZak.second), ctx);
    }
    return t.res;
}

CheckResult check_convention_scaling(const CheckConfig& cfg) {
    Tracker t("convention-scaling", 1e-12);
    Xoshiro256StarStar rng(cfg.seed * 1001 + 11);
    for (const auto& g : filter_groups({{8}, {12}, {2, 4}}, cfg.max_order)) {
        for (const auto& triple : all_admissible_triples(g)) {
            for (int rep = 0; rep < 3; ++rep) {
                const Window w = random_window(g, rng);
                const GaborSystem zc = make_gabor_system(w, triple.lambda, triple.gamma,
                                                         Convention::zak_chain, triple.adm.h);
                const GaborSystem pl = make_gabor_system(w, triple.lambda, triple.gamma,
                                                         Convention::plancherel);
                const double factor = static_cast<double>(triple.gamma.size()) /
                                      static_cast<double>(triple.adm.hperp.size());
                const auto [za, zb] = frame_bounds(zc);
                const auto [pa, pb] = frame_bounds(pl);
                const double dev = std::max(rel_dev(za, factor * pa), rel_dev(zb, factor * pb));
                t.record(dev, instance_json(g, {{"lambda", describe_subgroup(triple.lambda)},
                                                {"gamma", describe_subgroup(triple.gamma)},
                                                {"h", describe_subgroup(triple.adm.h)},
                                                {"rep", std::to_string(rep)}}));
            }
        }
    }
    return t.res;
}

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg) {
    return {
        check_zak_unitarity(cfg),     check_quasi_periodicity(cfg),
        check_spectral_identity(cfg), check_bounds_consistency(cfg),
        check_divisor_condition(cfg), check_quotient_duality(cfg),
        check_complete_minimal(cfg),            check_support_condition(cfg),
        check_modulation_average(cfg),           check_ti_fiberization(cfg),
        check_reading_disambiguation(cfg),             check_three_routes(cfg),
        check_convention_scaling(cfg),
    };
}

}  // namespace zakgabor
