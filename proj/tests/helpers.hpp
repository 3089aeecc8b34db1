#pragma once

#include <complex>
#include <vector>

#include "zakgabor/group.hpp"
#include "zakgabor/rng.hpp"
#include "zakgabor/transforms.hpp"

namespace test_util {

inline zakgabor::GroupElement el(std::vector<std::int64_t> residues) {
    return zakgabor::GroupElement{std::move(residues)};
}

inline zakgabor::Subgroup cyclic(const zakgabor::FiniteAbelianGroup& g, std::int64_t gen) {
    return zakgabor::subgroup_from_generators(g, {el({gen})});
}

inline double cdist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

}  // namespace test_util
