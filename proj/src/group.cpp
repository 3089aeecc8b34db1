#include "zakgabor/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace zakgabor {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("group needs at least one factor");
    for (auto f : factors_) {
        if (f < 1) throw std::invalid_argument("group factor must be >= 1");
        order_ *= f;
        exponent_ = std::lcm(exponent_, f);
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t j = factors_.size(); j-- > 1;)
        strides_[j - 1] = strides_[j] * factors_[j];
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
    GroupElement e;
    e.residues.resize(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        e.residues[j] = index / strides_[j];
        index %= strides_[j];
    }
    return e;
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
    if (x.residues.size() != factors_.size())
        throw std::invalid_argument("element arity does not match group");
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        auto r = x.residues[j] % factors_[j];
        if (r < 0) r += factors_[j];
        idx += r * strides_[j];
    }
    return idx;
}

GroupElement FiniteAbelianGroup::reduce(const GroupElement& a) const {
    return element_at(index_of(a));
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    if (a.residues.size() != factors_.size() || b.residues.size() != factors_.size())
        throw std::invalid_argument("element arity does not match group");
    GroupElement e;
    e.residues.resize(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        e.residues[j] = (a.residues[j] + b.residues[j]) % factors_[j];
    return reduce(e);
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
    GroupElement e;
    e.residues.resize(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        e.residues[j] = (factors_[j] - a.residues[j] % factors_[j]) % factors_[j];
    return reduce(e);
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
}

std::int64_t FiniteAbelianGroup::add_indices(std::int64_t i, std::int64_t j) const {
    return index_of(add(element_at(i), element_at(j)));
}

std::int64_t FiniteAbelianGroup::negate_index(std::int64_t i) const {
    return index_of(negate(element_at(i)));
}

std::int64_t FiniteAbelianGroup::sub_indices(std::int64_t i, std::int64_t j) const {
    return index_of(sub(element_at(i), element_at(j)));
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const {
    if (x.residues.size() != factors_.size()) return false;
    for (std::size_t j = 0; j < factors_.size(); ++j)
        if (x.residues[j] < 0 || x.residues[j] >= factors_[j]) return false;
    return true;
}

namespace {

// Pairing phase as an exact fraction t/M with M = lcm of the factors.
std::int64_t pairing_numerator(const FiniteAbelianGroup& g, const GroupElement& x,
                               const GroupElement& xi) {
    if (x.residues.size() != g.num_factors() || xi.residues.size() != g.num_factors())
        throw std::invalid_argument("character pairing: mismatched factor lists");
    const auto& L = g.factors();
    const std::int64_t m = g.exponent();
    std::int64_t t = 0;
    for (std::size_t j = 0; j < L.size(); ++j) {
        std::int64_t p = (x.residues[j] % L[j]) * (xi.residues[j] % L[j]) % L[j];
        if (p < 0) p += L[j];
        t = (t + p * (m / L[j])) % m;
    }
    return t;
}

}  // namespace

std::complex<double> character_value(const FiniteAbelianGroup& g, const GroupElement& x,
                                     const GroupElement& xi) {
    const std::int64_t t = pairing_numerator(g, x, xi);
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(g.exponent());
    return std::polar(1.0, angle);
}

bool character_is_trivial(const FiniteAbelianGroup& g, const GroupElement& x,
                          const GroupElement& xi) {
    return pairing_numerator(g, x, xi) == 0;
}

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<std::int64_t> sorted_indices)
    : parent_(std::move(parent)), elems_(std::move(sorted_indices)) {
    if (elems_.empty() || elems_.front() != 0)
        throw std::invalid_argument("subgroup must contain the identity");
    if (!std::is_sorted(elems_.begin(), elems_.end()))
        throw std::invalid_argument("subgroup element list must be sorted");
}

bool Subgroup::contains_index(std::int64_t idx) const {
    return std::binary_search(elems_.begin(), elems_.end(), idx);
}

bool Subgroup::contains(const GroupElement& x) const {
    return contains_index(parent_.index_of(x));
}

std::vector<GroupElement> Subgroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(elems_.size());
    for (auto i : elems_) out.push_back(parent_.element_at(i));
    return out;
}

namespace {

std::vector<std::int64_t> close_under_addition(const FiniteAbelianGroup& g,
                                               std::vector<std::int64_t> seed) {
    std::set<std::int64_t> members(seed.begin(), seed.end());
    members.insert(0);
    std::vector<std::int64_t> work(members.begin(), members.end());
    while (!work.empty()) {
        std::int64_t a = work.back();
        work.pop_back();
        for (std::int64_t b : std::vector<std::int64_t>(members.begin(), members.end())) {
            std::int64_t s = g.add_indices(a, b);
            if (members.insert(s).second) work.push_back(s);
        }
        std::int64_t n = g.negate_index(a);
        if (members.insert(n).second) work.push_back(n);
    }
    return {members.begin(), members.end()};
}

}  // namespace

Subgroup subgroup_from_generators(const FiniteAbelianGroup& g,
                                  const std::vector<GroupElement>& gens) {
    std::vector<std::int64_t> idx;
    for (const auto& e : gens) {
        if (!g.contains(e)) throw std::invalid_argument("generator outside group");
        idx.push_back(g.index_of(e));
    }
    return Subgroup(g, close_under_addition(g, std::move(idx)));
}

Subgroup subgroup_from_elements(const FiniteAbelianGroup& g,
                                const std::vector<GroupElement>& elems) {
    std::vector<std::int64_t> idx;
    for (const auto& e : elems) {
        if (!g.contains(e)) throw std::invalid_argument("element outside group");
        idx.push_back(g.index_of(e));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    auto closed = close_under_addition(g, idx);
    if (closed != idx) throw std::invalid_argument("element set is not closed under addition");
    return Subgroup(g, std::move(idx));
}

Subgroup trivial_subgroup(const FiniteAbelianGroup& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const FiniteAbelianGroup& g) {
    std::vector<std::int64_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
    if (!(a.parent() == b.parent())) throw std::invalid_argument("subgroups of different groups");
    return std::includes(b.element_indices().begin(), b.element_indices().end(),
                         a.element_indices().begin(), a.element_indices().end());
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g, std::int64_t max_order) {
    if (g.order() > max_order)
        throw std::length_error("group order exceeds subgroup enumeration bound");
    std::set<std::vector<std::int64_t>> seen;
    std::vector<Subgroup> out;
    std::vector<std::vector<std::int64_t>> work;
    std::vector<std::int64_t> triv{0};
    seen.insert(triv);
    out.emplace_back(g, triv);
    work.push_back(triv);
    while (!work.empty()) {
        auto cur = std::move(work.back());
        work.pop_back();
        for (std::int64_t x = 1; x < g.order(); ++x) {
            if (std::binary_search(cur.begin(), cur.end(), x)) continue;
            auto ext = cur;
            ext.push_back(x);
            auto closed = close_under_addition(g, std::move(ext));
            if (seen.insert(closed).second) {
                out.emplace_back(g, closed);
                work.push_back(closed);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.element_indices() < b.element_indices();
    });
    return out;
}

Subgroup annihilator(const FiniteAbelianGroup& g, const Subgroup& s) {
    if (!(s.parent() == g)) throw std::invalid_argument("subgroup of a different group");
    const FiniteAbelianGroup d = g.dual();
    std::vector<std::int64_t> ann;
    for (std::int64_t gi = 0; gi < d.order(); ++gi) {
        const GroupElement gamma = d.element_at(gi);
        bool trivial_on_s = true;
        for (auto si : s.element_indices()) {
            if (!character_is_trivial(g, g.element_at(si), gamma)) {
                trivial_on_s = false;
                break;
            }
        }
        if (trivial_on_s) ann.push_back(gi);
    }
    return Subgroup(d, std::move(ann));
}

std::vector<std::int64_t> transversal(const FiniteAbelianGroup& g, const Subgroup& h) {
    std::vector<std::int64_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return relative_transversal(g, all, h);
}

std::vector<std::int64_t> relative_transversal(const FiniteAbelianGroup& g,
                                               const std::vector<std::int64_t>& ambient,
                                               const Subgroup& h) {
    std::vector<char> covered(g.order(), 0);
    std::vector<std::int64_t> reps;
    // Ambient list is sorted, so the first member seen in each coset is the
    // lexicographically smallest one.
    for (auto a : ambient) {
        if (covered[a]) continue;
        reps.push_back(a);
        for (auto hi : h.element_indices()) covered[g.add_indices(a, hi)] = 1;
    }
    return reps;
}

std::vector<std::int64_t> quotient_invariant_factors(const FiniteAbelianGroup& g,
                                                     const Subgroup& k, const Subgroup& h) {
    if (!is_subgroup_of(h, k)) throw std::invalid_argument("H is not contained in K");
    const std::int64_t n = k.size() / h.size();
    if (n == 1) return {};

    // Count, for each divisor d, the elements of K/H killed by d; for abelian
    // p-groups the counts determine the exponent partition.
    auto killed_by = [&](std::int64_t d) {
        std::int64_t count = 0;
        for (auto xi : k.element_indices()) {
            std::int64_t acc = 0;  // d * x by repeated addition
            for (std::int64_t r = 0; r < d; ++r) acc = g.add_indices(acc, xi);
            if (h.contains_index(acc)) ++count;
        }
        return count / h.size();
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> prime_powers;  // (p, a)
    {
        std::int64_t rest = n;
        for (std::int64_t p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            std::int64_t a = 0;
            while (rest % p == 0) {
                rest /= p;
                ++a;
            }
            prime_powers.emplace_back(p, a);
        }
        if (rest > 1) prime_powers.emplace_back(rest, 1);
    }

    std::map<std::int64_t, std::vector<std::int64_t>> exps_per_prime;
    for (auto [p, a] : prime_powers) {
        // m_j = #(cyclic p-factors with exponent >= j)
        std::vector<std::int64_t> m;
        std::int64_t prev = 1, pj = 1;
        for (std::int64_t j = 1; j <= a; ++j) {
            pj *= p;
            std::int64_t fj = killed_by(pj);
            std::int64_t ratio = fj / prev;
            std::int64_t mj = 0;
            while (ratio > 1) {
                ratio /= p;
                ++mj;
            }
            m.push_back(mj);
            prev = fj;
        }
        std::vector<std::int64_t> exps;  // one entry per cyclic p-factor
        for (std::size_t j = 0; j < m.size(); ++j) {
            std::int64_t next = (j + 1 < m.size()) ? m[j + 1] : 0;
            for (std::int64_t c = 0; c < m[j] - next; ++c)
                exps.push_back(static_cast<std::int64_t>(j) + 1);
        }
        std::sort(exps.rbegin(), exps.rend());
        exps_per_prime[p] = std::move(exps);
    }

    std::size_t rank = 0;
    for (auto& [p, e] : exps_per_prime) rank = std::max(rank, e.size());
    std::vector<std::int64_t> inv(rank, 1);
    for (auto& [p, e] : exps_per_prime)
        for (std::size_t i = 0; i < e.size(); ++i) {
            std::int64_t pe = 1;
            for (std::int64_t c = 0; c < e[i]; ++c) pe *= p;
            inv[i] *= pe;  // largest with largest: divisibility chain
        }
    std::reverse(inv.begin(), inv.end());  // ascending, each divides the next
    return inv;
}

MeasureChain weil_chain(const FiniteAbelianGroup& g, const Subgroup& h) {
    if (!(h.parent() == g)) throw std::invalid_argument("subgroup of a different group");
    MeasureChain c;
    c.wG = 1.0;
    c.wH = 1.0;
    c.wGmodH = 1.0;
    c.wGhat = 1.0 / static_cast<double>(g.order());
    c.wHperp = static_cast<double>(h.size()) / static_cast<double>(g.order());
    c.wGhatModHperp = 1.0 / static_cast<double>(h.size());
    return c;
}

}  // namespace zakgabor
