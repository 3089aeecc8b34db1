#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <vector>

namespace zakgabor {

/// Element of a product of cyclic groups, stored as residues, one per factor.
struct GroupElement {
    std::vector<std::int64_t> residues;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

/**
 * A finite abelian group Z_{L1} x ... x Z_{Lk}, given in factor form.
 *
 * Elements are enumerated lexicographically over residue tuples (last factor
 * fastest), so the flat index order coincides with lexicographic order.  The
 * dual group is represented by the same factor list; the character pairing
 * below makes the identification explicit.
 */
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::int64_t order() const { return order_; }
    std::size_t num_factors() const { return factors_.size(); }

    /// The dual group carries the same factor list.
    FiniteAbelianGroup dual() const { return *this; }

    GroupElement identity() const;
    GroupElement element_at(std::int64_t index) const;
    std::int64_t index_of(const GroupElement& x) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;

    std::int64_t add_indices(std::int64_t i, std::int64_t j) const;
    std::int64_t negate_index(std::int64_t i) const;
    std::int64_t sub_indices(std::int64_t i, std::int64_t j) const;

    /// Reduce residues componentwise mod L_j (accepts negative inputs).
    GroupElement reduce(const GroupElement& a) const;

    bool contains(const GroupElement& x) const;

    /// lcm of the factors; the exponent of the group.
    std::int64_t exponent() const { return exponent_; }

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    std::vector<std::int64_t> factors_;
    std::vector<std::int64_t> strides_;
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 1;
};

/// chi_xi(x) = exp(2*pi*i * sum_j x_j xi_j / L_j); a unit-modulus bicharacter.
std::complex<double> character_value(const FiniteAbelianGroup& g, const GroupElement& x,
                                     const GroupElement& xi);

/// Exact integer test for chi_xi(x) == 1.
bool character_is_trivial(const FiniteAbelianGroup& g, const GroupElement& x,
                          const GroupElement& xi);

/**
 * A subgroup given by its full, sorted element list.  Equality is
 * canonical-element-list equality.  The element indices are sorted flat
 * indices into the parent's enumeration.
 */
class Subgroup {
public:
    Subgroup(FiniteAbelianGroup parent, std::vector<std::int64_t> sorted_indices);

    const FiniteAbelianGroup& parent() const { return parent_; }
    const std::vector<std::int64_t>& element_indices() const { return elems_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }

    bool contains_index(std::int64_t idx) const;
    bool contains(const GroupElement& x) const;

    std::vector<GroupElement> elements() const;

    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && elems_ == other.elems_;
    }

private:
    FiniteAbelianGroup parent_;
    std::vector<std::int64_t> elems_;
};

/// Smallest subgroup of g containing gens (closure under addition).
Subgroup subgroup_from_generators(const FiniteAbelianGroup& g,
                                  const std::vector<GroupElement>& gens);

Subgroup subgroup_from_elements(const FiniteAbelianGroup& g,
                                const std::vector<GroupElement>& elems);

Subgroup trivial_subgroup(const FiniteAbelianGroup& g);
Subgroup full_subgroup(const FiniteAbelianGroup& g);

/// a <= b as sets (same parent group required).
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);

/// Complete subgroup list via BFS over cyclic extensions; deduplicated.
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g, std::int64_t max_order = 256);

/// Annihilator S^perp = { gamma in dual(g) : chi_gamma(s) = 1 for all s in S }.
Subgroup annihilator(const FiniteAbelianGroup& g, const Subgroup& s);

/// One representative per coset of g/h: the lexicographically smallest member.
std::vector<std::int64_t> transversal(const FiniteAbelianGroup& g, const Subgroup& h);

/// Representatives of (ambient subgroup)/h, smallest member of each coset.
/// `ambient` must be closed and contain h.
std::vector<std::int64_t> relative_transversal(const FiniteAbelianGroup& g,
                                               const std::vector<std::int64_t>& ambient,
                                               const Subgroup& h);

/// Invariant factors (each dividing the next) of the quotient k/h, h <= k.
std::vector<std::int64_t> quotient_invariant_factors(const FiniteAbelianGroup& g,
                                                     const Subgroup& k, const Subgroup& h);

/**
 * Haar weights across the chain G, H, G/H and their duals under the canonical
 * convention: counting measure on G and H, Plancherel weight 1/|G| on the
 * dual.  Both Weil identities hold exactly:
 *   wG = wH * wGmodH,   wGhat = wHperp * wGhatModHperp.
 */
struct MeasureChain {
    double wG = 1.0;
    double wH = 1.0;
    double wGmodH = 1.0;
    double wGhat = 0.0;
    double wHperp = 0.0;
    double wGhatModHperp = 0.0;
};

MeasureChain weil_chain(const FiniteAbelianGroup& g, const Subgroup& h);

}  // namespace zakgabor
