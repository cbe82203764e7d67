#pragma once

#include "largeness/arith.hpp"
#include "largeness/integer_matrix.hpp"

#include <optional>
#include <vector>

namespace largeness {

/// Finitely generated abelian group in invariant-factor form:
/// Z/d1 x ... x Z/dk x Z^free_rank with d1 | d2 | ... and each dj >= 2.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;
    int free_rank = 0;

    int torsion_rank() const { return static_cast<int>(invariant_factors.size()); }
    int d() const { return torsion_rank() + free_rank; } // minimal generator count
    bool is_finite() const { return free_rank == 0; }
    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    Int order() const; // throws if infinite

    bool operator==(const FiniteAbelianGroup& o) const = default;
};

/// Element vectors have torsion components first (reduced mod the invariant
/// factors) then free components.
using ElementVector = std::vector<Int>;

ElementVector reduce_element(const FiniteAbelianGroup& g, ElementVector v);
ElementVector add_elements(const FiniteAbelianGroup& g, const ElementVector& x,
                           const ElementVector& y);
ElementVector negate_element(const FiniteAbelianGroup& g, const ElementVector& x);
bool is_zero_element(const ElementVector& v);

/// Order of the cyclic subgroup generated by v; nullopt when infinite.
std::optional<Int> element_order(const FiniteAbelianGroup& g, const ElementVector& v);

struct CokernelResult {
    FiniteAbelianGroup group;
    /// Image of each standard generator (matrix column) in the quotient.
    std::vector<ElementVector> generator_images;
};

/// Z^cols / (row space of m [+ n*Z^cols when modulus n given]).
CokernelResult cokernel(const IntMatrix& m, std::optional<Int> modulus = std::nullopt);

/// Structure of the subgroup of a finite A generated by the given elements.
FiniteAbelianGroup subgroup_generated(const FiniteAbelianGroup& a,
                                      const std::vector<ElementVector>& gens);

/// A character of a finite abelian group: one residue per invariant factor.
struct Character {
    std::vector<Int> residues;
    bool operator==(const Character& o) const = default;
};

/// All |A| characters, trivial first, then lexicographic in the residue
/// vectors.  Throws ResourceLimitError above the enumeration bound.
std::vector<Character> characters(const FiniteAbelianGroup& a, const Int& bound = Int(1) << 20);

/// arg(chi(v)) / 2*pi as the exact rational in (-1/2, 1/2].
Rat character_value_arg(const FiniteAbelianGroup& a, const Character& chi,
                        const ElementVector& v);

/// Enumeration of a finite group's elements in lexicographic vector order.
long long element_count_checked(const FiniteAbelianGroup& a, long long limit);
ElementVector unrank_element(const FiniteAbelianGroup& a, long long r);
long long rank_element(const FiniteAbelianGroup& a, const ElementVector& v);

} // namespace largeness
