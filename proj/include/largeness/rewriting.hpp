#pragma once

#include "largeness/coset_table.hpp"
#include "largeness/integer_matrix.hpp"
#include "largeness/presentation.hpp"

#include <stdexcept>
#include <vector>

namespace largeness {

struct NotInSubgroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Presentation of the coset-0 stabilizer on its Schreier generators.
/// Generators are the non-tree (coset, generator) pairs ordered by
/// (coset, generator); this ordering is the column order of every matrix
/// derived downstream.
struct SubgroupPresentation {
    std::vector<std::pair<int, int>> sigma;   // (coset, gen), non-tree pairs
    std::vector<int> sigma_index;             // (coset*gen_count + gen) -> index or -1
    std::vector<Word> relators;               // words over sigma letters, freely reduced;
                                              // row r*index + i rewrites relator r at coset i
    int parent_gen_count = 0;
    int parent_index = 0;

    int sigma_count() const { return static_cast<int>(sigma.size()); }
    int lookup(int coset, int gen) const {
        return sigma_index[static_cast<size_t>(coset) * parent_gen_count + gen];
    }
};

SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                           const SchreierData& sd);

/// Rewrite of a parent word tracing from the given coset; the result is a
/// word in the Schreier generators.
Word rewrite_from(const SubgroupPresentation& sp, const CosetTable& t, const Word& w,
                  int start_coset);

/// Rewrite of a subgroup element (must fix coset 0).
Word rewrite_in_subgroup(const SubgroupPresentation& sp, const CosetTable& t, const Word& w);

/// One row per rewritten relator, one column per Schreier generator;
/// entries are exponent sums.
IntMatrix abelianized_matrix(const SubgroupPresentation& sp);

} // namespace largeness
