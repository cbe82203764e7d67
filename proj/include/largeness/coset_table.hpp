#pragma once

#include "largeness/presentation.hpp"
#include "largeness/words.hpp"

#include <string>
#include <vector>

namespace largeness {

/// Permutation action of the generators on right cosets of a finite-index
/// subgroup.  Coset 0 is the subgroup; right action (Hg)·s = H(gs).
struct CosetTable {
    int gen_count = 0;
    std::vector<std::vector<int>> fwd; // fwd[s][i] = i·s
    std::vector<std::vector<int>> bwd; // bwd[s][i] = i·s^{-1}
    std::vector<Word> subgroup_words;

    int index() const { return fwd.empty() ? 0 : static_cast<int>(fwd[0].size()); }
    int act_letter(int coset, int letter) const {
        int g = letter_gen(letter);
        return letter_positive(letter) ? fwd[g][coset] : bwd[g][coset];
    }
};

/// Identity table: one coset, every generator fixing it.
CosetTable trivial_table(int gen_count);

/// HLT-style coset enumeration with coincidence merging, deterministic scan
/// order (cosets ascending, relators in file order).  The returned table is
/// standardized by breadth-first renumbering from coset 0.
/// Throws ResourceLimitError if more than max_cosets live cosets are needed.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        long long max_cosets = 1000000);

int word_action(const CosetTable& t, const Word& w, int coset);

/// Transversal word per coset plus the spanning tree of the Schreier graph,
/// breadth-first from coset 0 (generators in presentation order, then inverses).
struct SchreierData {
    std::vector<Word> transversal;     // transversal[0] is the empty word
    std::vector<char> tree;            // tree[i*gen_count + s]: (i,s) is a tree edge
    int gen_count = 0;

    bool is_tree_pair(int coset, int gen) const {
        return tree[static_cast<size_t>(coset) * gen_count + gen] != 0;
    }
};

SchreierData schreier_data(const CosetTable& t);

/// Schreier generator word t_i · s · t_{i·s}^{-1} for the pair (i, s).
Word schreier_generator_word(const CosetTable& t, const SchreierData& sd, int coset, int gen);

/// Normality of the coset-0 stabilizer, tested by conjugating every Schreier
/// generator by every generator letter and checking coset 0 stays fixed.
bool is_normal(const CosetTable& t);

/// G-set isomorphism (some bijection commuting with the action).
bool tables_isomorphic(const CosetTable& a, const CosetTable& b);

/// { "index": n, "action": { "<gen name>": [perm], ... } }
std::string table_json(const CosetTable& t, const std::vector<char>& gen_names);

} // namespace largeness
