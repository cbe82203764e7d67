#include "largeness/rewriting.hpp"

namespace largeness {

SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                           const SchreierData& sd) {
    SubgroupPresentation sp;
    int n = t.index(), k = t.gen_count;
    sp.parent_gen_count = k;
    sp.parent_index = n;
    sp.sigma_index.assign(static_cast<size_t>(n) * k, -1);
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < k; ++g)
            if (!sd.is_tree_pair(i, g)) {
                sp.sigma_index[static_cast<size_t>(i) * k + g] = sp.sigma_count();
                sp.sigma.emplace_back(i, g);
            }

    int expected = (k - 1) * n + 1;
    if (sp.sigma_count() != expected)
        throw std::logic_error("Schreier generator count " + std::to_string(sp.sigma_count()) +
                               " != (|S|-1)*index + 1 = " + std::to_string(expected));

    // one rewritten relator per (relator, coset); conjugating by the
    // transversal word rewrites to nothing, so tracing r from coset i suffices
    sp.relators.reserve(static_cast<size_t>(p.relator_count()) * n);
    for (const Word& r : p.relators)
        for (int i = 0; i < n; ++i) sp.relators.push_back(rewrite_from(sp, t, r, i));
    return sp;
}

Word rewrite_from(const SubgroupPresentation& sp, const CosetTable& t, const Word& w,
                  int start_coset) {
    Word out;
    int c = start_coset;
    for (int l : w) {
        int g = letter_gen(l);
        if (letter_positive(l)) {
            int s = sp.lookup(c, g);
            if (s >= 0) out.push_back(gen_letter(s));
            c = t.fwd[g][c];
        } else {
            int prev = t.bwd[g][c]; // prev · g = c
            int s = sp.lookup(prev, g);
            if (s >= 0) out.push_back(inv_letter(s));
            c = prev;
        }
    }
    return free_reduce(out);
}

Word rewrite_in_subgroup(const SubgroupPresentation& sp, const CosetTable& t, const Word& w) {
    if (word_action(t, w, 0) != 0)
        throw NotInSubgroupError("word does not fix coset 0");
    return rewrite_from(sp, t, w, 0);
}

IntMatrix abelianized_matrix(const SubgroupPresentation& sp) {
    IntMatrix m(static_cast<int>(sp.relators.size()), sp.sigma_count());
    for (size_t r = 0; r < sp.relators.size(); ++r)
        for (int l : sp.relators[r]) {
            int g = letter_gen(l);
            m.at(static_cast<int>(r), g) += letter_positive(l) ? 1 : -1;
        }
    return m;
}

} // namespace largeness
