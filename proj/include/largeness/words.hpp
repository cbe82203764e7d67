#pragma once

#include <string>
#include <vector>

namespace largeness {

// A word over a generating alphabet is a sequence of nonzero letters:
// +(g+1) is generator g, -(g+1) its inverse.
using Word = std::vector<int>;

inline int gen_letter(int g) { return g + 1; }
inline int inv_letter(int g) { return -(g + 1); }
inline int letter_gen(int l) { return (l > 0 ? l : -l) - 1; }
inline bool letter_positive(int l) { return l > 0; }

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Freely-equal test: reduce both sides and compare.
bool freely_equal(const Word& a, const Word& b);

} // namespace largeness
