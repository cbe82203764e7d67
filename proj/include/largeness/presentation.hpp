#pragma once

#include "largeness/words.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace largeness {

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

/// A finite presentation <S | R>.  Relators are stored freely reduced;
/// relator_length_sum is the sum of their reduced lengths.
struct Presentation {
    std::vector<char> gens;               // single lowercase letters, distinct
    std::vector<Word> relators;           // freely reduced
    std::vector<bool> relator_trivial;    // reduced to the empty word (kept, flagged)
    long long relator_length_sum = 0;

    int gen_count() const { return static_cast<int>(gens.size()); }
    int relator_count() const { return static_cast<int>(relators.size()); }
    int gen_index(char c) const;          // -1 if unknown
    long long max_relator_length() const;

    Word word_from_string(const std::string& s) const;   // lowercase = gen, uppercase = inverse
    std::string word_to_string(const Word& w) const;
};

/// Text format, one item per line; '#' starts a comment.
///   gens: a b c        (exactly one such line)
///   rel: abAB          (zero or more)
Presentation parse_presentation(const std::string& text);

std::string serialize(const Presentation& p);

} // namespace largeness
