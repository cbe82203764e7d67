#include "largeness/presentation.hpp"
#include "largeness/words.hpp"

#include <doctest.h>

#include <random>

using namespace largeness;

TEST_CASE("free reduction") {
    // a * a^-1 -> empty
    CHECK(free_reduce({1, -1}).empty());
    // a b b^-1 a -> a a
    CHECK(free_reduce({1, 2, -2, 1}) == Word{1, 1});
    // already reduced word is unchanged
    Word w{1, 2, -1, 2};
    CHECK(free_reduce(w) == w);
}

TEST_CASE("free reduction is idempotent and length-non-increasing") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> len(0, 40), letter(0, 5);
    for (int it = 0; it < 500; ++it) {
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            int l = letter(rng);
            w.push_back(l < 3 ? l + 1 : -(l - 2));
        }
        Word r = free_reduce(w);
        CHECK(r.size() <= w.size());
        CHECK(free_reduce(r) == r);
        // w * w^-1 reduces to nothing
        CHECK(free_reduce(concat(w, inverse(w))).empty());
    }
}

TEST_CASE("presentation parsing") {
    SUBCASE("two generators, square relator") {
        Presentation p = parse_presentation("gens: a b\nrel: aa\n");
        CHECK(p.gen_count() == 2);
        CHECK(p.relator_count() == 1);
        CHECK(p.relator_length_sum == 2);
        CHECK(p.relators[0] == Word{1, 1});
    }
    SUBCASE("commutator relator has length 4") {
        Presentation p = parse_presentation("gens: a b\nrel: abAB\n");
        CHECK(p.relator_length_sum == 4);
        CHECK(p.relators[0] == Word{1, 2, -1, -2});
    }
    SUBCASE("relator reducing to the empty word is kept but flagged") {
        Presentation p = parse_presentation("gens: a\nrel: aA\n");
        CHECK(p.relator_count() == 1);
        CHECK(p.relator_trivial[0]);
        CHECK(p.relator_length_sum == 0);
    }
    SUBCASE("comments and blank lines") {
        Presentation p = parse_presentation("# header\ngens: a b # trailing\n\nrel: ab\n");
        CHECK(p.gen_count() == 2);
        CHECK(p.relator_length_sum == 2);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_presentation("rel: aa\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens:\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: ab\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel: ax\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nnonsense\n"), ParseError);
    try {
        parse_presentation("gens: a\nrel: ab\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
}

TEST_CASE("parse then serialize then parse is the identity") {
    const char* inputs[] = {
        "gens: a b\nrel: aa\nrel: abAB\n",
        "gens: a\n",
        "gens: x y z\nrel: xyzXYZ\nrel: xx\nrel: yyy\n",
    };
    for (const char* text : inputs) {
        Presentation p = parse_presentation(text);
        Presentation q = parse_presentation(serialize(p));
        CHECK(p.gens == q.gens);
        CHECK(p.relators == q.relators);
        CHECK(p.relator_length_sum == q.relator_length_sum);
    }
}
