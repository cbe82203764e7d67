#include "largeness/coset_table.hpp"
#include "largeness/presentation.hpp"
#include "largeness/rewriting.hpp"

#include <doctest.h>

#include <random>

using namespace largeness;

namespace {

struct Setup {
    Presentation p;
    CosetTable t;
    SchreierData sd;
    SubgroupPresentation sp;
};

Setup make(const std::string& text, const std::vector<std::string>& sub) {
    Setup s;
    s.p = parse_presentation(text);
    std::vector<Word> ws;
    for (const auto& w : sub) ws.push_back(s.p.word_from_string(w));
    s.t = todd_coxeter(s.p, ws);
    s.sd = schreier_data(s.t);
    s.sp = reidemeister_schreier(s.p, s.t, s.sd);
    return s;
}

} // namespace

TEST_CASE("generator and relator counts") {
    SUBCASE("free group, index-four subgroup: 5 generators, no relators") {
        Setup s = make("gens: a b\n", {"aa", "baBA", "bb", "abaB", "abbA"});
        CHECK(s.t.index() == 4);
        CHECK(s.sp.sigma_count() == 5); // (2-1)*4 + 1
        CHECK(s.sp.relators.empty());
    }
    SUBCASE("order-three cyclic group over the trivial subgroup") {
        Setup s = make("gens: a\nrel: aaa\n", {});
        CHECK(s.t.index() == 3);
        CHECK(s.sp.sigma_count() == 1); // (1-1)*3 + 1
        CHECK(s.sp.relators.size() == 3);
    }
    SUBCASE("index-one subgroup reproduces the parent presentation") {
        Setup s = make("gens: a b\nrel: abab\n", {"a", "b"});
        CHECK(s.t.index() == 1);
        CHECK(s.sp.sigma_count() == 2);
        REQUIRE(s.sp.relators.size() == 1);
        // sigma letters correspond to the parent generators in order
        CHECK(s.sp.relators[0] == s.p.relators[0]);
    }
    SUBCASE("count formulas hold across a small corpus") {
        for (const auto& [text, sub] : std::vector<std::pair<std::string, std::vector<std::string>>>{
                 {"gens: a b\nrel: aa\nrel: bbb\nrel: abab\n", {}},
                 {"gens: a b\nrel: aa\nrel: bbb\nrel: abab\n", {"b"}},
                 {"gens: a b\nrel: aaaa\n", {"a", "bb", "bab"}},
             }) {
            Setup s = make(text, sub);
            int n = s.t.index(), k = s.p.gen_count();
            CHECK(s.sp.sigma_count() == (k - 1) * n + 1);
            CHECK(static_cast<int>(s.sp.relators.size()) == s.p.relator_count() * n);
        }
    }
}

TEST_CASE("rewriting subgroup elements") {
    Setup s = make("gens: a b\n", {"aa", "baBA", "bb", "abaB", "abbA"});
    SUBCASE("a schreier generator word rewrites to its own letter") {
        for (int j = 0; j < s.sp.sigma_count(); ++j) {
            auto [coset, gen] = s.sp.sigma[static_cast<size_t>(j)];
            Word w = schreier_generator_word(s.t, s.sd, coset, gen);
            CHECK(rewrite_in_subgroup(s.sp, s.t, w) == Word{gen_letter(j)});
        }
    }
    SUBCASE("the empty word rewrites to the empty word") {
        CHECK(rewrite_in_subgroup(s.sp, s.t, {}).empty());
    }
    SUBCASE("products of schreier generators rewrite to two-letter words") {
        Word w1 = schreier_generator_word(s.t, s.sd, s.sp.sigma[0].first, s.sp.sigma[0].second);
        Word w2 = schreier_generator_word(s.t, s.sd, s.sp.sigma[2].first, s.sp.sigma[2].second);
        CHECK(rewrite_in_subgroup(s.sp, s.t, concat(w1, w2)) ==
              Word{gen_letter(0), gen_letter(2)});
    }
    SUBCASE("words outside the subgroup are rejected") {
        CHECK_THROWS_AS(rewrite_in_subgroup(s.sp, s.t, s.p.word_from_string("a")),
                        NotInSubgroupError);
    }
    SUBCASE("rewriting is multiplicative on subgroup elements") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> pick(0, s.sp.sigma_count() - 1), len(1, 4);
        auto random_subgroup_word = [&] {
            Word w;
            for (int i = 0, n = len(rng); i < n; ++i) {
                auto [c, g] = s.sp.sigma[static_cast<size_t>(pick(rng))];
                w = concat(w, schreier_generator_word(s.t, s.sd, c, g));
            }
            return w;
        };
        for (int it = 0; it < 100; ++it) {
            Word w1 = random_subgroup_word(), w2 = random_subgroup_word();
            Word combined = rewrite_in_subgroup(s.sp, s.t, concat(w1, w2));
            Word split = concat(rewrite_in_subgroup(s.sp, s.t, w1),
                                rewrite_in_subgroup(s.sp, s.t, w2));
            CHECK(freely_equal(combined, split));
        }
    }
}

TEST_CASE("abelianized relation matrices") {
    SUBCASE("free subgroup: no rows") {
        Setup s = make("gens: a b\n", {"aa", "baBA", "bb", "abaB", "abbA"});
        IntMatrix m = abelianized_matrix(s.sp);
        CHECK(m.rows == 0);
        CHECK(m.cols == 5);
    }
    SUBCASE("trivial subgroup of the order-three group, by hand") {
        // BFS transversal is {e, a, aa}; the one schreier generator is aaa,
        // and tracing the relator from each coset crosses the non-tree pair
        // exactly once, so each row is [1]
        Setup s = make("gens: a\nrel: aaa\n", {});
        REQUIRE(s.sp.sigma_count() == 1);
        for (const Word& r : s.sp.relators) CHECK(r == Word{1});
        IntMatrix m = abelianized_matrix(s.sp);
        REQUIRE(m.rows == 3);
        for (int i = 0; i < 3; ++i) CHECK(m.at(i, 0) == 1);
    }
    SUBCASE("a commutator relator gives a zero row") {
        Setup s = make("gens: a b\nrel: abAB\n", {"a", "b"});
        IntMatrix m = abelianized_matrix(s.sp);
        REQUIRE(m.rows == 1);
        CHECK(m.at(0, 0) == 0);
        CHECK(m.at(0, 1) == 0);
    }
}
