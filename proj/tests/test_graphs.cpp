#include "largeness/chain.hpp"
#include "largeness/graph.hpp"
#include "largeness/presentation.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace largeness;

namespace {

LabeledMultigraph cycle_graph(int n) {
    LabeledMultigraph g;
    g.vertex_count = n;
    g.gen_count = 1;
    for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 0});
    return g;
}

LabeledMultigraph complete_graph(int n) {
    LabeledMultigraph g;
    g.vertex_count = n;
    g.gen_count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, 0});
    return g;
}

std::vector<int> natural(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// brute-force minimum ordering width over all permutations
long long cutwidth_brute(const LabeledMultigraph& g) {
    std::vector<int> perm = natural(g.vertex_count);
    long long best = -1;
    do {
        long long w = ordering_width(g, perm);
        if (best < 0 || w < best) best = w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

LabeledMultigraph random_multigraph(std::mt19937& rng, int max_v) {
    std::uniform_int_distribution<int> nv(2, max_v);
    LabeledMultigraph g;
    g.vertex_count = nv(rng);
    std::uniform_int_distribution<int> ne(0, 3 * g.vertex_count), v(0, g.vertex_count - 1);
    int m = ne(rng);
    for (int i = 0; i < m; ++i) g.edges.push_back({v(rng), v(rng), 0}); // loops allowed
    return g;
}

FiniteAbelianGroup cyclic(long long n) {
    FiniteAbelianGroup a;
    a.invariant_factors = {Int(n)};
    return a;
}

} // namespace

TEST_CASE("cayley graphs from tables") {
    SUBCASE("order-six cyclic group is a hexagon") {
        Presentation p = parse_presentation("gens: a\nrel: aaaaaa\n");
        CosetTable t = todd_coxeter(p, {});
        LabeledMultigraph g = cayley_graph(t);
        CHECK(g.vertex_count == 6);
        CHECK(g.edges.size() == 6);
    }
    SUBCASE("rank-two elementary abelian quotient doubles its square") {
        CosetTable t;
        t.gen_count = 2;
        t.fwd = {{2, 3, 0, 1}, {1, 0, 3, 2}};
        t.bwd = t.fwd;
        LabeledMultigraph g = cayley_graph(t);
        CHECK(g.vertex_count == 4);
        CHECK(g.edges.size() == 8); // one edge per (vertex, generator)
        for (const GraphEdge& e : g.edges) CHECK(e.u != e.v);
    }
    SUBCASE("index one gives a bouquet of loops") {
        LabeledMultigraph g = cayley_graph(trivial_table(3));
        CHECK(g.vertex_count == 1);
        CHECK(g.edges.size() == 3);
        for (const GraphEdge& e : g.edges) CHECK(e.u == e.v);
    }
    SUBCASE("non-normal tables are rejected") {
        Presentation s3 = parse_presentation("gens: a b\nrel: aa\nrel: bbb\nrel: abab\n");
        CosetTable t = todd_coxeter(s3, {s3.word_from_string("a")});
        CHECK_THROWS_AS(cayley_graph(t), NotNormalError);
    }
}

TEST_CASE("ordering width") {
    SUBCASE("hexagon under the natural ordering") {
        CHECK(ordering_width(cycle_graph(6), natural(6)) == 2);
    }
    SUBCASE("profile endpoints vanish") {
        VertexOrdering o = make_ordering(cycle_graph(6), natural(6));
        CHECK(o.cut_profile.front() == 0);
        CHECK(o.cut_profile.back() == 0);
        CHECK(o.width == 2);
    }
    SUBCASE("edgeless graph") {
        LabeledMultigraph g;
        g.vertex_count = 4;
        CHECK(ordering_width(g, natural(4)) == 0);
    }
    SUBCASE("complete graph on four vertices has width 4 under every ordering") {
        LabeledMultigraph k4 = complete_graph(4);
        std::vector<int> perm = natural(4);
        do {
            CHECK(ordering_width(k4, perm) == 4);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    SUBCASE("loops never cross a cut") {
        LabeledMultigraph g;
        g.vertex_count = 2;
        g.edges = {{0, 0, 0}, {1, 1, 0}, {0, 1, 0}};
        CHECK(ordering_width(g, natural(2)) == 1);
    }
    SUBCASE("non-permutations are rejected") {
        CHECK_THROWS_AS(ordering_width(cycle_graph(3), {0, 0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(ordering_width(cycle_graph(3), {0, 1}), std::invalid_argument);
    }
}

TEST_CASE("exact cutwidth") {
    SUBCASE("hexagon") { CHECK(exact_cutwidth(cycle_graph(6)).width == 2); }
    SUBCASE("path") {
        LabeledMultigraph g;
        g.vertex_count = 5;
        for (int i = 0; i + 1 < 5; ++i) g.edges.push_back({i, i + 1, 0});
        CutwidthResult r = exact_cutwidth(g);
        CHECK(r.width == 1);
        CHECK(r.ordering.order == natural(5)); // the sweep along the path is optimal and lex-least
    }
    SUBCASE("complete graph on four vertices") {
        CHECK(exact_cutwidth(complete_graph(4)).width == 4);
        CHECK(cutwidth_brute(complete_graph(4)) == 4);
    }
    SUBCASE("size limit") {
        CHECK_THROWS_AS(exact_cutwidth(cycle_graph(22), 20), ResourceLimitError);
    }
    SUBCASE("dynamic program agrees with brute force on random graphs") {
        std::mt19937 rng(31337);
        for (int it = 0; it < 40; ++it) {
            LabeledMultigraph g = random_multigraph(rng, 6);
            CutwidthResult r = exact_cutwidth(g);
            CHECK(r.width == cutwidth_brute(g));
            CHECK(r.ordering.width == r.width);
        }
    }
}

TEST_CASE("exact cheeger constants") {
    SUBCASE("hexagon: three consecutive vertices are optimal") {
        CHECK(exact_cheeger(cycle_graph(6)) == Rat(2, 3));
    }
    SUBCASE("disconnected graphs have cheeger zero") {
        LabeledMultigraph g;
        g.vertex_count = 2;
        g.edges = {{0, 0, 0}, {1, 1, 0}};
        CHECK(exact_cheeger(g) == 0);
    }
    SUBCASE("complete graph on four vertices") {
        CHECK(exact_cheeger(complete_graph(4)) == 2);
    }
    SUBCASE("width bound dominates the exact constant") {
        std::mt19937 rng(2718);
        for (int it = 0; it < 60; ++it) {
            LabeledMultigraph g = random_multigraph(rng, 8);
            Rat h = exact_cheeger(g);
            VertexOrdering o = make_ordering(g, natural(g.vertex_count));
            CHECK(cheeger_from_width_bound(g, o) >= h);
            CutwidthResult r = exact_cutwidth(g);
            CHECK(cheeger_from_width_bound(g, r.ordering) >= h);
        }
    }
    SUBCASE("hexagon bound is tight") {
        LabeledMultigraph g = cycle_graph(6);
        VertexOrdering o = make_ordering(g, natural(6));
        CHECK(cheeger_from_width_bound(g, o) == Rat(2, 3));
        CHECK(cheeger_from_width_bound(g, o) == exact_cheeger(g));
    }
    SUBCASE("complete-graph bound is tight") {
        LabeledMultigraph g = complete_graph(4);
        CutwidthResult r = exact_cutwidth(g);
        CHECK(cheeger_from_width_bound(g, r.ordering) == 2);
    }
}

TEST_CASE("character width bound") {
    CHECK(character_width_bound(101, 1) == Rat(606, 100));
    CHECK(character_width_bound(2, 5) == 60); // floor(1^(1/5)) = 1
    CHECK_THROWS_AS(character_width_bound(1, 1), std::invalid_argument);
}

TEST_CASE("character ordering") {
    SUBCASE("prime cyclic group of order 101") {
        FiniteAbelianGroup a = cyclic(101);
        CharacterOrderingResult r = character_ordering(a, {{Int(1)}});
        CHECK(!r.degenerate);
        CHECK(r.arc_count == 100);
        CHECK(r.ordering.width == 2); // a cyclic rotation of the natural order
        CHECK(Rat(r.ordering.width) <= r.bound);
    }
    SUBCASE("cyclic group of order 5") {
        FiniteAbelianGroup a = cyclic(5);
        CharacterOrderingResult r = character_ordering(a, {{Int(1)}});
        CHECK(r.ordering.width == 2);
        CHECK(r.phase_count == 5);
    }
    SUBCASE("order-two group: bound slack makes any ordering pass") {
        FiniteAbelianGroup a = cyclic(2);
        CharacterOrderingResult r = character_ordering(a, {{Int(1)}});
        CHECK(r.arc_count == 1);
        CHECK(r.bound == 12);
        CHECK(Rat(r.ordering.width) <= r.bound);
    }
    SUBCASE("bound holds across products of cyclic groups") {
        for (auto shape : std::vector<std::vector<long long>>{
                 {12}, {2, 8}, {3, 9}, {2, 2, 4}, {50}, {7, 7}}) {
            FiniteAbelianGroup a;
            for (long long f : shape) a.invariant_factors.push_back(f);
            std::vector<ElementVector> gens;
            for (size_t i = 0; i < shape.size(); ++i) {
                ElementVector e(shape.size(), Int(0));
                e[i] = 1;
                gens.push_back(e);
            }
            CharacterOrderingResult r = character_ordering(a, gens);
            CHECK(Rat(r.ordering.width) <= r.bound);
            CHECK(r.bound == character_width_bound(a.order(), static_cast<int>(gens.size())));
        }
    }
}

TEST_CASE("composite ordering") {
    Presentation p = parse_presentation("gens: a b\n");
    Chain chain = build_chain(p, 3, ExponentRule::constant(2));
    // X(G/J;S) for J the squares-and-commutators kernel, block structure
    // over H = G
    LabeledMultigraph big = cayley_graph(chain.levels[1].table);

    SUBCASE("H = G reduces to a relabelling of the inner ordering") {
        FiniteAbelianGroup a = *chain.levels[0].quotient;
        std::vector<ElementVector> images{chain.levels[0].labels[0], chain.levels[0].labels[1]};
        LabeledMultigraph inner_graph = cayley_graph_abelian(a, images);
        VertexOrdering inner = exact_cutwidth(inner_graph).ordering;
        VertexOrdering o = composite_ordering(big, 1, inner);
        CHECK(o.width <= inner.width + 2 * 2 * 1);
        CHECK(o.width == inner.width); // identical graphs here
    }
    SUBCASE("J = H: one tree, transversal order, width at most 2|S|[G:H]") {
        // kernel structure with a trivial inner quotient
        LabeledMultigraph self = cayley_graph(chain.levels[1].table);
        VertexOrdering point = make_ordering(cayley_graph_abelian(FiniteAbelianGroup{}, {}),
                                             std::vector<int>{0});
        VertexOrdering o = composite_ordering(self, self.vertex_count, point);
        CHECK(o.width <= 2 * 2 * self.vertex_count);
    }
    SUBCASE("deeper level: block ordering respects the bound") {
        Presentation f2 = parse_presentation("gens: a b\n");
        Chain deep = build_chain(f2, 4, ExponentRule::derived_power());
        // J = level 4 of index 972 over H = level 3 of index 4
        LabeledMultigraph x = cayley_graph(deep.levels[3].table);
        FiniteAbelianGroup a = *deep.levels[2].quotient; // (Z/3)^5
        SchreierData sd = schreier_data(deep.levels[2].table);
        std::vector<ElementVector> images;
        for (int i = 0; i < 4; ++i)
            for (int g = 0; g < 2; ++g)
                if (!sd.is_tree_pair(i, g))
                    images.push_back(deep.levels[2].labels[static_cast<size_t>(i) * 2 + g]);
        CharacterOrderingResult inner = character_ordering(a, images);
        VertexOrdering o = composite_ordering(x, 4, inner.ordering);
        CHECK(o.width <= inner.ordering.width + 2 * 2 * 4);
    }
    SUBCASE("inconsistent block data is rejected") {
        VertexOrdering inner = make_ordering(cycle_graph(3), natural(3));
        CHECK_THROWS_AS(composite_ordering(big, 3, inner), std::invalid_argument);
    }
}

TEST_CASE("constructed orderings dominate the exact oracle") {
    std::mt19937 rng(161803);
    for (int it = 0; it < 50; ++it) {
        LabeledMultigraph g = random_multigraph(rng, 8);
        long long w = exact_cutwidth(g).width;
        std::vector<int> perm = natural(g.vertex_count);
        CHECK(ordering_width(g, perm) >= w);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(ordering_width(g, perm) >= w);
        }
    }
}

TEST_CASE("dot export") {
    LabeledMultigraph g = cycle_graph(3);
    std::string dot = graph_dot(g, {'a'});
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0 -> 1 [label=\"a\"];") != std::string::npos);
}
