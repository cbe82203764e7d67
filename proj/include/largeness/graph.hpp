#pragma once

#include "largeness/abelian_group.hpp"
#include "largeness/coset_table.hpp"

#include <string>
#include <vector>

namespace largeness {

struct NotNormalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphEdge {
    int u = 0;
    int v = 0;
    int label = 0;
};

/// Finite labelled multigraph.  Cayley graphs carry one edge per
/// (vertex, generator) pair, loops included; ad-hoc multigraphs are allowed
/// for oracle testing.
struct LabeledMultigraph {
    int vertex_count = 0;
    int gen_count = 0;
    std::vector<GraphEdge> edges;
};

/// One edge (i, i·s, s) per coset and generator.  Requires a normal table.
LabeledMultigraph cayley_graph(const CosetTable& t);

/// Cayley graph of a finite abelian group on the given generator images;
/// vertex v = rank of the element in lexicographic order.
LabeledMultigraph cayley_graph_abelian(const FiniteAbelianGroup& a,
                                       const std::vector<ElementVector>& gens,
                                       long long limit = 1 << 20);

struct VertexOrdering {
    std::vector<int> order;             // order[pos] = vertex
    std::vector<long long> cut_profile; // |boundary of the first n vertices|, n = 0..V
    long long width = 0;
};

/// Ordering with its prefix-cut profile; loops never cross a cut.
VertexOrdering make_ordering(const LabeledMultigraph& g, std::vector<int> perm);

long long ordering_width(const LabeledMultigraph& g, const std::vector<int>& perm);

struct CutwidthResult {
    long long width = 0;
    VertexOrdering ordering; // lexicographically least optimal ordering
};

/// Exact minimum ordering width by dynamic programming over vertex subsets.
CutwidthResult exact_cutwidth(const LabeledMultigraph& g, int vertex_limit = 20);

/// Exact Cheeger constant min |dA|/|A| over 0 < |A| <= |V|/2, by subset
/// enumeration.
Rat exact_cheeger(const LabeledMultigraph& g, int vertex_limit = 20);

/// width(o) / floor(|V|/2); an upper bound for the Cheeger constant.
Rat cheeger_from_width_bound(const LabeledMultigraph& g, const VertexOrdering& o);

/// 6 s A / floor((A-1)^(1/s)), exact.  Throws when the floor is zero.
Rat character_width_bound(const Int& group_order, int sigma_size);

struct CharacterOrderingResult {
    VertexOrdering ordering;
    bool degenerate = false; // arc count was zero; natural ordering returned
    Int arc_count = 0;       // c
    Character separator;     // the nontrivial character from the pigeonhole
    Int phase_count = 0;     // order of the separator
    Rat bound;               // 6 |Sigma| |A| / c
};

/// Orders the elements of a finite abelian group by the phase classes of a
/// character found by pigeonholing all characters into argument boxes; the
/// resulting width on the Cayley graph is checked against the bound.
CharacterOrderingResult character_ordering(const FiniteAbelianGroup& a,
                                           const std::vector<ElementVector>& sigma_images,
                                           long long limit = 1 << 20);

/// Ordering of a kernel-structured Cayley graph (vertices are pairs
/// (block, inner) numbered block*inner_count + inner): inner vertices in the
/// supplied order, the block copies of each consecutively.  The width is
/// checked against inner width + 2 |S| block_count.
VertexOrdering composite_ordering(const LabeledMultigraph& big, int block_count,
                                  const VertexOrdering& inner);

std::string graph_dot(const LabeledMultigraph& g, const std::vector<char>& gen_names);

} // namespace largeness
