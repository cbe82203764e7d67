#pragma once

#include "largeness/abelian_group.hpp"
#include "largeness/chain.hpp"
#include "largeness/graph.hpp"
#include "largeness/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace largeness {

/// Step of a face boundary walk: a directed traversal of a 1-cell.
struct FaceStep {
    int edge = 0;     // edge id = vertex * gen_count + gen
    bool forward = true;
    int from = 0;     // corner before the step
    int to = 0;       // corner after the step
};

struct Face {
    int start_coset = 0;
    int relator = 0;
    std::vector<FaceStep> walk; // cyclic; empty for relators that reduce to nothing
};

/// Finite 2-complex whose 1-skeleton is the Cayley graph of a quotient:
/// one vertex per coset, one directed edge per (coset, generator), one face
/// per (coset, relator) whose boundary spells the full relator.
struct TwoComplex {
    int vertex_count = 0;
    int gen_count = 0;
    CosetTable table; // supplies the edge endpoints
    std::vector<Word> relators;
    std::vector<Face> faces;

    int edge_count() const { return vertex_count * gen_count; }
    int edge_from(int e) const { return e / gen_count; }
    int edge_gen(int e) const { return e % gen_count; }
    int edge_to(int e) const { return table.fwd[e % gen_count][e / gen_count]; }
};

/// One-vertex complex of a presentation: a bouquet of |S| circles with one
/// face per relator.
TwoComplex presentation_complex(const Presentation& p);

/// Covering complex corresponding to a complete normal coset table.
TwoComplex cover_complex(const Presentation& p, const CosetTable& t);

/// Edge labelling of a cover in a finite abelian quotient of its fundamental
/// group; the label of each face boundary must sum to zero.
struct QuotientLabeling {
    FiniteAbelianGroup group;
    std::vector<ElementVector> labels; // per edge id

    static QuotientLabeling trivial(const TwoComplex& cover);
};

QuotientLabeling make_labeling(const TwoComplex& cover, const FiniteAbelianGroup& a,
                               const std::vector<ElementVector>& pair_labels);

struct ComponentWeight {
    FiniteAbelianGroup subgroup; // image of the component's cycles in the quotient
    int weight() const { return subgroup.d(); }
    Int image_order() const { return subgroup.order(); }
};

struct Chord {
    int face = 0;
    int pos_from = 0; // walk position of the crossing that opens the cut-off arc
    int pos_to = 0;   // walk position of the crossing that closes it
    int zc_from = 0;  // zero-cell ids (indices into boundary_edges)
    int zc_to = 0;
    ElementVector value; // label sum over the arc, anchored at the low-side endpoints
};

/// The decomposition of a cover induced by a vertex subset: boundary edges
/// carry one zero-cell each, faces contribute chords cutting off their
/// high-side boundary arcs, and the two sides split into connected pieces.
struct SweepDecomposition {
    int n = 0; // prefix length when built from an ordering; -1 for a raw subset
    std::vector<char> in_low;       // per vertex: true = low side (A)
    std::vector<int> boundary_edges; // sorted edge ids; zero-cell i sits on boundary_edges[i]
    std::vector<Chord> chords;       // the one-cells

    std::vector<int> low_comp;       // per vertex, component id or -1
    std::vector<int> high_comp;
    int low_comp_count = 0;
    int high_comp_count = 0;

    std::vector<int> zc_comp; // per zero-cell: intersection component id
    int intersection_comp_count = 0;

    std::vector<ComponentWeight> low_weights;
    std::vector<ComponentWeight> high_weights;
    std::vector<ComponentWeight> intersection_weights;

    long long zero_cell_count() const { return static_cast<long long>(boundary_edges.size()); }
    long long one_cell_count() const { return static_cast<long long>(chords.size()); }
    Int total_low_weight() const;
    Int total_high_weight() const;
};

/// Decomposition at a vertex subset (the low side).  Requires at least one
/// vertex on each side unless allow_degenerate is set.
SweepDecomposition sweep_subset(const TwoComplex& cover, const QuotientLabeling& ql,
                                const std::vector<char>& in_low, bool allow_degenerate = false);

/// Decomposition after the first n vertices of an ordering, 1 <= n <= V-1.
SweepDecomposition sweep(const TwoComplex& cover, const QuotientLabeling& ql,
                         const VertexOrdering& o, int n);

/// The bipartite incidence graph: one vertex per side component (weights
/// attached), one edge per intersection component.
struct DecompositionGraph {
    struct Node {
        bool low = true;
        int comp = 0;
        Int weight;
        Int g_value; // weight minus total incident edge weight
    };
    struct Edge {
        int low_node = 0;
        int high_node = 0;
        int intersection_comp = 0;
        Int weight;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    long long chi() const {
        return static_cast<long long>(nodes.size()) - static_cast<long long>(edges.size());
    }
};

/// Builds the graph and asserts the generation inequality
/// d(J/K) <= wt(low) + wt(high) + (number of intersection components).
DecompositionGraph build_decomposition_graph(const TwoComplex& cover, const QuotientLabeling& ql,
                                             const SweepDecomposition& d);

struct LevelScanRow {
    int n = 0;
    long long boundary = 0;
    long long one_cells = 0;
    long long intersection_components = 0;
    Int wt_low, wt_high;
    long long chi = 0; // of the decomposition graph
};

/// Sweeps every level of the ordering; checks the step bound
/// |wt(A_{n+1}) - wt(A_n)| <= 2|S| + L^2 across consecutive levels
/// (including the empty and full endpoints).
std::vector<LevelScanRow> scan_levels(const TwoComplex& cover, const QuotientLabeling& ql,
                                      const VertexOrdering& o);

/// First level n with both side weights >= threshold * [G:J] / 4, if any.
std::optional<int> find_balanced_level(const TwoComplex& cover, const QuotientLabeling& ql,
                                       const VertexOrdering& o, const Rat& ell);

struct LiftResult {
    DecompositionGraph lifted;
    long long chi = 0;
    std::vector<int> node_image; // lifted node -> base node
    std::vector<int> edge_image; // lifted edge -> base edge
    bool connected = true;
};

/// Pulls the decomposition back to the cover of the kernel table (cosets are
/// (j, a) pairs over the base cover's vertices), recomputes components by
/// flood fill, and verifies the fibre-count formula
/// |fibre| = |A| / |image subgroup| for every node and edge.
LiftResult lift_decomposition(const TwoComplex& cover, const QuotientLabeling& ql,
                              const SweepDecomposition& d, const DecompositionGraph& y,
                              const Presentation& p, const CosetTable& kernel_table);

struct WitnessLevelReport {
    LevelScanRow row;
    long long lifted_chi = 0;
};

struct WitnessReport {
    bool success = false;
    bool resource_limited = false;
    std::string note;
    std::vector<WitnessLevelReport> levels;
    int chosen_n = -1;
    long long chi = 0;          // of the lifted graph at the chosen level
    Int certified_free_rank;    // 1 - chi when successful
    std::string y_dot;          // decomposition graph at the chosen level
    std::string lift_dot;
    std::string ordering_kind;  // "exact" or "composite"
    std::vector<int> ordering;
    std::string valence_diagnostic;
};

struct WitnessInstance {
    Presentation p;
    CosetTable j_table;                     // J, built as a kernel over H
    int h_index = 1;                        // [G:H]
    FiniteAbelianGroup h_quotient;          // H/J
    std::vector<ElementVector> h_sigma_images; // Schreier generator images in H/J
    FiniteAbelianGroup a;                   // J/K
    std::vector<ElementVector> j_pair_labels;  // per (coset, gen) of the J cover
    std::optional<CosetTable> k_table;      // absent when over the resource limit
};

/// End-to-end pipeline: build the J cover, choose an ordering (exact
/// cutwidth when small, composite otherwise), scan all levels, lift the
/// decomposition at each, and report the most negative Euler characteristic.
WitnessReport largeness_witness(const WitnessInstance& inst, int exact_limit = 20);

/// Instance assembled from three consecutive chain levels H >= J >= K,
/// h_level being H's position (1-based).
WitnessInstance witness_instance_from_chain(const Chain& chain, int h_level);

std::string decomposition_dot(const DecompositionGraph& y);

} // namespace largeness
