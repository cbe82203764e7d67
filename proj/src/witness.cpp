#include "largeness/witness.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

namespace largeness {

TwoComplex presentation_complex(const Presentation& p) {
    return cover_complex(p, trivial_table(p.gen_count()));
}

TwoComplex cover_complex(const Presentation& p, const CosetTable& t) {
    TwoComplex c;
    c.vertex_count = t.index();
    c.gen_count = t.gen_count;
    c.table = t;
    c.relators = p.relators;
    c.faces.reserve(static_cast<size_t>(p.relator_count()) * t.index());
    for (int r = 0; r < p.relator_count(); ++r) {
        const Word& w = p.relators[static_cast<size_t>(r)];
        for (int i = 0; i < t.index(); ++i) {
            Face f;
            f.start_coset = i;
            f.relator = r;
            int cur = i;
            for (int l : w) {
                FaceStep step;
                step.from = cur;
                int g = letter_gen(l);
                if (letter_positive(l)) {
                    step.edge = cur * c.gen_count + g;
                    step.forward = true;
                    cur = t.fwd[g][cur];
                } else {
                    int prev = t.bwd[g][cur];
                    step.edge = prev * c.gen_count + g;
                    step.forward = false;
                    cur = prev;
                }
                step.to = cur;
                f.walk.push_back(step);
            }
            if (cur != i) throw std::logic_error("relator lift did not close");
            c.faces.push_back(std::move(f));
        }
    }
    return c;
}

QuotientLabeling QuotientLabeling::trivial(const TwoComplex& cover) {
    QuotientLabeling ql;
    ql.labels.assign(static_cast<size_t>(cover.edge_count()), ElementVector{});
    return ql;
}

QuotientLabeling make_labeling(const TwoComplex& cover, const FiniteAbelianGroup& a,
                               const std::vector<ElementVector>& pair_labels) {
    if (static_cast<int>(pair_labels.size()) != cover.edge_count())
        throw std::invalid_argument("make_labeling: one label per (coset, generator) required");
    QuotientLabeling ql;
    ql.group = a;
    ql.labels = pair_labels;
    // every face boundary must sum to zero: relator lifts lie in the kernel
    for (const Face& f : cover.faces) {
        ElementVector sum(static_cast<size_t>(a.torsion_rank()), Int(0));
        for (const FaceStep& s : f.walk) {
            const ElementVector& l = ql.labels[static_cast<size_t>(s.edge)];
            for (size_t j = 0; j < sum.size(); ++j) sum[j] += s.forward ? l[j] : -l[j];
        }
        if (!is_zero_element(reduce_element(a, std::move(sum))))
            throw InconsistentDataError("face boundary has nonzero label sum");
    }
    return ql;
}

Int SweepDecomposition::total_low_weight() const {
    Int s = 0;
    for (const ComponentWeight& w : low_weights) s += w.weight();
    return s;
}

Int SweepDecomposition::total_high_weight() const {
    Int s = 0;
    for (const ComponentWeight& w : high_weights) s += w.weight();
    return s;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
    }
};

using PotentialEdge = std::tuple<int, int, ElementVector>; // phi(y) = phi(x) + value

struct WeightedComponents {
    std::vector<int> comp; // per node; -1 inactive
    int count = 0;
    std::vector<ComponentWeight> weights;
};

// Connected components of the active nodes under the given edges, with the
// subgroup of the quotient generated by the fundamental-cycle labels of each
// component.
WeightedComponents weighted_components(int node_count, const std::vector<char>& active,
                                       const std::vector<PotentialEdge>& edges,
                                       const FiniteAbelianGroup& a) {
    WeightedComponents out;
    out.comp.assign(static_cast<size_t>(node_count), -1);

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(node_count));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto& [x, y, val] = edges[static_cast<size_t>(e)];
        adj[static_cast<size_t>(x)].emplace_back(e, +1);
        if (y != x) adj[static_cast<size_t>(y)].emplace_back(e, -1);
    }

    size_t k = static_cast<size_t>(a.torsion_rank());
    std::vector<ElementVector> phi(static_cast<size_t>(node_count));
    std::vector<char> tree(edges.size(), 0);
    std::vector<std::vector<int>> comp_nodes;

    for (int root = 0; root < node_count; ++root) {
        if (!active[static_cast<size_t>(root)] || out.comp[static_cast<size_t>(root)] >= 0) continue;
        int cid = out.count++;
        comp_nodes.emplace_back();
        std::deque<int> q{root};
        out.comp[static_cast<size_t>(root)] = cid;
        phi[static_cast<size_t>(root)].assign(k, Int(0));
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp_nodes[static_cast<size_t>(cid)].push_back(u);
            for (auto [e, dir] : adj[static_cast<size_t>(u)]) {
                const auto& [x, y, val] = edges[static_cast<size_t>(e)];
                int other = dir > 0 ? y : x;
                if (out.comp[static_cast<size_t>(other)] >= 0) continue;
                out.comp[static_cast<size_t>(other)] = cid;
                ElementVector pv = phi[static_cast<size_t>(u)];
                for (size_t j = 0; j < k; ++j) pv[j] += dir > 0 ? val[j] : -val[j];
                phi[static_cast<size_t>(other)] = reduce_element(a, std::move(pv));
                tree[static_cast<size_t>(e)] = 1;
                q.push_back(other);
            }
        }
    }

    std::vector<std::vector<ElementVector>> gens(static_cast<size_t>(out.count));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (tree[static_cast<size_t>(e)]) continue;
        const auto& [x, y, val] = edges[static_cast<size_t>(e)];
        int cid = out.comp[static_cast<size_t>(x)];
        ElementVector g = phi[static_cast<size_t>(x)];
        for (size_t j = 0; j < k; ++j) g[j] += val[j] - phi[static_cast<size_t>(y)][j];
        gens[static_cast<size_t>(cid)].push_back(reduce_element(a, std::move(g)));
    }
    out.weights.reserve(static_cast<size_t>(out.count));
    for (int c = 0; c < out.count; ++c)
        out.weights.push_back({subgroup_generated(a, gens[static_cast<size_t>(c)])});
    return out;
}

} // namespace

SweepDecomposition sweep_subset(const TwoComplex& cover, const QuotientLabeling& ql,
                                const std::vector<char>& in_low, bool allow_degenerate) {
    int nv = cover.vertex_count, k = cover.gen_count;
    if (static_cast<int>(in_low.size()) != nv)
        throw std::invalid_argument("sweep_subset: side vector size mismatch");
    int low_count = 0;
    for (char c : in_low) low_count += c ? 1 : 0;
    if (!allow_degenerate && (low_count == 0 || low_count == nv))
        throw std::invalid_argument("sweep_subset: one side is empty");

    SweepDecomposition d;
    d.n = -1;
    d.in_low = in_low;

    std::vector<int> zc_of_edge(static_cast<size_t>(cover.edge_count()), -1);
    for (int e = 0; e < cover.edge_count(); ++e) {
        int u = cover.edge_from(e), v = cover.edge_to(e);
        if (in_low[static_cast<size_t>(u)] != in_low[static_cast<size_t>(v)]) {
            zc_of_edge[static_cast<size_t>(e)] = static_cast<int>(d.boundary_edges.size());
            d.boundary_edges.push_back(e);
        }
    }

    // side-change positions of each face boundary pair up into chords cutting
    // off the high-side arcs; the chord value is the label sum over the arc,
    // crossing edges included, so it is anchored at the low-side endpoints
    auto signed_label = [&](const FaceStep& s) {
        ElementVector l = ql.labels[static_cast<size_t>(s.edge)];
        if (!s.forward)
            for (Int& x : l) x = -x;
        return l;
    };
    for (int fi = 0; fi < static_cast<int>(cover.faces.size()); ++fi) {
        const Face& f = cover.faces[static_cast<size_t>(fi)];
        int m = static_cast<int>(f.walk.size());
        std::vector<int> crossings;
        for (int p = 0; p < m; ++p)
            if (zc_of_edge[static_cast<size_t>(f.walk[static_cast<size_t>(p)].edge)] >= 0)
                crossings.push_back(p);
        if (crossings.empty()) continue;
        if (crossings.size() % 2 != 0)
            throw std::logic_error("odd number of side changes on a face boundary");
        int sz = static_cast<int>(crossings.size());
        for (int j = 0; j < sz; ++j) {
            int k1 = crossings[static_cast<size_t>(j)];
            int k2 = crossings[static_cast<size_t>((j + 1) % sz)];
            // arc between the two crossings lies on the side of the corner
            // right after the first crossing
            bool arc_low = in_low[static_cast<size_t>(f.walk[static_cast<size_t>(k1)].to)] != 0;
            if (arc_low) continue;
            Chord ch;
            ch.face = fi;
            ch.pos_from = k1;
            ch.pos_to = k2;
            ch.zc_from = zc_of_edge[static_cast<size_t>(f.walk[static_cast<size_t>(k1)].edge)];
            ch.zc_to = zc_of_edge[static_cast<size_t>(f.walk[static_cast<size_t>(k2)].edge)];
            ElementVector val(static_cast<size_t>(ql.group.torsion_rank()), Int(0));
            for (int p = k1;; p = (p + 1) % m) {
                ElementVector sl = signed_label(f.walk[static_cast<size_t>(p)]);
                for (size_t t = 0; t < val.size(); ++t) val[t] += sl[t];
                if (p == k2) break;
            }
            ch.value = reduce_element(ql.group, std::move(val));
            d.chords.push_back(std::move(ch));
        }
    }

    // low side: induced edges plus the chords, anchored at low endpoints
    std::vector<char> low_active(static_cast<size_t>(nv)), high_active(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        low_active[static_cast<size_t>(v)] = in_low[static_cast<size_t>(v)];
        high_active[static_cast<size_t>(v)] = !in_low[static_cast<size_t>(v)];
    }
    std::vector<PotentialEdge> low_edges, high_edges;
    for (int e = 0; e < cover.edge_count(); ++e) {
        if (zc_of_edge[static_cast<size_t>(e)] >= 0) continue;
        int u = cover.edge_from(e), v = cover.edge_to(e);
        auto& bucket = in_low[static_cast<size_t>(u)] ? low_edges : high_edges;
        bucket.emplace_back(u, v, ql.labels[static_cast<size_t>(e)]);
    }
    for (const Chord& ch : d.chords) {
        const Face& f = cover.faces[static_cast<size_t>(ch.face)];
        int u = f.walk[static_cast<size_t>(ch.pos_from)].from; // low endpoint entering the arc
        int v = f.walk[static_cast<size_t>(ch.pos_to)].to;     // low endpoint leaving it
        low_edges.emplace_back(u, v, ch.value);
    }

    WeightedComponents low = weighted_components(nv, low_active, low_edges, ql.group);
    WeightedComponents high = weighted_components(nv, high_active, high_edges, ql.group);
    d.low_comp = std::move(low.comp);
    d.high_comp = std::move(high.comp);
    d.low_comp_count = low.count;
    d.high_comp_count = high.count;
    d.low_weights = std::move(low.weights);
    d.high_weights = std::move(high.weights);

    // intersection 1-complex: zero cells joined by chords; chord values are
    // anchored at the low endpoints of the zero cells, so they compose
    int zc = static_cast<int>(d.boundary_edges.size());
    std::vector<char> zc_active(static_cast<size_t>(zc), 1);
    std::vector<PotentialEdge> zc_edges;
    for (const Chord& ch : d.chords) zc_edges.emplace_back(ch.zc_from, ch.zc_to, ch.value);
    WeightedComponents inter = weighted_components(zc, zc_active, zc_edges, ql.group);
    d.zc_comp = std::move(inter.comp);
    d.intersection_comp_count = inter.count;
    d.intersection_weights = std::move(inter.weights);

    // counting invariants that hold by construction
    long long l_total = 0;
    for (const Word& r : cover.relators) l_total += static_cast<long long>(r.size());
    if (2 * d.one_cell_count() > d.zero_cell_count() * l_total)
        throw std::logic_error("one-cell count exceeded |boundary|*L/2");
    return d;
}

SweepDecomposition sweep(const TwoComplex& cover, const QuotientLabeling& ql,
                         const VertexOrdering& o, int n) {
    if (n < 1 || n > cover.vertex_count - 1)
        throw std::invalid_argument("sweep: level out of range");
    std::vector<char> in_low(static_cast<size_t>(cover.vertex_count), 0);
    for (int p = 0; p < n; ++p) in_low[static_cast<size_t>(o.order[static_cast<size_t>(p)])] = 1;
    SweepDecomposition d = sweep_subset(cover, ql, in_low);
    d.n = n;
    return d;
}

DecompositionGraph build_decomposition_graph(const TwoComplex& cover, const QuotientLabeling& ql,
                                             const SweepDecomposition& d) {
    DecompositionGraph y;
    for (int c = 0; c < d.low_comp_count; ++c)
        y.nodes.push_back({true, c, Int(d.low_weights[static_cast<size_t>(c)].weight()), 0});
    for (int c = 0; c < d.high_comp_count; ++c)
        y.nodes.push_back({false, c, Int(d.high_weights[static_cast<size_t>(c)].weight()), 0});

    std::vector<int> low_of(static_cast<size_t>(d.intersection_comp_count), -1);
    std::vector<int> high_of(static_cast<size_t>(d.intersection_comp_count), -1);
    for (int z = 0; z < static_cast<int>(d.boundary_edges.size()); ++z) {
        int e = d.boundary_edges[static_cast<size_t>(z)];
        int u = cover.edge_from(e), v = cover.edge_to(e);
        if (!d.in_low[static_cast<size_t>(u)]) std::swap(u, v);
        int comp = d.zc_comp[static_cast<size_t>(z)];
        int lc = d.low_comp[static_cast<size_t>(u)], hc = d.high_comp[static_cast<size_t>(v)];
        if (low_of[static_cast<size_t>(comp)] < 0) {
            low_of[static_cast<size_t>(comp)] = lc;
            high_of[static_cast<size_t>(comp)] = hc;
        } else if (low_of[static_cast<size_t>(comp)] != lc || high_of[static_cast<size_t>(comp)] != hc) {
            throw std::logic_error("intersection component touches two side components");
        }
    }
    for (int c = 0; c < d.intersection_comp_count; ++c) {
        DecompositionGraph::Edge e;
        e.low_node = low_of[static_cast<size_t>(c)];
        e.high_node = d.low_comp_count + high_of[static_cast<size_t>(c)];
        e.intersection_comp = c;
        e.weight = d.intersection_weights[static_cast<size_t>(c)].weight();
        y.edges.push_back(e);
    }
    for (DecompositionGraph::Node& nd : y.nodes) nd.g_value = nd.weight;
    for (const DecompositionGraph::Edge& e : y.edges) {
        y.nodes[static_cast<size_t>(e.low_node)].g_value -= e.weight;
        y.nodes[static_cast<size_t>(e.high_node)].g_value -= e.weight;
    }

    // generation inequality: the quotient is generated by the side pieces
    // plus one element per intersection component
    Int rhs = d.total_low_weight() + d.total_high_weight() + d.intersection_comp_count;
    if (Int(ql.group.d()) > rhs)
        throw std::logic_error("generation inequality violated");
    return y;
}

std::vector<LevelScanRow> scan_levels(const TwoComplex& cover, const QuotientLabeling& ql,
                                      const VertexOrdering& o) {
    long long l_total = 0;
    for (const Word& r : cover.relators) l_total += static_cast<long long>(r.size());
    Int step_bound = Int(2) * cover.gen_count + Int(l_total) * l_total;

    std::vector<LevelScanRow> rows;
    Int prev_wt = 0; // empty low side
    for (int n = 1; n <= cover.vertex_count - 1; ++n) {
        SweepDecomposition d = sweep(cover, ql, o, n);
        DecompositionGraph y = build_decomposition_graph(cover, ql, d);
        LevelScanRow row;
        row.n = n;
        row.boundary = d.zero_cell_count();
        row.one_cells = d.one_cell_count();
        row.intersection_components = d.intersection_comp_count;
        row.wt_low = d.total_low_weight();
        row.wt_high = d.total_high_weight();
        row.chi = y.chi();
        if (abs(row.wt_low - prev_wt) > step_bound)
            throw std::logic_error("weight step bound violated at level " + std::to_string(n));
        prev_wt = row.wt_low;
        rows.push_back(std::move(row));
    }
    if (abs(Int(ql.group.d()) - prev_wt) > step_bound)
        throw std::logic_error("weight step bound violated at the full level");
    return rows;
}

std::optional<int> find_balanced_level(const TwoComplex& cover, const QuotientLabeling& ql,
                                       const VertexOrdering& o, const Rat& ell) {
    if (ell <= 0) throw std::invalid_argument("find_balanced_level: ell must be positive");
    Rat threshold = ell * cover.vertex_count / 4;
    for (const LevelScanRow& row : scan_levels(cover, ql, o))
        if (Rat(row.wt_low) >= threshold && Rat(row.wt_high) >= threshold) return row.n;
    return std::nullopt;
}

LiftResult lift_decomposition(const TwoComplex& cover, const QuotientLabeling& ql,
                              const SweepDecomposition& d, const DecompositionGraph& y,
                              const Presentation& p, const CosetTable& kernel_table) {
    Int deg_big = ql.group.order();
    long long m = static_cast<long long>(deg_big);
    long long expect = static_cast<long long>(cover.vertex_count) * m;
    if (kernel_table.index() != expect)
        throw std::invalid_argument("lift_decomposition: kernel table has the wrong index");

    TwoComplex up = cover_complex(p, kernel_table);
    QuotientLabeling trivial = QuotientLabeling::trivial(up);
    std::vector<char> in_low_up(static_cast<size_t>(up.vertex_count));
    for (int v = 0; v < up.vertex_count; ++v)
        in_low_up[static_cast<size_t>(v)] = d.in_low[static_cast<size_t>(v / m)];
    SweepDecomposition du = sweep_subset(up, trivial, in_low_up);

    LiftResult res;
    res.lifted = build_decomposition_graph(up, trivial, du);
    res.chi = res.lifted.chi();

    // node images through the covering projection
    std::vector<int> low_rep(static_cast<size_t>(du.low_comp_count), -1);
    std::vector<int> high_rep(static_cast<size_t>(du.high_comp_count), -1);
    for (int v = 0; v < up.vertex_count; ++v) {
        if (du.low_comp[static_cast<size_t>(v)] >= 0 &&
            low_rep[static_cast<size_t>(du.low_comp[static_cast<size_t>(v)])] < 0)
            low_rep[static_cast<size_t>(du.low_comp[static_cast<size_t>(v)])] = v;
        if (du.high_comp[static_cast<size_t>(v)] >= 0 &&
            high_rep[static_cast<size_t>(du.high_comp[static_cast<size_t>(v)])] < 0)
            high_rep[static_cast<size_t>(du.high_comp[static_cast<size_t>(v)])] = v;
    }
    res.node_image.assign(res.lifted.nodes.size(), -1);
    for (size_t nd = 0; nd < res.lifted.nodes.size(); ++nd) {
        const auto& node = res.lifted.nodes[nd];
        int rep = node.low ? low_rep[static_cast<size_t>(node.comp)]
                           : high_rep[static_cast<size_t>(node.comp)];
        int base_v = rep / static_cast<int>(m);
        res.node_image[nd] = node.low
                                 ? d.low_comp[static_cast<size_t>(base_v)]
                                 : d.low_comp_count + d.high_comp[static_cast<size_t>(base_v)];
    }

    // edge images: project a representative zero cell
    std::vector<int> zc_rep(static_cast<size_t>(du.intersection_comp_count), -1);
    for (int z = 0; z < static_cast<int>(du.boundary_edges.size()); ++z)
        if (zc_rep[static_cast<size_t>(du.zc_comp[static_cast<size_t>(z)])] < 0)
            zc_rep[static_cast<size_t>(du.zc_comp[static_cast<size_t>(z)])] = z;
    auto base_zc = [&](int up_edge) {
        int uv = up_edge / up.gen_count, g = up_edge % up.gen_count;
        int base_edge = (uv / static_cast<int>(m)) * cover.gen_count + g;
        auto it = std::lower_bound(d.boundary_edges.begin(), d.boundary_edges.end(), base_edge);
        if (it == d.boundary_edges.end() || *it != base_edge)
            throw std::logic_error("lifted boundary edge does not project to a boundary edge");
        return static_cast<int>(it - d.boundary_edges.begin());
    };
    res.edge_image.assign(res.lifted.edges.size(), -1);
    for (size_t e = 0; e < res.lifted.edges.size(); ++e) {
        int comp = res.lifted.edges[e].intersection_comp;
        int z = zc_rep[static_cast<size_t>(comp)];
        res.edge_image[e] =
            d.zc_comp[static_cast<size_t>(base_zc(du.boundary_edges[static_cast<size_t>(z)]))];
    }

    // fibre counts: each base piece lifts to |A| / |image| copies
    std::vector<long long> node_fibre(y.nodes.size(), 0), edge_fibre(y.edges.size(), 0);
    for (int img : res.node_image) node_fibre[static_cast<size_t>(img)] += 1;
    for (int img : res.edge_image) edge_fibre[static_cast<size_t>(img)] += 1;
    Int chi_by_formula = 0;
    for (size_t nd = 0; nd < y.nodes.size(); ++nd) {
        const auto& node = y.nodes[nd];
        const ComponentWeight& w = node.low ? d.low_weights[static_cast<size_t>(node.comp)]
                                            : d.high_weights[static_cast<size_t>(node.comp)];
        Int ord = w.image_order();
        if (deg_big % ord != 0) throw std::logic_error("image order does not divide the degree");
        if (Int(node_fibre[nd]) != deg_big / ord)
            throw std::logic_error("node fibre count does not match the image index");
        chi_by_formula += deg_big / ord;
    }
    for (size_t e = 0; e < y.edges.size(); ++e) {
        Int ord = d.intersection_weights[static_cast<size_t>(y.edges[e].intersection_comp)]
                      .image_order();
        if (deg_big % ord != 0) throw std::logic_error("image order does not divide the degree");
        if (Int(edge_fibre[e]) != deg_big / ord)
            throw std::logic_error("edge fibre count does not match the image index");
        chi_by_formula -= deg_big / ord;
    }
    if (chi_by_formula != res.chi)
        throw std::logic_error("Euler characteristic mismatch between count and formula");

    Dsu dsu(static_cast<int>(res.lifted.nodes.size()));
    for (const auto& e : res.lifted.edges) dsu.unite(e.low_node, e.high_node);
    int comps = 0;
    for (int i = 0; i < static_cast<int>(res.lifted.nodes.size()); ++i)
        if (dsu.find(i) == i) ++comps;
    res.connected = comps == 1;
    return res;
}

std::string decomposition_dot(const DecompositionGraph& y) {
    std::ostringstream out;
    out << "graph decomposition {\n";
    for (size_t i = 0; i < y.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << (y.nodes[i].low ? "A" : "B") << y.nodes[i].comp
            << " wt=" << y.nodes[i].weight.str() << "\"];\n";
    for (const auto& e : y.edges)
        out << "  n" << e.low_node << " -- n" << e.high_node << " [label=\"wt="
            << e.weight.str() << "\"];\n";
    out << "}\n";
    return out.str();
}

WitnessInstance witness_instance_from_chain(const Chain& chain, int h_level) {
    if (h_level < 1 || h_level + 1 > static_cast<int>(chain.levels.size()))
        throw std::invalid_argument("witness_instance_from_chain: need levels H and J");
    const ChainLevel& h = chain.levels[static_cast<size_t>(h_level - 1)];
    const ChainLevel& j = chain.levels[static_cast<size_t>(h_level)];
    if (!h.quotient || !j.quotient)
        throw std::invalid_argument("witness_instance_from_chain: chain too shallow");

    WitnessInstance inst;
    inst.p = chain.presentation;
    inst.j_table = j.table;
    inst.h_index = h.table.index();
    inst.h_quotient = *h.quotient;
    if (!h.noop) {
        SchreierData sd = schreier_data(h.table);
        for (int i = 0; i < h.table.index(); ++i)
            for (int g = 0; g < h.table.gen_count; ++g)
                if (!sd.is_tree_pair(i, g))
                    inst.h_sigma_images.push_back(
                        h.labels[static_cast<size_t>(i) * h.table.gen_count + g]);
    } else {
        // trivial quotient: the inner graph is a point; images are empty vectors
        SchreierData sd = schreier_data(h.table);
        for (int i = 0; i < h.table.index(); ++i)
            for (int g = 0; g < h.table.gen_count; ++g)
                if (!sd.is_tree_pair(i, g)) inst.h_sigma_images.push_back(ElementVector{});
    }
    inst.a = *j.quotient;
    inst.j_pair_labels = j.labels;
    if (h_level + 2 <= static_cast<int>(chain.levels.size()))
        inst.k_table = chain.levels[static_cast<size_t>(h_level + 1)].table;
    return inst;
}

WitnessReport largeness_witness(const WitnessInstance& inst, int exact_limit) {
    WitnessReport rep;
    TwoComplex cover = cover_complex(inst.p, inst.j_table);
    QuotientLabeling ql = make_labeling(cover, inst.a, inst.j_pair_labels);

    if (cover.vertex_count < 2) {
        rep.note = "the quotient cover has a single vertex; no sweep level exists";
        return rep;
    }

    LabeledMultigraph x = cayley_graph(inst.j_table);
    VertexOrdering ordering;
    if (cover.vertex_count <= exact_limit) {
        ordering = exact_cutwidth(x, exact_limit).ordering;
        rep.ordering_kind = "exact";
    } else {
        CharacterOrderingResult inner = character_ordering(inst.h_quotient, inst.h_sigma_images);
        ordering = composite_ordering(x, inst.h_index, inner.ordering);
        rep.ordering_kind = "composite";
    }
    rep.ordering = ordering.order;

    std::vector<LevelScanRow> rows = scan_levels(cover, ql, ordering);

    if (!inst.k_table) {
        for (const LevelScanRow& row : rows) rep.levels.push_back({row, 0});
        rep.resource_limited = true;
        rep.note = "kernel cover unavailable (over the resource limit); no lift computed";
        return rep;
    }

    long long best_chi = 1;
    int best_n = -1;
    for (const LevelScanRow& row : rows) {
        SweepDecomposition d = sweep(cover, ql, ordering, row.n);
        DecompositionGraph y = build_decomposition_graph(cover, ql, d);
        LiftResult lift = lift_decomposition(cover, ql, d, y, inst.p, *inst.k_table);
        rep.levels.push_back({row, lift.chi});
        if (best_n < 0 || lift.chi < best_chi) {
            best_chi = lift.chi;
            best_n = row.n;
        }
    }
    rep.chosen_n = best_n;
    rep.chi = best_chi;

    SweepDecomposition d = sweep(cover, ql, ordering, best_n);
    DecompositionGraph y = build_decomposition_graph(cover, ql, d);
    LiftResult lift = lift_decomposition(cover, ql, d, y, inst.p, *inst.k_table);
    rep.y_dot = decomposition_dot(y);
    rep.lift_dot = decomposition_dot(lift.lifted);

    if (best_chi < 0) {
        if (!lift.connected)
            throw std::logic_error("lifted decomposition graph of a connected cover is disconnected");
        rep.success = true;
        rep.certified_free_rank = Int(1) - best_chi;
        rep.note = "the lifted decomposition graph has negative Euler characteristic; its "
                   "fundamental group is free of rank " + rep.certified_free_rank.str() +
                   " and receives a surjection from the kernel subgroup";
    } else {
        rep.note = "no sweep level produced a lifted graph with negative Euler characteristic";
    }

    // secondary diagnostic: a path between two heavy nodes and the valences
    // of its preimage
    {
        int u = -1, v = -1;
        for (size_t i = 0; i < y.nodes.size(); ++i) {
            if (y.nodes[i].low && u < 0 && y.nodes[i].g_value > 1) u = static_cast<int>(i);
            if (!y.nodes[i].low && v < 0 && y.nodes[i].g_value > 1) v = static_cast<int>(i);
        }
        if (u < 0 || v < 0) {
            rep.valence_diagnostic = "no pair of heavy nodes (g > 1) on opposite sides";
        } else {
            std::vector<int> prev_edge(y.nodes.size(), -1), prev_node(y.nodes.size(), -1);
            std::deque<int> q{u};
            std::vector<char> seen(y.nodes.size(), 0);
            seen[static_cast<size_t>(u)] = 1;
            while (!q.empty()) {
                int cur = q.front();
                q.pop_front();
                if (cur == v) break;
                for (size_t e = 0; e < y.edges.size(); ++e) {
                    int a = y.edges[e].low_node, b = y.edges[e].high_node;
                    for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}})
                        if (from == cur && !seen[static_cast<size_t>(to)]) {
                            seen[static_cast<size_t>(to)] = 1;
                            prev_edge[static_cast<size_t>(to)] = static_cast<int>(e);
                            prev_node[static_cast<size_t>(to)] = cur;
                            q.push_back(to);
                        }
                }
            }
            if (!seen[static_cast<size_t>(v)]) {
                rep.valence_diagnostic = "heavy nodes are in different components of the graph";
            } else {
                std::vector<char> on_path_node(y.nodes.size(), 0), on_path_edge(y.edges.size(), 0);
                for (int cur = v; cur >= 0; cur = prev_node[static_cast<size_t>(cur)]) {
                    on_path_node[static_cast<size_t>(cur)] = 1;
                    if (prev_edge[static_cast<size_t>(cur)] >= 0)
                        on_path_edge[static_cast<size_t>(prev_edge[static_cast<size_t>(cur)])] = 1;
                    if (cur == u) break;
                }
                std::vector<int> val(lift.lifted.nodes.size(), 0);
                long long path_edges = 0;
                for (size_t e = 0; e < lift.lifted.edges.size(); ++e)
                    if (on_path_edge[static_cast<size_t>(lift.edge_image[e])]) {
                        val[static_cast<size_t>(lift.lifted.edges[e].low_node)] += 1;
                        val[static_cast<size_t>(lift.lifted.edges[e].high_node)] += 1;
                        ++path_edges;
                    }
                int min_internal = -1;
                long long heavy = 0;
                for (size_t nd = 0; nd < lift.lifted.nodes.size(); ++nd) {
                    int img = lift.node_image[nd];
                    if (!on_path_node[static_cast<size_t>(img)]) continue;
                    bool endpoint = img == u || img == v;
                    if (!endpoint && (min_internal < 0 || val[nd] < min_internal))
                        min_internal = val[nd];
                    if (endpoint && val[nd] >= 3) ++heavy;
                }
                std::ostringstream os;
                os << "path preimage: " << path_edges << " edges; min internal valence "
                   << (min_internal < 0 ? std::string("n/a") : std::to_string(min_internal))
                   << "; endpoint fibre nodes with valence >= 3: " << heavy;
                rep.valence_diagnostic = os.str();
            }
        }
    }
    return rep;
}

} // namespace largeness
