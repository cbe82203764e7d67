#include "largeness/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace largeness {

LabeledMultigraph cayley_graph(const CosetTable& t) {
    if (!is_normal(t)) throw NotNormalError("cayley_graph: subgroup is not normal");
    LabeledMultigraph g;
    g.vertex_count = t.index();
    g.gen_count = t.gen_count;
    g.edges.reserve(static_cast<size_t>(g.vertex_count) * g.gen_count);
    for (int i = 0; i < g.vertex_count; ++i)
        for (int s = 0; s < g.gen_count; ++s) g.edges.push_back({i, t.fwd[s][i], s});
    return g;
}

LabeledMultigraph cayley_graph_abelian(const FiniteAbelianGroup& a,
                                       const std::vector<ElementVector>& gens, long long limit) {
    long long m = element_count_checked(a, limit);
    LabeledMultigraph g;
    g.vertex_count = static_cast<int>(m);
    g.gen_count = static_cast<int>(gens.size());
    for (long long r = 0; r < m; ++r) {
        ElementVector v = unrank_element(a, r);
        for (int s = 0; s < g.gen_count; ++s) {
            ElementVector w = add_elements(a, v, gens[static_cast<size_t>(s)]);
            g.edges.push_back({static_cast<int>(r), static_cast<int>(rank_element(a, w)), s});
        }
    }
    return g;
}

VertexOrdering make_ordering(const LabeledMultigraph& g, std::vector<int> perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count)
        throw std::invalid_argument("ordering is not a permutation of the vertices");
    std::vector<int> pos(static_cast<size_t>(g.vertex_count), -1);
    for (int p = 0; p < g.vertex_count; ++p) {
        int v = perm[static_cast<size_t>(p)];
        if (v < 0 || v >= g.vertex_count || pos[static_cast<size_t>(v)] >= 0)
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        pos[static_cast<size_t>(v)] = p;
    }
    // difference-array accumulation of prefix cuts; loops contribute nothing
    std::vector<long long> diff(static_cast<size_t>(g.vertex_count) + 2, 0);
    for (const GraphEdge& e : g.edges) {
        int a = pos[static_cast<size_t>(e.u)], b = pos[static_cast<size_t>(e.v)];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        diff[static_cast<size_t>(a) + 1] += 1;
        diff[static_cast<size_t>(b) + 1] -= 1;
    }
    VertexOrdering o;
    o.order = std::move(perm);
    o.cut_profile.assign(static_cast<size_t>(g.vertex_count) + 1, 0);
    long long run = 0;
    for (int n = 0; n <= g.vertex_count; ++n) {
        run += diff[static_cast<size_t>(n)];
        o.cut_profile[static_cast<size_t>(n)] = run;
        o.width = std::max(o.width, run);
    }
    return o;
}

long long ordering_width(const LabeledMultigraph& g, const std::vector<int>& perm) {
    return make_ordering(g, perm).width;
}

namespace {

// cut sizes for every vertex subset, loops excluded
std::vector<long long> subset_cuts(const LabeledMultigraph& g) {
    int n = g.vertex_count;
    std::vector<long long> adj(static_cast<size_t>(n) * n, 0);
    std::vector<long long> deg(static_cast<size_t>(n), 0);
    for (const GraphEdge& e : g.edges) {
        if (e.u == e.v) continue;
        adj[static_cast<size_t>(e.u) * n + e.v] += 1;
        adj[static_cast<size_t>(e.v) * n + e.u] += 1;
        deg[static_cast<size_t>(e.u)] += 1;
        deg[static_cast<size_t>(e.v)] += 1;
    }
    size_t total = size_t{1} << n;
    std::vector<long long> cut(total, 0);
    for (size_t s = 1; s < total; ++s) {
        int v = std::countr_zero(s);
        size_t rest = s & (s - 1);
        long long inside = 0;
        size_t r = rest;
        while (r) {
            int u = std::countr_zero(r);
            inside += adj[static_cast<size_t>(v) * n + u];
            r &= r - 1;
        }
        cut[s] = cut[rest] + deg[static_cast<size_t>(v)] - 2 * inside;
    }
    return cut;
}

} // namespace

CutwidthResult exact_cutwidth(const LabeledMultigraph& g, int vertex_limit) {
    int n = g.vertex_count;
    if (n > vertex_limit)
        throw ResourceLimitError("exact_cutwidth: vertex count " + std::to_string(n) +
                                 " exceeds limit " + std::to_string(vertex_limit));
    if (n == 0) return {0, {}};
    std::vector<long long> cut = subset_cuts(g);
    size_t total = size_t{1} << n;

    // f[s] = best achievable max over future prefix cuts once the prefix set
    // is s; iterate supersets first
    std::vector<long long> f(total, 0);
    for (size_t s = total - 1; s + 1 > 0; --s) {
        if (s == total - 1) {
            f[s] = 0;
            continue;
        }
        long long best = -1;
        for (int v = 0; v < n; ++v) {
            if (s & (size_t{1} << v)) continue;
            size_t t = s | (size_t{1} << v);
            long long cand = std::max(cut[t], f[t]);
            if (best < 0 || cand < best) best = cand;
        }
        f[s] = best;
        if (s == 0) break;
    }
    long long width = f[0];

    // forward greedy reconstruction: smallest feasible vertex first gives the
    // lexicographically least optimal ordering
    std::vector<int> perm;
    size_t s = 0;
    for (int step = 0; step < n; ++step) {
        for (int v = 0; v < n; ++v) {
            if (s & (size_t{1} << v)) continue;
            size_t t = s | (size_t{1} << v);
            if (std::max(cut[t], f[t]) <= width) {
                perm.push_back(v);
                s = t;
                break;
            }
        }
    }
    CutwidthResult res;
    res.width = width;
    res.ordering = make_ordering(g, std::move(perm));
    if (res.ordering.width != width)
        throw std::logic_error("cutwidth reconstruction mismatch");
    return res;
}

Rat exact_cheeger(const LabeledMultigraph& g, int vertex_limit) {
    int n = g.vertex_count;
    if (n < 2) throw std::invalid_argument("exact_cheeger: need at least two vertices");
    if (n > vertex_limit)
        throw ResourceLimitError("exact_cheeger: vertex count exceeds limit");
    std::vector<long long> cut = subset_cuts(g);
    size_t total = size_t{1} << n;
    long long bn = 0, bd = 0; // best cut / size, compared exactly
    for (size_t s = 1; s < total - 1; ++s) {
        int size = std::popcount(s);
        if (2 * size > n) continue;
        if (bd == 0 || cut[s] * bd < bn * size) {
            bn = cut[s];
            bd = size;
        }
    }
    return Rat(bn, bd);
}

Rat cheeger_from_width_bound(const LabeledMultigraph& g, const VertexOrdering& o) {
    if (g.vertex_count < 2)
        throw std::invalid_argument("cheeger_from_width_bound: need at least two vertices");
    return Rat(o.width, g.vertex_count / 2);
}

Rat character_width_bound(const Int& group_order, int sigma_size) {
    if (sigma_size < 1) throw std::invalid_argument("character_width_bound: empty generating set");
    Int c = nth_root_floor(group_order - 1, static_cast<unsigned>(sigma_size));
    if (c == 0)
        throw std::invalid_argument("character_width_bound: degenerate denominator (floor = 0)");
    return Rat(6 * sigma_size * group_order, c);
}

CharacterOrderingResult character_ordering(const FiniteAbelianGroup& a,
                                           const std::vector<ElementVector>& sigma_images,
                                           long long limit) {
    long long m = element_count_checked(a, limit);
    int k = a.torsion_rank();
    int ns = static_cast<int>(sigma_images.size());
    CharacterOrderingResult res;

    Int c_big = m >= 2 ? nth_root_floor(Int(m) - 1, static_cast<unsigned>(std::max(ns, 1))) : Int(0);
    res.arc_count = c_big;
    if (c_big == 0 || ns == 0) {
        res.degenerate = true;
        std::vector<int> nat(static_cast<size_t>(m));
        std::iota(nat.begin(), nat.end(), 0);
        res.ordering = make_ordering(cayley_graph_abelian(a, sigma_images, limit), std::move(nat));
        return res;
    }
    long long c = static_cast<long long>(c_big);
    res.bound = Rat(Int(6) * ns * m, c_big);

    // common denominator for all argument fractions: the largest invariant
    // factor (they form a divisibility chain)
    long long bigd = k == 0 ? 1 : static_cast<long long>(a.invariant_factors.back());
    std::vector<long long> scale(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
        scale[static_cast<size_t>(j)] = bigd / static_cast<long long>(a.invariant_factors[static_cast<size_t>(j)]);

    // numerator of arg(chi(v)) in units of 1/bigd, in [0, bigd)
    auto arg_num = [&](const std::vector<Int>& residues, const ElementVector& v) {
        long long num = 0;
        for (int j = 0; j < k; ++j) {
            long long r = static_cast<long long>(residues[static_cast<size_t>(j)]);
            long long x = static_cast<long long>(v[static_cast<size_t>(j)]);
            long long dj = static_cast<long long>(a.invariant_factors[static_cast<size_t>(j)]);
            num = (num + (r * x % dj) * scale[static_cast<size_t>(j)]) % bigd;
        }
        return num;
    };
    // half-open arcs (k/c, (k+1)/c]; exact multiples of 1/c fall to the lower
    // arc, with 0 wrapping to arc c-1
    auto cell_of = [&](long long num) {
        if (num == 0) return c - 1;
        return (num * c + bigd - 1) / bigd - 1;
    };

    std::vector<Character> chars = characters(a, Int(limit));
    std::map<std::vector<long long>, size_t> boxes;
    size_t first = 0, second = 0;
    bool found = false;
    for (size_t ci = 0; ci < chars.size() && !found; ++ci) {
        std::vector<long long> box(static_cast<size_t>(ns));
        for (int s = 0; s < ns; ++s)
            box[static_cast<size_t>(s)] =
                cell_of(arg_num(chars[ci].residues, sigma_images[static_cast<size_t>(s)]));
        auto [it, inserted] = boxes.emplace(std::move(box), ci);
        if (!inserted) {
            first = it->second;
            second = ci;
            found = true;
        }
    }
    if (!found) throw std::logic_error("character pigeonhole failed");

    Character phi;
    phi.residues.resize(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        Int d = a.invariant_factors[static_cast<size_t>(j)];
        Int diff = chars[second].residues[static_cast<size_t>(j)] -
                   chars[first].residues[static_cast<size_t>(j)];
        phi.residues[static_cast<size_t>(j)] = ((diff % d) + d) % d;
    }
    res.separator = phi;

    // sanity: phi nontrivial and each |arg phi(s)| at most 1/c of a turn
    bool nontrivial = false;
    for (const Int& r : phi.residues)
        if (r != 0) nontrivial = true;
    if (!nontrivial) throw std::logic_error("separating character is trivial");
    for (int s = 0; s < ns; ++s) {
        long long num = arg_num(phi.residues, sigma_images[static_cast<size_t>(s)]);
        long long circ = std::min(num, bigd - num);
        if (circ * c > bigd) throw std::logic_error("separating character argument too large");
    }

    long long phase_count = 1;
    for (int j = 0; j < k; ++j) {
        long long dj = static_cast<long long>(a.invariant_factors[static_cast<size_t>(j)]);
        long long rj = static_cast<long long>(phi.residues[static_cast<size_t>(j)]);
        long long oj = rj == 0 ? 1 : dj / std::gcd(rj, dj);
        phase_count = std::lcm(phase_count, oj);
    }
    res.phase_count = phase_count;
    if (phase_count < c) throw std::logic_error("phase count below arc count");

    // order by phase class, elements inside a class by lexicographic rank
    std::vector<std::vector<int>> buckets(static_cast<size_t>(phase_count));
    for (long long r = 0; r < m; ++r) {
        ElementVector v = unrank_element(a, r);
        long long num = arg_num(phi.residues, v);
        long long j = num * phase_count / bigd;
        if (j * bigd != num * phase_count)
            throw std::logic_error("phase class not integral");
        buckets[static_cast<size_t>(j)].push_back(static_cast<int>(r));
    }
    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(m));
    for (auto& b : buckets) perm.insert(perm.end(), b.begin(), b.end());

    LabeledMultigraph g = cayley_graph_abelian(a, sigma_images, limit);
    res.ordering = make_ordering(g, std::move(perm));
    if (Rat(res.ordering.width) > res.bound)
        throw std::logic_error("character ordering exceeded its width bound");
    return res;
}

VertexOrdering composite_ordering(const LabeledMultigraph& big, int block_count,
                                  const VertexOrdering& inner) {
    int inner_count = static_cast<int>(inner.order.size());
    if (block_count * inner_count != big.vertex_count)
        throw std::invalid_argument("composite_ordering: inconsistent coset data");
    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(big.vertex_count));
    for (int p = 0; p < inner_count; ++p) {
        int r = inner.order[static_cast<size_t>(p)];
        for (int i = 0; i < block_count; ++i) perm.push_back(i * inner_count + r);
    }
    VertexOrdering o = make_ordering(big, std::move(perm));
    long long bound = inner.width + 2LL * big.gen_count * block_count;
    if (o.width > bound) throw std::logic_error("composite ordering exceeded its width bound");
    return o;
}

std::string graph_dot(const LabeledMultigraph& g, const std::vector<char>& gen_names) {
    std::ostringstream out;
    out << "digraph cayley {\n";
    for (int v = 0; v < g.vertex_count; ++v) out << "  " << v << ";\n";
    for (const GraphEdge& e : g.edges) {
        out << "  " << e.u << " -> " << e.v;
        if (e.label >= 0 && e.label < static_cast<int>(gen_names.size()))
            out << " [label=\"" << gen_names[static_cast<size_t>(e.label)] << "\"]";
        else
            out << " [label=\"" << e.label << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace largeness
