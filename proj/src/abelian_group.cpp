#include "largeness/abelian_group.hpp"

#include <algorithm>
#include <numeric>

namespace largeness {

Int FiniteAbelianGroup::order() const {
    if (free_rank > 0) throw std::logic_error("order(): group is infinite");
    Int o = 1;
    for (const Int& f : invariant_factors) o *= f;
    return o;
}

namespace {

Int mod_pos(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

} // namespace

ElementVector reduce_element(const FiniteAbelianGroup& g, ElementVector v) {
    for (int i = 0; i < g.torsion_rank(); ++i)
        v[static_cast<size_t>(i)] = mod_pos(v[static_cast<size_t>(i)], g.invariant_factors[static_cast<size_t>(i)]);
    return v;
}

ElementVector add_elements(const FiniteAbelianGroup& g, const ElementVector& x,
                           const ElementVector& y) {
    ElementVector r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return reduce_element(g, std::move(r));
}

ElementVector negate_element(const FiniteAbelianGroup& g, const ElementVector& x) {
    ElementVector r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
    return reduce_element(g, std::move(r));
}

bool is_zero_element(const ElementVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::optional<Int> element_order(const FiniteAbelianGroup& g, const ElementVector& v) {
    for (int i = 0; i < g.free_rank; ++i)
        if (v[static_cast<size_t>(g.torsion_rank() + i)] != 0) return std::nullopt;
    Int ord = 1;
    for (int i = 0; i < g.torsion_rank(); ++i) {
        const Int& d = g.invariant_factors[static_cast<size_t>(i)];
        Int c = mod_pos(v[static_cast<size_t>(i)], d);
        Int oi = d / gcd(c == 0 ? d : c, d);
        ord = lcm(ord, oi);
    }
    return ord;
}

CokernelResult cokernel(const IntMatrix& m, std::optional<Int> modulus) {
    if (modulus && *modulus < 2) throw std::invalid_argument("cokernel: modulus must be >= 2");
    CokernelResult res;
    int c = m.cols;

    if (m.rows == 0 && modulus) {
        // free presentation mod n: (Z/n)^c with the standard basis
        res.group.invariant_factors.assign(static_cast<size_t>(c), *modulus);
        for (int j = 0; j < c; ++j) {
            ElementVector e(static_cast<size_t>(c), Int(0));
            e[static_cast<size_t>(j)] = 1;
            res.generator_images.push_back(std::move(e));
        }
        return res;
    }

    IntMatrix rel = m;
    if (modulus) {
        IntMatrix stacked(m.rows + c, c);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < c; ++j) stacked.at(i, j) = m.at(i, j);
        for (int j = 0; j < c; ++j) stacked.at(m.rows + j, j) = *modulus;
        rel = std::move(stacked);
    }

    SmithNormalForm s = smith_normal_form(rel);
    int diag_len = std::min(rel.rows, rel.cols);

    std::vector<int> torsion_cols, free_cols;
    for (int j = 0; j < c; ++j) {
        Int dj = j < diag_len ? s.d.at(j, j) : Int(0);
        if (dj == 0)
            free_cols.push_back(j);
        else if (dj >= 2)
            torsion_cols.push_back(j);
        // dj == 1: trivial component, dropped
    }
    for (int j : torsion_cols) res.group.invariant_factors.push_back(s.d.at(j, j));
    res.group.free_rank = static_cast<int>(free_cols.size());

    // Row j of V gives the image of generator e_j in the transformed basis.
    for (int j = 0; j < c; ++j) {
        ElementVector img;
        img.reserve(torsion_cols.size() + free_cols.size());
        for (size_t t = 0; t < torsion_cols.size(); ++t)
            img.push_back(mod_pos(s.v.at(j, torsion_cols[t]),
                                  res.group.invariant_factors[t]));
        for (int f : free_cols) img.push_back(s.v.at(j, f));
        res.generator_images.push_back(std::move(img));
    }
    return res;
}

FiniteAbelianGroup subgroup_generated(const FiniteAbelianGroup& a,
                                      const std::vector<ElementVector>& gens) {
    if (!a.is_finite()) throw std::invalid_argument("subgroup_generated: ambient group infinite");
    int k = a.torsion_rank();
    int mcount = static_cast<int>(gens.size());
    if (mcount == 0 || k == 0) return FiniteAbelianGroup{};

    // Stack the generator rows over diag(invariant factors); rows of the left
    // kernel of that matrix, truncated to the generator block, present the
    // subgroup as Z^m / relations.
    IntMatrix big(mcount + k, k);
    for (int i = 0; i < mcount; ++i)
        for (int j = 0; j < k; ++j) big.at(i, j) = gens[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int j = 0; j < k; ++j) big.at(mcount + j, j) = a.invariant_factors[static_cast<size_t>(j)];

    SmithNormalForm s = smith_normal_form(big);
    int rank = 0;
    int diag_len = std::min(big.rows, big.cols);
    for (int j = 0; j < diag_len; ++j)
        if (s.d.at(j, j) != 0) ++rank;

    IntMatrix relations(big.rows - rank, mcount);
    for (int r = rank; r < big.rows; ++r)
        for (int j = 0; j < mcount; ++j) relations.at(r - rank, j) = s.u.at(r, j);
    CokernelResult q = cokernel(relations);
    if (q.group.free_rank != 0)
        throw std::logic_error("subgroup_generated: finite subgroup came out infinite");
    return q.group;
}

std::vector<Character> characters(const FiniteAbelianGroup& a, const Int& bound) {
    if (!a.is_finite()) throw std::invalid_argument("characters: group infinite");
    if (a.order() > bound)
        throw ResourceLimitError("character enumeration bound exceeded (|A| = " +
                                 a.order().str() + ")");
    std::vector<Character> out;
    int k = a.torsion_rank();
    Character cur;
    cur.residues.assign(static_cast<size_t>(k), Int(0));
    out.push_back(cur);
    while (true) {
        int pos = k - 1;
        while (pos >= 0) {
            cur.residues[static_cast<size_t>(pos)] += 1;
            if (cur.residues[static_cast<size_t>(pos)] < a.invariant_factors[static_cast<size_t>(pos)]) break;
            cur.residues[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        out.push_back(cur);
    }
    return out;
}

Rat character_value_arg(const FiniteAbelianGroup& a, const Character& chi,
                        const ElementVector& v) {
    Rat s = 0;
    for (int i = 0; i < a.torsion_rank(); ++i)
        s += Rat(chi.residues[static_cast<size_t>(i)] * v[static_cast<size_t>(i)],
                 a.invariant_factors[static_cast<size_t>(i)]);
    // reduce mod 1 into [0, 1), then wrap into (-1/2, 1/2]
    Int fl = numerator(s) >= 0 ? numerator(s) / denominator(s)
                               : -((-numerator(s) + denominator(s) - 1) / denominator(s));
    s -= fl;
    if (s > Rat(1, 2)) s -= 1;
    return s;
}

long long element_count_checked(const FiniteAbelianGroup& a, long long limit) {
    if (!a.is_finite()) throw std::invalid_argument("element enumeration: group infinite");
    Int o = a.order();
    if (o > limit)
        throw ResourceLimitError("element enumeration limit exceeded (|A| = " + o.str() + ")");
    return static_cast<long long>(o);
}

ElementVector unrank_element(const FiniteAbelianGroup& a, long long r) {
    int k = a.torsion_rank();
    ElementVector v(static_cast<size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        long long d = static_cast<long long>(a.invariant_factors[static_cast<size_t>(i)]);
        v[static_cast<size_t>(i)] = r % d;
        r /= d;
    }
    return v;
}

long long rank_element(const FiniteAbelianGroup& a, const ElementVector& v) {
    long long r = 0;
    for (int i = 0; i < a.torsion_rank(); ++i) {
        r = r * static_cast<long long>(a.invariant_factors[static_cast<size_t>(i)]) +
            static_cast<long long>(v[static_cast<size_t>(i)]);
    }
    return r;
}

} // namespace largeness
