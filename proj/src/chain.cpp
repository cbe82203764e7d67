#include "largeness/chain.hpp"

#include <algorithm>

namespace largeness {

ModAbelianization mod_n_abelianization(const Presentation& p, const CosetTable& t, const Int& n) {
    if (n < 2) throw std::invalid_argument("mod_n_abelianization: n must be >= 2");
    SchreierData sd = schreier_data(t);
    ModAbelianization ma;
    ma.sp = reidemeister_schreier(p, t, sd);
    CokernelResult ck = cokernel(abelianized_matrix(ma.sp), n);
    ma.group = std::move(ck.group);
    ma.sigma_images = std::move(ck.generator_images);
    return ma;
}

std::vector<ElementVector> pair_labels(const CosetTable& t, const ModAbelianization& ma) {
    int n = t.index(), k = t.gen_count;
    ElementVector zero(static_cast<size_t>(ma.group.torsion_rank()), Int(0));
    std::vector<ElementVector> labels(static_cast<size_t>(n) * k, zero);
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < k; ++g) {
            int s = ma.sp.lookup(i, g);
            if (s >= 0) labels[static_cast<size_t>(i) * k + g] = ma.sigma_images[static_cast<size_t>(s)];
        }
    return labels;
}

CosetTable kernel_coset_table(const Presentation& p, const CosetTable& t,
                              const FiniteAbelianGroup& a,
                              const std::vector<ElementVector>& labels, long long max_cosets) {
    if (!a.is_finite()) throw std::invalid_argument("kernel_coset_table: quotient infinite");
    int nh = t.index(), k = t.gen_count;
    Int total = Int(nh) * a.order();
    if (total > max_cosets)
        throw ResourceLimitError("kernel table would need " + total.str() + " cosets");
    long long m = element_count_checked(a, max_cosets);
    long long nt = static_cast<long long>(nh) * m;

    std::vector<ElementVector> elems(static_cast<size_t>(m));
    for (long long r = 0; r < m; ++r) elems[static_cast<size_t>(r)] = unrank_element(a, r);

    CosetTable kt;
    kt.gen_count = k;
    kt.fwd.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(nt)));
    kt.bwd = kt.fwd;
    for (int i = 0; i < nh; ++i)
        for (long long r = 0; r < m; ++r) {
            long long c = static_cast<long long>(i) * m + r;
            for (int g = 0; g < k; ++g) {
                int j = t.fwd[g][i];
                ElementVector b = add_elements(a, elems[static_cast<size_t>(r)],
                                               labels[static_cast<size_t>(i) * k + g]);
                kt.fwd[g][static_cast<size_t>(c)] =
                    static_cast<int>(static_cast<long long>(j) * m + rank_element(a, b));
                int jp = t.bwd[g][i]; // jp · g = i
                ElementVector bb = add_elements(
                    a, elems[static_cast<size_t>(r)],
                    negate_element(a, labels[static_cast<size_t>(jp) * k + g]));
                kt.bwd[g][static_cast<size_t>(c)] =
                    static_cast<int>(static_cast<long long>(jp) * m + rank_element(a, bb));
            }
        }

    // relators must act trivially on every coset; failure means the label
    // data is inconsistent with the presentation
    for (const Word& r : p.relators)
        for (long long c = 0; c < nt; ++c)
            if (word_action(kt, r, static_cast<int>(c)) != c)
                throw InconsistentDataError("relator does not act trivially on the kernel table");
    // transitivity
    {
        std::vector<char> seen(static_cast<size_t>(nt), 0);
        seen[0] = 1;
        std::vector<int> bfs{0};
        for (size_t q = 0; q < bfs.size(); ++q)
            for (int g = 0; g < k; ++g)
                for (int nxt : {kt.fwd[g][static_cast<size_t>(bfs[q])], kt.bwd[g][static_cast<size_t>(bfs[q])]})
                    if (!seen[static_cast<size_t>(nxt)]) {
                        seen[static_cast<size_t>(nxt)] = 1;
                        bfs.push_back(nxt);
                    }
        if (static_cast<long long>(bfs.size()) != nt)
            throw InconsistentDataError("kernel table is not transitive");
    }
    if (!is_normal(kt)) throw InconsistentDataError("kernel table failed the normality check");
    return kt;
}

Int rule_exponent(const ExponentRule& rule, int level) {
    switch (rule.kind) {
    case ExponentRuleKind::DerivedPower: return level;
    case ExponentRuleKind::PrimesAbove: return nth_prime_above(rule.q, level);
    case ExponentRuleKind::Constant: return rule.q;
    }
    return 0;
}

namespace {

std::string power_branch_report(const Presentation& p, const CosetTable& t,
                                const SubgroupPresentation& sp, const ProperPower& pw) {
    // Abelianization of the level subgroup without the rows coming from the
    // proper-power relator, and the order of the power base's image there.
    IntMatrix full = abelianized_matrix(sp);
    int n = t.index();
    int lo = pw.relator_index * n, hi = lo + n;
    IntMatrix rest(full.rows - n, full.cols);
    for (int r = 0, w = 0; r < full.rows; ++r) {
        if (r >= lo && r < hi) continue;
        for (int j = 0; j < full.cols; ++j) rest.at(w, j) = full.at(r, j);
        ++w;
    }
    CokernelResult free_part = cokernel(rest);
    if (word_action(t, pw.base, 0) != 0)
        return "power base leaves the subgroup (unexpected)";
    Word rw = rewrite_from(sp, t, pw.base, 0);
    ElementVector img(static_cast<size_t>(free_part.group.d()), Int(0));
    for (int l : rw) {
        const ElementVector& gi = free_part.generator_images[static_cast<size_t>(letter_gen(l))];
        for (size_t j = 0; j < img.size(); ++j)
            img[j] += letter_positive(l) ? gi[j] : -gi[j];
    }
    img = reduce_element(free_part.group, std::move(img));
    auto ord = element_order(free_part.group, img);
    if (!ord)
        return "infinite-order: power base has infinite order in the relator-free "
               "abelianization; large by the Baumslag-Pride one-relator criterion "
               "(reported, not certified)";
    return "finite-order: power base has order " + ord->str() +
           " in the relator-free abelianization";
}

} // namespace

Chain build_chain(const Presentation& p, int depth, const ExponentRule& rule,
                  long long max_cosets) {
    if (depth < 1) throw std::invalid_argument("build_chain: depth must be >= 1");
    if (rule.kind == ExponentRuleKind::Constant && rule.q < 2)
        throw std::invalid_argument("build_chain: constant exponent must be >= 2");

    Chain chain;
    chain.presentation = p;
    chain.rule = rule;
    ChainLevel first;
    first.level = 1;
    first.table = trivial_table(p.gen_count());
    chain.levels.push_back(std::move(first));

    std::optional<ProperPower> pw;
    if (rule.kind == ExponentRuleKind::PrimesAbove) pw = find_proper_power(p);

    for (int i = 1; i < depth; ++i) {
        ChainLevel& cur = chain.levels.back();
        Int n = rule_exponent(rule, i);
        cur.exponent = n;
        if (n == 1) {
            // first powers generate the subgroup itself: a recorded no-op
            cur.noop = true;
            cur.quotient = FiniteAbelianGroup{};
            cur.next_table_built = true;
            ChainLevel next;
            next.level = i + 1;
            next.table = cur.table;
            chain.levels.push_back(std::move(next));
            continue;
        }
        ModAbelianization ma = mod_n_abelianization(p, cur.table, n);
        cur.quotient = ma.group;
        cur.labels = pair_labels(cur.table, ma);
        if (pw) cur.power_branch = power_branch_report(p, cur.table, ma.sp, *pw);

        Int total = Int(cur.table.index()) * ma.group.order();
        if (total > max_cosets) {
            chain.resource_limited = true;
            chain.limit_note = "level " + std::to_string(i + 1) + " would have index " +
                               total.str() + " > max_cosets = " + std::to_string(max_cosets);
            break;
        }
        ChainLevel next;
        next.level = i + 1;
        next.table = kernel_coset_table(p, cur.table, ma.group, cur.labels, max_cosets);
        cur.next_table_built = true;
        chain.levels.push_back(std::move(next));
    }
    return chain;
}

std::optional<ProperPower> find_proper_power(const Presentation& p) {
    for (int r = 0; r < p.relator_count(); ++r) {
        const Word& w = p.relators[static_cast<size_t>(r)];
        int len = static_cast<int>(w.size());
        if (len < 2) continue;
        for (int d = 1; d <= len / 2; ++d) {
            if (len % d != 0) continue;
            bool periodic = true;
            for (int i = d; i < len && periodic; ++i)
                if (w[static_cast<size_t>(i)] != w[static_cast<size_t>(i % d)]) periodic = false;
            if (periodic) {
                ProperPower pw;
                pw.relator_index = r;
                pw.base.assign(w.begin(), w.begin() + d);
                pw.exponent = len / d;
                return pw;
            }
        }
    }
    return std::nullopt;
}

Int smallest_prime_divisor(const Int& n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_divisor: n < 2");
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

namespace {
bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
} // namespace

Int nth_prime_above(const Int& q, int i) {
    Int c = q;
    int found = 0;
    while (found < i) {
        ++c;
        if (is_prime(c)) ++found;
    }
    return c;
}

} // namespace largeness
