#include "largeness/coset_table.hpp"

#include "largeness/arith.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace largeness {

CosetTable trivial_table(int gen_count) {
    CosetTable t;
    t.gen_count = gen_count;
    t.fwd.assign(static_cast<size_t>(gen_count), std::vector<int>(1, 0));
    t.bwd = t.fwd;
    return t;
}

namespace {

// Enumeration working state.  Slot encoding: letter l -> 2*gen | (l<0).
struct Enumerator {
    int ngens;
    long long max_cosets;
    std::vector<std::vector<int>> tab; // per coset, 2*ngens slots, -1 undefined
    std::vector<int> parent;           // union-find over cosets
    long long live = 0;

    explicit Enumerator(int ngens_, long long max_)
        : ngens(ngens_), max_cosets(max_) {
        new_coset();
    }

    static int slot_of(int letter) {
        return 2 * letter_gen(letter) + (letter_positive(letter) ? 0 : 1);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    int get(int coset, int slot) {
        int v = tab[coset][slot];
        return v < 0 ? -1 : find(v);
    }

    int new_coset() {
        if (live >= max_cosets)
            throw ResourceLimitError("coset enumeration exceeded max_cosets = " +
                                     std::to_string(max_cosets));
        tab.emplace_back(2 * ngens, -1);
        parent.push_back(static_cast<int>(tab.size()) - 1);
        ++live;
        return static_cast<int>(tab.size()) - 1;
    }

    void set(int a, int slot, int b) {
        tab[a][slot] = b;
        tab[b][slot ^ 1] = a;
    }

    void merge(int a, int b) {
        std::deque<std::pair<int, int>> q{{a, b}};
        while (!q.empty()) {
            auto [x, y] = q.front();
            q.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (y < x) std::swap(x, y);
            parent[y] = x;
            --live;
            for (int slot = 0; slot < 2 * ngens; ++slot) {
                int z = tab[y][slot];
                if (z < 0) continue;
                int cur = tab[x][slot];
                if (cur < 0)
                    tab[x][slot] = z;
                else if (find(cur) != find(z))
                    q.emplace_back(cur, z);
            }
        }
    }

    // Trace word w from coset i and force it to close back at i.
    // May define new cosets and trigger coincidences.
    void scan_and_fill(int i, const Word& w) {
        if (w.empty()) return;
        for (;;) {
            int f = find(i);
            size_t fpos = 0;
            int b = f;
            size_t bpos = w.size();
            while (true) {
                while (fpos < bpos) {
                    int nxt = get(f, slot_of(w[fpos]));
                    if (nxt < 0) break;
                    f = nxt;
                    ++fpos;
                }
                if (fpos == bpos) {
                    if (f != b) {
                        merge(f, b);
                        break; // rescan in case i moved
                    }
                    return;
                }
                while (bpos > fpos) {
                    int prv = get(b, slot_of(w[bpos - 1]) ^ 1);
                    if (prv < 0) break;
                    b = prv;
                    --bpos;
                }
                if (bpos == fpos) {
                    if (f != b) {
                        merge(f, b);
                        break;
                    }
                    return;
                }
                if (bpos == fpos + 1) {
                    set(f, slot_of(w[fpos]), b);
                    return;
                }
                int n = new_coset();
                set(f, slot_of(w[fpos]), n);
                f = n;
                ++fpos;
            }
        }
    }

    bool dead(int i) { return find(i) != i; }
};

} // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        long long max_cosets) {
    if (max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
    int k = p.gen_count();
    Enumerator en(k, max_cosets);

    std::vector<Word> subs;
    subs.reserve(subgroup_words.size());
    for (const Word& w : subgroup_words) subs.push_back(free_reduce(w));

    for (const Word& w : subs) en.scan_and_fill(0, w);

    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (int i = 0; i < static_cast<int>(en.tab.size()); ++i) {
            if (en.dead(i)) continue;
            for (const Word& r : p.relators) {
                en.scan_and_fill(i, r);
                if (en.dead(i)) break;
            }
            if (en.dead(i)) continue;
            for (int slot = 0; slot < 2 * k; ++slot)
                if (en.get(i, slot) < 0) {
                    int n = en.new_coset();
                    en.set(i, slot, n);
                }
        }
        // verification sweep; in the rare case a late merge left an unscanned
        // pattern, loop again
        for (int i = 0; i < static_cast<int>(en.tab.size()) && !dirty; ++i) {
            if (en.dead(i)) continue;
            for (int slot = 0; slot < 2 * k; ++slot)
                if (en.get(i, slot) < 0) dirty = true;
            for (const Word& r : p.relators) {
                int c = i;
                bool ok = true;
                for (int l : r) {
                    c = en.get(c, Enumerator::slot_of(l));
                    if (c < 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok || c != i) dirty = true;
            }
        }
        if (!dirty)
            for (const Word& w : subs) {
                int c = 0;
                for (int l : w) c = en.get(c, Enumerator::slot_of(l));
                if (c != 0) dirty = true;
            }
    }

    // compact live cosets, then standardize by BFS from coset 0
    std::vector<int> live;
    for (int i = 0; i < static_cast<int>(en.tab.size()); ++i)
        if (!en.dead(i)) live.push_back(i);
    int n = static_cast<int>(live.size());

    std::vector<int> order(static_cast<size_t>(en.tab.size()), -1);
    std::vector<int> bfs{0};
    order[0] = 0;
    int assigned = 1;
    for (size_t q = 0; q < bfs.size(); ++q) {
        int i = bfs[q];
        for (int slot = 0; slot < 2 * k; ++slot) {
            int s = (slot < k) ? 2 * slot : 2 * (slot - k) + 1; // gens first, then inverses
            int j = en.get(i, s);
            if (order[j] < 0) {
                order[j] = assigned++;
                bfs.push_back(j);
            }
        }
    }
    if (assigned != n)
        throw std::logic_error("coset table not transitive after enumeration");

    CosetTable t;
    t.gen_count = k;
    t.subgroup_words = subs;
    t.fwd.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(n)));
    t.bwd = t.fwd;
    for (int i : live) {
        for (int g = 0; g < k; ++g) {
            t.fwd[g][order[i]] = order[en.get(i, 2 * g)];
            t.bwd[g][order[i]] = order[en.get(i, 2 * g + 1)];
        }
    }
    return t;
}

int word_action(const CosetTable& t, const Word& w, int coset) {
    int c = coset;
    for (int l : w) c = t.act_letter(c, l);
    return c;
}

SchreierData schreier_data(const CosetTable& t) {
    int n = t.index(), k = t.gen_count;
    SchreierData sd;
    sd.gen_count = k;
    sd.transversal.assign(static_cast<size_t>(n), Word{});
    sd.tree.assign(static_cast<size_t>(n) * k, 0);

    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[0] = 1;
    std::vector<int> bfs{0};
    for (size_t q = 0; q < bfs.size(); ++q) {
        int i = bfs[q];
        for (int pass = 0; pass < 2; ++pass)
            for (int g = 0; g < k; ++g) {
                bool forward = pass == 0;
                int j = forward ? t.fwd[g][i] : t.bwd[g][i];
                if (seen[j]) continue;
                seen[j] = 1;
                sd.transversal[j] = sd.transversal[i];
                sd.transversal[j].push_back(forward ? gen_letter(g) : inv_letter(g));
                // the tree pair is recorded on the positive-generator edge
                if (forward)
                    sd.tree[static_cast<size_t>(i) * k + g] = 1;
                else
                    sd.tree[static_cast<size_t>(j) * k + g] = 1;
                bfs.push_back(j);
            }
    }
    return sd;
}

Word schreier_generator_word(const CosetTable& t, const SchreierData& sd, int coset, int gen) {
    Word w = sd.transversal[coset];
    w.push_back(gen_letter(gen));
    Word back = inverse(sd.transversal[t.fwd[gen][coset]]);
    w.insert(w.end(), back.begin(), back.end());
    return free_reduce(w);
}

bool is_normal(const CosetTable& t) {
    int n = t.index(), k = t.gen_count;
    if (n == 1) return true;
    SchreierData sd = schreier_data(t);
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < k; ++g) {
            if (sd.is_tree_pair(i, g)) continue;
            Word w = schreier_generator_word(t, sd, i, g);
            for (int cg = 0; cg < k; ++cg)
                for (int sign = 0; sign < 2; ++sign) {
                    int l = sign ? inv_letter(cg) : gen_letter(cg);
                    // s^{-1} w s must fix coset 0
                    int c = t.act_letter(0, -l);
                    c = word_action(t, w, c);
                    c = t.act_letter(c, l);
                    if (c != 0) return false;
                }
        }
    return true;
}

bool tables_isomorphic(const CosetTable& a, const CosetTable& b) {
    if (a.index() != b.index() || a.gen_count != b.gen_count) return false;
    int n = a.index(), k = a.gen_count;
    for (int j0 = 0; j0 < n; ++j0) {
        std::vector<int> map(static_cast<size_t>(n), -1);
        map[0] = j0;
        std::vector<int> bfs{0};
        bool ok = true;
        std::vector<char> hit(static_cast<size_t>(n), 0);
        hit[j0] = 1;
        for (size_t q = 0; q < bfs.size() && ok; ++q) {
            int i = bfs[q];
            for (int g = 0; g < k && ok; ++g) {
                int i2 = a.fwd[g][i], j2 = b.fwd[g][map[i]];
                if (map[i2] < 0) {
                    if (hit[j2]) {
                        ok = false;
                        break;
                    }
                    map[i2] = j2;
                    hit[j2] = 1;
                    bfs.push_back(i2);
                } else if (map[i2] != j2) {
                    ok = false;
                }
            }
        }
        if (ok && static_cast<int>(bfs.size()) == n) return true;
    }
    return false;
}

std::string table_json(const CosetTable& t, const std::vector<char>& gen_names) {
    std::ostringstream out;
    out << "{ \"index\": " << t.index() << ", \"action\": {";
    for (int g = 0; g < t.gen_count; ++g) {
        if (g) out << ",";
        out << " \"" << gen_names[static_cast<size_t>(g)] << "\": [";
        for (int i = 0; i < t.index(); ++i) {
            if (i) out << ", ";
            out << t.fwd[g][i];
        }
        out << "]";
    }
    out << " } }";
    return out.str();
}

} // namespace largeness
