#include "largeness/words.hpp"

#include <algorithm>

namespace largeness {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool freely_equal(const Word& a, const Word& b) {
    return free_reduce(a) == free_reduce(b);
}

} // namespace largeness
