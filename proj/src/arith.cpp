#include "largeness/arith.hpp"

#include <boost/multiprecision/number.hpp>
#include <sstream>

namespace largeness {

Int nth_root_floor(const Int& x, unsigned k) {
    if (x < 0) throw std::invalid_argument("nth_root_floor: negative radicand");
    if (k == 0) throw std::invalid_argument("nth_root_floor: zero root order");
    if (x == 0) return 0;
    if (k == 1) return x;
    // binary search on [1, 2^(bits/k + 1)]
    unsigned bits = static_cast<unsigned>(msb(x)) + 1;
    Int hi = Int(1) << (bits / k + 1);
    Int lo = 1;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (ipow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Int ipow(const Int& x, unsigned long k) {
    Int r = 1, b = x;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

std::string rat_string(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string rat_decimal(const Rat& r, int digits) {
    // round-half-away scaling; enough for human-readable report columns
    bool neg = r < 0;
    Rat a = neg ? Rat(-r) : r;
    Int scale = ipow(10, static_cast<unsigned long>(digits));
    Int scaled = (numerator(a) * scale * 2 + denominator(a)) / (2 * denominator(a));
    Int ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    std::string s = ip.str();
    if (frac != "0") s += "." + frac;
    return neg && (ip != 0 || frac != "0") ? "-" + s : s;
}

} // namespace largeness
