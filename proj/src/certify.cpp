#include "largeness/certify.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <sstream>

namespace largeness {

CertificateReport certificate_check(const Int& s_size, const Int& rel_length_sum,
                                    const Int& idx_h, const Int& idx_hj, const Int& d_jk) {
    if (rel_length_sum < 1) throw std::invalid_argument("certificate_check: L must be >= 1");
    if (s_size < 1) throw std::invalid_argument("certificate_check: |S| must be >= 1");
    if (idx_h < 1) throw std::invalid_argument("certificate_check: [G:H] must be >= 1");
    if (idx_hj < 2) throw std::invalid_argument("certificate_check: [H:J] must be >= 2");
    if (d_jk < 0) throw std::invalid_argument("certificate_check: d(J/K) must be >= 0");

    CertificateReport r;
    r.s_size = s_size;
    r.rel_length_sum = rel_length_sum;
    r.idx_h = idx_h;
    r.idx_hj = idx_hj;
    r.d_jk = d_jk;
    r.second_term = Rat(16 * s_size + 8 * rel_length_sum * rel_length_sum);

    Int root_order = idx_h * s_size;
    if (root_order > 1000000) throw ResourceLimitError("certificate_check: root order too large");
    Int f = nth_root_floor(idx_hj - 1, static_cast<unsigned>(root_order));
    if (f == 0) {
        // the inequality is unusable here; fail closed
        r.first_term_vacuous = true;
        r.passed = false;
        r.threshold = r.second_term;
        r.notes = "first term vacuous (integer root floored to zero); certificate fails closed";
        return r;
    }
    r.first_term = Rat(48 * rel_length_sum * s_size, f) +
                   Rat(16 * rel_length_sum * s_size, idx_hj);
    r.threshold = std::max(r.first_term, r.second_term);
    r.passed = Rat(d_jk) > r.threshold;
    return r;
}

AbelianizationBoundReport abelianization_bound_check(const Presentation& p, const CosetTable& t) {
    AbelianizationBoundReport r;
    r.max_relator_len = p.max_relator_length();
    r.gen_count = p.gen_count();
    r.index = t.index();

    SchreierData sd = schreier_data(t);
    SubgroupPresentation sp = reidemeister_schreier(p, t, sd);
    CokernelResult ck = cokernel(abelianized_matrix(sp));
    r.abelianization = ck.group;

    if (!ck.group.is_finite() || r.max_relator_len == 0) {
        // no relators means a free subgroup of positive rank
        r.infinite = true;
        return r;
    }
    r.order = ck.group.order();
    Int exponent = r.gen_count * r.index;
    if (exponent > 1000000)
        throw ResourceLimitError("abelianization_bound_check: exponent too large");
    r.bound = ipow(r.max_relator_len, static_cast<unsigned long>(exponent));
    r.within_bound = r.order <= r.bound;
    return r;
}

ChainDiagnostics chain_diagnostics(const Chain& chain) {
    using BigFloat = boost::multiprecision::cpp_bin_float_50;
    ChainDiagnostics diag;
    diag.log_precision = "50-decimal-digit binary floating point";

    BigFloat prev_log_val = 0;
    bool have_prev = false;
    for (const ChainLevel& lv : chain.levels) {
        if (!lv.quotient) continue;
        ChainDiagnosticsRow row;
        row.level = lv.level;
        row.index = lv.table.index();
        row.quotient_order = lv.quotient->order();
        row.quotient_d = lv.quotient->d();

        BigFloat lg = 0;
        for (const Int& f : lv.quotient->invariant_factors) lg += log(BigFloat(f));
        BigFloat ratio = lg / BigFloat(row.index);
        std::ostringstream os;
        os.precision(30);
        os << ratio;
        row.log_ratio = os.str();
        row.d_ratio = Rat(row.quotient_d, row.index);
        diag.rows.push_back(row);

        if (row.quotient_order > 1) {
            if (have_prev && ratio < prev_log_val) diag.log_ratio_nondecreasing = false;
            prev_log_val = ratio;
            have_prev = true;
            if (row.d_ratio <= 0) diag.d_ratio_positive = false;
        }
    }
    return diag;
}

} // namespace largeness
