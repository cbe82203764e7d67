#pragma once

#include "largeness/chain.hpp"

#include <string>
#include <vector>

namespace largeness {

/// Evaluation of the explicit largeness inequality for a triple
/// H >= J >= K of finite index normal subgroups with H/J abelian:
/// the certificate passes when d(J/K) exceeds both of
///   48 L |S| / floor(([H:J]-1)^(1/([G:H]|S|))) + 16 L |S| / [H:J]
///   16 |S| + 8 L^2.
struct CertificateReport {
    Int s_size, rel_length_sum, idx_h, idx_hj, d_jk;
    bool first_term_vacuous = false; // the integer root floored to zero
    Rat first_term;
    Rat second_term;
    Rat threshold; // max of the two terms (meaningless when vacuous)
    bool passed = false;
    std::string notes;
};

CertificateReport certificate_check(const Int& s_size, const Int& rel_length_sum,
                                    const Int& idx_h, const Int& idx_hj, const Int& d_jk);

/// Either the abelianization of the coset-0 subgroup is infinite, or its
/// order is at most c^(d [G:H]) with c the longest relator and d = |S|.
struct AbelianizationBoundReport {
    bool infinite = false;
    FiniteAbelianGroup abelianization;
    Int order = 0; // when finite
    Int max_relator_len = 0;
    Int gen_count = 0;
    Int index = 0;
    Int bound = 0;       // c^(d*[G:H])
    bool within_bound = true;
};

AbelianizationBoundReport abelianization_bound_check(const Presentation& p, const CosetTable& t);

struct ChainDiagnosticsRow {
    int level = 0;
    Int index;         // [G : G_level]
    Int quotient_order;
    int quotient_d = 0;
    std::string log_ratio; // log|Q| / index, high-precision decimal
    Rat d_ratio;           // d(Q) / index, exact
};

struct ChainDiagnostics {
    std::vector<ChainDiagnosticsRow> rows;
    std::string log_precision;
    bool log_ratio_nondecreasing = true; // over levels with nontrivial quotient
    bool d_ratio_positive = true;        // min over those levels > 0
};

ChainDiagnostics chain_diagnostics(const Chain& chain);

} // namespace largeness
