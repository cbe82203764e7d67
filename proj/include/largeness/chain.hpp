#pragma once

#include "largeness/abelian_group.hpp"
#include "largeness/coset_table.hpp"
#include "largeness/presentation.hpp"
#include "largeness/rewriting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace largeness {

struct InconsistentDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// H / ([H,H] H^n) together with the images of the Schreier generators.
struct ModAbelianization {
    FiniteAbelianGroup group;
    std::vector<ElementVector> sigma_images; // one per Schreier generator
    SubgroupPresentation sp;
};

/// Requires t complete and normal, n >= 2.
ModAbelianization mod_n_abelianization(const Presentation& p, const CosetTable& t, const Int& n);

/// Label for every (coset, generator) pair of the cover of t: the image of
/// the Schreier generator t_i s t_{i s}^{-1}; tree pairs carry zero.
std::vector<ElementVector> pair_labels(const CosetTable& t, const ModAbelianization& ma);

/// Coset table of the kernel of H -> A inside G.  Cosets are pairs (i, a),
/// numbered i*|A| + rank(a); action (i,a)·s = (i·s, a + label(i,s)).
/// Validates that all relators act trivially and the result is normal.
CosetTable kernel_coset_table(const Presentation& p, const CosetTable& t,
                              const FiniteAbelianGroup& a,
                              const std::vector<ElementVector>& labels,
                              long long max_cosets = 1000000);

enum class ExponentRuleKind { DerivedPower, PrimesAbove, Constant };

struct ExponentRule {
    ExponentRuleKind kind = ExponentRuleKind::DerivedPower;
    Int q = 0; // prime threshold (PrimesAbove) or the fixed exponent (Constant)

    static ExponentRule derived_power() { return {ExponentRuleKind::DerivedPower, 0}; }
    static ExponentRule primes_above(Int q) { return {ExponentRuleKind::PrimesAbove, std::move(q)}; }
    static ExponentRule constant(Int n) { return {ExponentRuleKind::Constant, std::move(n)}; }
};

/// Exponent applied when extending level i (1-based).
Int rule_exponent(const ExponentRule& rule, int level);

struct ChainLevel {
    int level = 1;
    CosetTable table;
    Int exponent = 0;  // exponent used toward the next level; 0 if none
    bool noop = false; // exponent-1 step, recorded and skipped
    std::optional<FiniteAbelianGroup> quotient; // this level / next level
    std::vector<ElementVector> labels;          // per (coset, gen) pair of this level's cover
    bool next_table_built = false;
    std::optional<std::string> power_branch;    // proper-power relator branch report
};

struct Chain {
    Presentation presentation;
    ExponentRule rule;
    std::vector<ChainLevel> levels;
    bool resource_limited = false;
    std::string limit_note;
};

/// Derived-power / prime / constant-exponent chain starting at the whole
/// group.  Levels whose kernel table would exceed max_cosets are left
/// unbuilt; the quotient data of the preceding level is still recorded and
/// the chain is marked resource_limited.
Chain build_chain(const Presentation& p, int depth, const ExponentRule& rule,
                  long long max_cosets = 1000000);

/// Relator that is a proper power: relators[index] = base^exponent with the
/// exponent maximal and >= 2.
struct ProperPower {
    int relator_index = -1;
    Word base;
    Int exponent = 0;
};

std::optional<ProperPower> find_proper_power(const Presentation& p);

Int smallest_prime_divisor(const Int& n);
Int nth_prime_above(const Int& q, int i); // i-th prime strictly greater than q

} // namespace largeness
