#include "largeness/arith.hpp"
#include "largeness/certify.hpp"
#include "largeness/chain.hpp"
#include "largeness/coset_table.hpp"
#include "largeness/graph.hpp"
#include "largeness/presentation.hpp"
#include "largeness/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using ojson = nlohmann::ordered_json;
using namespace largeness;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_INPUT = 2;
constexpr int EXIT_INCONCLUSIVE = 3;
constexpr int EXIT_RESOURCE = 4;

struct Options {
    std::string file;
    int depth = 4;
    std::string modulus_rule = "derived";
    long long max_cosets = 1000000;
    int limit_exact = 20;
    int level = -1;
    std::string format = "json";
};

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

ExponentRule parse_rule(const std::string& s, const Presentation& p) {
    if (s == "derived") return ExponentRule::derived_power();
    if (s.rfind("const:", 0) == 0) return ExponentRule::constant(Int(s.substr(6)));
    if (s == "primes") {
        auto pw = find_proper_power(p);
        if (!pw)
            throw std::invalid_argument(
                "modulus rule 'primes' needs a proper-power relator to pick the base prime; "
                "use primes:<q>");
        return ExponentRule::primes_above(smallest_prime_divisor(pw->exponent));
    }
    if (s.rfind("primes:", 0) == 0) return ExponentRule::primes_above(Int(s.substr(7)));
    throw std::invalid_argument("unknown modulus rule '" + s + "'");
}

ojson quotient_json(const FiniteAbelianGroup& g) {
    ojson q;
    ojson factors = ojson::array();
    for (const Int& f : g.invariant_factors) factors.push_back(f.str());
    q["invariant_factors"] = factors;
    q["free_rank"] = g.free_rank;
    q["d"] = g.d();
    if (g.is_finite()) q["order"] = g.order().str();
    return q;
}

ojson chain_json(const Chain& chain) {
    ojson out;
    out["command"] = "chain";
    out["generators"] = chain.presentation.gen_count();
    out["relator_length_sum"] = chain.presentation.relator_length_sum;
    ojson levels = ojson::array();
    for (const ChainLevel& lv : chain.levels) {
        ojson l;
        l["level"] = lv.level;
        l["index"] = std::to_string(lv.table.index());
        if (lv.exponent != 0) l["exponent"] = lv.exponent.str();
        if (lv.noop) l["noop"] = true;
        if (lv.quotient) l["quotient"] = quotient_json(*lv.quotient);
        if (lv.power_branch) l["power_branch"] = *lv.power_branch;
        levels.push_back(std::move(l));
    }
    out["levels"] = std::move(levels);
    out["resource_limited"] = chain.resource_limited;
    if (chain.resource_limited) out["limit_note"] = chain.limit_note;

    ChainDiagnostics diag = chain_diagnostics(chain);
    ojson rows = ojson::array();
    for (const ChainDiagnosticsRow& r : diag.rows) {
        ojson row;
        row["level"] = r.level;
        row["index"] = r.index.str();
        row["quotient_order"] = r.quotient_order.str();
        row["quotient_d"] = r.quotient_d;
        row["log_order_over_index"] = r.log_ratio;
        row["d_over_index"] = rat_string(r.d_ratio);
        rows.push_back(std::move(row));
    }
    ojson d;
    d["rows"] = std::move(rows);
    d["log_precision"] = diag.log_precision;
    d["log_ratio_nondecreasing"] = diag.log_ratio_nondecreasing;
    d["d_ratio_positive"] = diag.d_ratio_positive;
    out["diagnostics"] = std::move(d);
    return out;
}

ojson certificate_json(const CertificateReport& r) {
    ojson out;
    out["command"] = "certify";
    ojson in;
    in["s_size"] = r.s_size.str();
    in["rel_length_sum"] = r.rel_length_sum.str();
    in["idx_h"] = r.idx_h.str();
    in["idx_hj"] = r.idx_hj.str();
    in["d_jk"] = r.d_jk.str();
    out["inputs"] = std::move(in);
    if (r.first_term_vacuous) {
        out["first_term"] = "vacuous";
    } else {
        out["first_term"] = rat_string(r.first_term);
        out["first_term_decimal"] = rat_decimal(r.first_term);
    }
    out["second_term"] = rat_string(r.second_term);
    out["threshold"] = rat_string(r.threshold);
    out["threshold_decimal"] = rat_decimal(r.threshold);
    out["passed"] = r.passed;
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

ojson witness_json(const WitnessReport& rep) {
    ojson out;
    out["command"] = "witness";
    out["ordering_kind"] = rep.ordering_kind;
    ojson rows = ojson::array();
    for (const WitnessLevelReport& lr : rep.levels) {
        ojson row;
        row["n"] = lr.row.n;
        row["boundary"] = lr.row.boundary;
        row["one_cells"] = lr.row.one_cells;
        row["intersection_components"] = lr.row.intersection_components;
        row["wt_low"] = lr.row.wt_low.str();
        row["wt_high"] = lr.row.wt_high.str();
        row["chi"] = lr.row.chi;
        if (!rep.resource_limited) row["lifted_chi"] = lr.lifted_chi;
        rows.push_back(std::move(row));
    }
    out["levels"] = std::move(rows);
    out["verdict"] = rep.success ? "SUCCESS" : "INCONCLUSIVE";
    out["note"] = rep.note;
    if (rep.chosen_n >= 0) {
        out["chosen_n"] = rep.chosen_n;
        out["chi"] = rep.chi;
        if (rep.success) out["certified_free_rank"] = rep.certified_free_rank.str();
        out["decomposition_graph_dot"] = rep.y_dot;
        out["lifted_graph_dot"] = rep.lift_dot;
        out["valence_diagnostic"] = rep.valence_diagnostic;
    }
    return out;
}

int pick_witness_level(const Chain& chain, int requested) {
    if (requested >= 1) return requested;
    for (int h = static_cast<int>(chain.levels.size()) - 1; h >= 1; --h) {
        const ChainLevel& hl = chain.levels[static_cast<size_t>(h - 1)];
        const ChainLevel& jl = chain.levels[static_cast<size_t>(h)];
        if (hl.quotient && jl.quotient && jl.table.index() >= 2) return h;
    }
    return 1;
}

int cmd_chain(const Options& opt) {
    Presentation p = load_presentation(opt.file);
    Chain chain = build_chain(p, opt.depth, parse_rule(opt.modulus_rule, p), opt.max_cosets);
    if (opt.format == "text") {
        for (const ChainLevel& lv : chain.levels) {
            std::cout << "level " << lv.level << ": index " << lv.table.index();
            if (lv.quotient)
                std::cout << ", next quotient d=" << lv.quotient->d()
                          << " order=" << lv.quotient->order().str();
            if (lv.noop) std::cout << " (no-op step)";
            std::cout << "\n";
        }
        if (chain.resource_limited) std::cout << "resource limited: " << chain.limit_note << "\n";
    } else {
        std::cout << chain_json(chain).dump(2) << "\n";
    }
    return chain.resource_limited ? EXIT_RESOURCE : EXIT_OK;
}

int cmd_certify(const Options& opt, const std::optional<std::vector<std::string>>& explicit_args) {
    CertificateReport rep;
    if (explicit_args) {
        const auto& v = *explicit_args;
        rep = certificate_check(Int(v[0]), Int(v[1]), Int(v[2]), Int(v[3]), Int(v[4]));
    } else {
        if (opt.file.empty())
            throw std::invalid_argument("certify needs either --triple or a presentation file");
        Presentation p = load_presentation(opt.file);
        Chain chain = build_chain(p, opt.depth, parse_rule(opt.modulus_rule, p), opt.max_cosets);
        int h = pick_witness_level(chain, opt.level);
        if (h + 1 > static_cast<int>(chain.levels.size()))
            throw std::invalid_argument("chain too short for the requested level");
        const ChainLevel& hl = chain.levels[static_cast<size_t>(h - 1)];
        const ChainLevel& jl = chain.levels[static_cast<size_t>(h)];
        if (!hl.quotient || !jl.quotient)
            throw std::invalid_argument("missing quotient data at the requested level");
        if (p.relator_length_sum < 1)
            throw std::invalid_argument("certificate needs a presentation with relators (L >= 1)");
        rep = certificate_check(p.gen_count(), p.relator_length_sum, hl.table.index(),
                                hl.quotient->order(), jl.quotient->d());
    }
    if (opt.format == "text") {
        std::cout << "threshold " << rat_string(rep.threshold) << ", d(J/K) " << rep.d_jk.str()
                  << ": " << (rep.passed ? "PASS" : "not conclusive") << "\n";
    } else {
        std::cout << certificate_json(rep).dump(2) << "\n";
    }
    return rep.passed ? EXIT_OK : EXIT_INCONCLUSIVE;
}

int cmd_witness(const Options& opt) {
    Presentation p = load_presentation(opt.file);
    Chain chain = build_chain(p, opt.depth, parse_rule(opt.modulus_rule, p), opt.max_cosets);
    int h = pick_witness_level(chain, opt.level);
    WitnessInstance inst = witness_instance_from_chain(chain, h);
    WitnessReport rep = largeness_witness(inst, opt.limit_exact);
    if (opt.format == "text") {
        std::cout << (rep.success ? "SUCCESS" : "INCONCLUSIVE") << ": " << rep.note << "\n";
    } else {
        ojson out = witness_json(rep);
        out["h_level"] = h;
        out["j_index"] = inst.j_table.index();
        std::cout << out.dump(2) << "\n";
    }
    if (rep.resource_limited) return EXIT_RESOURCE;
    return rep.success ? EXIT_OK : EXIT_INCONCLUSIVE;
}

int cmd_graph(const Options& opt) {
    Presentation p = load_presentation(opt.file);
    Chain chain = build_chain(p, opt.depth, parse_rule(opt.modulus_rule, p), opt.max_cosets);
    int level = opt.level >= 1 ? opt.level : static_cast<int>(chain.levels.size());
    if (level > static_cast<int>(chain.levels.size()))
        throw std::invalid_argument("requested level beyond the built chain");
    const ChainLevel& lv = chain.levels[static_cast<size_t>(level - 1)];
    LabeledMultigraph g = cayley_graph(lv.table);

    if (opt.format == "dot") {
        std::cout << graph_dot(g, p.gens);
        return EXIT_OK;
    }

    ojson out;
    out["command"] = "graph";
    out["level"] = level;
    out["vertices"] = g.vertex_count;
    out["edges"] = static_cast<long long>(g.edges.size());
    out["table"] = ojson::parse(table_json(lv.table, p.gens));

    VertexOrdering constructed;
    std::string kind;
    if (g.vertex_count <= opt.limit_exact) {
        constructed = exact_cutwidth(g, opt.limit_exact).ordering;
        kind = "exact";
    } else if (level >= 2) {
        WitnessInstance inst = witness_instance_from_chain(chain, level - 1);
        CharacterOrderingResult inner = character_ordering(inst.h_quotient, inst.h_sigma_images);
        constructed = composite_ordering(g, inst.h_index, inner.ordering);
        kind = "composite";
        ojson cmp;
        cmp["inner_width"] = inner.ordering.width;
        if (!inner.degenerate) cmp["inner_bound"] = rat_string(inner.bound);
        out["inner_ordering"] = std::move(cmp);
    } else {
        std::vector<int> nat(static_cast<size_t>(g.vertex_count));
        for (int i = 0; i < g.vertex_count; ++i) nat[static_cast<size_t>(i)] = i;
        constructed = make_ordering(g, nat);
        kind = "natural";
    }
    out["constructed_ordering_kind"] = kind;
    out["constructed_width"] = constructed.width;
    out["constructed_ordering"] = constructed.order;
    if (g.vertex_count <= opt.limit_exact) {
        out["exact_width"] = exact_cutwidth(g, opt.limit_exact).width;
        if (g.vertex_count >= 2) {
            out["cheeger"] = rat_string(exact_cheeger(g, opt.limit_exact));
            out["cheeger_width_bound"] = rat_string(cheeger_from_width_bound(g, constructed));
        }
    }
    std::cout << out.dump(2) << "\n";
    return EXIT_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"largeness: subgroup chains, Cayley graph width data, and largeness "
                 "certificates for finitely presented groups"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> triple;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        sub->add_option("--depth", opt.depth, "chain depth (number of levels)");
        sub->add_option("--modulus-rule", opt.modulus_rule,
                        "derived | primes | primes:<q> | const:<n>");
        sub->add_option("--max-cosets", opt.max_cosets, "coset table size limit");
        sub->add_option("--limit-exact", opt.limit_exact, "exact-oracle vertex limit");
        sub->add_option("--level", opt.level, "chain level selection");
        sub->add_option("--format", opt.format, "json | text | dot");
        auto* f = sub->add_option("file", opt.file, "presentation file");
        if (needs_file) f->required();
    };

    CLI::App* chain_cmd = app.add_subcommand("chain", "build a subgroup chain and report it");
    add_common(chain_cmd, true);
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "evaluate the explicit largeness certificate");
    add_common(certify_cmd, false);
    certify_cmd
        ->add_option("--triple", triple,
                     "explicit inputs: |S| L [G:H] [H:J] d(J/K)")
        ->expected(5);
    CLI::App* witness_cmd =
        app.add_subcommand("witness", "run the free-quotient witness pipeline");
    add_common(witness_cmd, true);
    CLI::App* graph_cmd = app.add_subcommand("graph", "Cayley graph statistics of a chain level");
    add_common(graph_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_INPUT;
    }

    try {
        if (app.got_subcommand(chain_cmd)) return cmd_chain(opt);
        if (app.got_subcommand(certify_cmd))
            return cmd_certify(opt, triple.empty()
                                        ? std::nullopt
                                        : std::optional<std::vector<std::string>>(triple));
        if (app.got_subcommand(witness_cmd)) return cmd_witness(opt);
        if (app.got_subcommand(graph_cmd)) return cmd_graph(opt);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return EXIT_RESOURCE;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INPUT;
    }
    return EXIT_INPUT;
}
