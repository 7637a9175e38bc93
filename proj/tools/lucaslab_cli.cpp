// lucaslab command line: sequences, cyclotomic parts, ranks, symbol laws,
// parity witnesses, theorem sweeps and square-product searches.
//
// Exit codes: 0 success, 1 a verification sweep found mismatches,
// 2 usage or domain errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "lucaslab/lucaslab.hpp"

namespace {

using lucaslab::ordered_json;

struct Options {
    std::string format = "text";
    unsigned jobs = 0; // 0 = hardware concurrency
    lucaslab::EffortBudget effort;
};

void emit(const Options& opt, const ordered_json& j) {
    std::cout << j.dump(2) << "\n";
}

lucaslab::LucasParams parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw lucaslab::InvalidArgument("expected a pair like \"3,-2\": " + s);
    return lucaslab::LucasParams(std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1)));
}

std::pair<long long, long long> parse_ll_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw lucaslab::InvalidArgument("expected a pair like \"10,1\": " + s);
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

int report_exit(const lucaslab::LawReport& r) { return r.mismatches.empty() ? 0 : 1; }

void print_law_text(const lucaslab::LawReport& r) {
    std::cout << "law " << r.law_id << " " << r.grid << "\n";
    std::cout << "cells " << r.cells_checked << " matches " << r.matches << " mismatches "
              << r.mismatches.size() << " skipped " << r.skipped.size() << "\n";
    for (const auto& m : r.mismatches) {
        std::cout << "mismatch b=" << m.cell.b << " c=" << m.cell.c;
        for (const auto& [k, v] : m.cell.indices) std::cout << " " << k << "=" << v;
        std::cout << ": formula " << m.formula << " oracle " << m.oracle << "\n";
    }
}

int run_seq(const Options& opt, long long b, long long c, unsigned long from, unsigned long to,
            const std::string& mod) {
    lucaslab::LucasParams P(b, c);
    ordered_json terms = ordered_json::array();
    std::optional<mpz_class> m;
    if (!mod.empty()) m = mpz_class(mod);
    lucaslab::LucasSequence seq(P);
    for (unsigned long n = from; n <= to; ++n) {
        mpz_class v = m ? lucaslab::term_mod(P, n, *m) : seq.term(n);
        if (opt.format == "json")
            terms.push_back(ordered_json{{"n", n}, {"value", lucaslab::to_decimal(v)}});
        else if (opt.format == "csv")
            std::cout << n << "," << v.get_str() << "\n";
        else
            std::cout << "x_" << n << " = " << v.get_str() << "\n";
    }
    if (opt.format == "json") {
        ordered_json j{{"params", lucaslab::json_params(P)}};
        if (m) j["mod"] = m->get_str();
        j["terms"] = terms;
        emit(opt, j);
    }
    return 0;
}

int run_phi(const Options& opt, long long b, long long c, unsigned long from, unsigned long to) {
    lucaslab::LucasParams P(b, c);
    lucaslab::LucasSequence seq(P);
    ordered_json values = ordered_json::array();
    for (unsigned long n = from; n <= to; ++n) {
        mpz_class v = lucaslab::phi_term(seq, n);
        if (opt.format == "json")
            values.push_back(ordered_json{{"n", n}, {"value", lucaslab::to_decimal(v)}});
        else if (opt.format == "csv")
            std::cout << n << "," << v.get_str() << "\n";
        else
            std::cout << "phi_" << n << " = " << v.get_str() << "\n";
    }
    if (opt.format == "json")
        emit(opt, ordered_json{{"params", lucaslab::json_params(P)}, {"phi", values}});
    return 0;
}

int run_ranks(const Options& opt, long long b, long long c, unsigned long pmax) {
    lucaslab::LucasParams P(b, c);
    ordered_json ranks = ordered_json::array();
    for (unsigned long p = 2; p <= pmax; ++p) {
        if (!lucaslab::is_probable_prime(mpz_class(p))) continue;
        lucaslab::RankRecord r = lucaslab::rank_of_apparition(P, mpz_class(p));
        if (opt.format == "json") {
            ranks.push_back(lucaslab::json_rank(r));
        } else if (opt.format == "csv") {
            std::cout << p << ",";
            if (r.n_p) std::cout << *r.n_p;
            std::cout << ",";
            if (r.r_p) std::cout << *r.r_p;
            std::cout << ",";
            if (r.e_p) std::cout << *r.e_p;
            std::cout << "\n";
        } else {
            std::cout << "p=" << p;
            if (r.absent())
                std::cout << " rank absent (p | c)\n";
            else
                std::cout << " n_p=" << *r.n_p << " r_p=" << *r.r_p << " e_p=" << *r.e_p << "\n";
        }
    }
    if (opt.format == "json")
        emit(opt, ordered_json{{"params", lucaslab::json_params(P)}, {"ranks", ranks}});
    return 0;
}

int run_jacobi(const Options& opt, long long b, long long c, unsigned long k, unsigned long m,
               const std::string& method) {
    lucaslab::LucasParams P(b, c);
    lucaslab::LucasSequence seq(P);
    int value = 0;
    std::string symbol;
    if (method == "direct") {
        value = lucaslab::symbol_direct(seq, k, m);
        symbol = "(x_k/x_m)";
    } else if (method == "theorem4") {
        value = lucaslab::symbol_theorem4(P, k, m);
        symbol = "(x_k/x_m)";
    } else if (method == "eq4") {
        mpz_class u = m == 1 ? mpz_class(0)
                             : lucaslab::mod_inverse(mpz_class(k), mpz_class(m));
        value = lucaslab::symbol_eq4(mpz_class(k), mpz_class(m), u);
        symbol = "(x_k/x_m)";
    } else if (method == "prop61") {
        value = lucaslab::symbol_prop61(P, k, m);
        symbol = "(x_k/x_m)";
    } else if (method == "cor62" || method == "cor63" || method == "cor64") {
        using lucaslab::CorWhich;
        if (m % 2 == 0) {
            symbol = "(phi_m/x_k)";
            if (method == "cor62")
                value = lucaslab::symbol_cor62(P, m, k, CorWhich::phi_over_x_even);
            else if (method == "cor63")
                value = lucaslab::symbol_cor63(P, k, m, CorWhich::phi_over_x_even);
            else
                value = lucaslab::symbol_cor64(P, k, m, CorWhich::phi_over_x_even);
        } else {
            symbol = "(x_k/phi_m)";
            CorWhich w = lucaslab::detail::odd_prime_power(m).second
                             ? CorWhich::x_over_phi_primepower
                             : CorWhich::x_over_phi_composite;
            if (method == "cor62")
                value = lucaslab::symbol_cor62(P, k, m, w);
            else if (method == "cor63")
                value = lucaslab::symbol_cor63(P, k, m, w);
            else
                value = lucaslab::symbol_cor64(P, k, m, w);
        }
    } else {
        throw lucaslab::InvalidArgument("unknown method: " + method);
    }
    if (opt.format == "json")
        emit(opt, ordered_json{{"params", lucaslab::json_params(P)},
                               {"method", method},
                               {"symbol", symbol},
                               {"k", k},
                               {"m", m},
                               {"value", value}});
    else
        std::cout << value << "\n";
    return 0;
}

int run_law_verb(const Options& opt, const std::string& law, const std::vector<std::string>& pairs,
                 unsigned long num_max, unsigned long den_max) {
    auto id = lucaslab::law_from_name(law);
    if (!id) throw lucaslab::InvalidArgument("unknown law: " + law);
    lucaslab::LawGrid grid;
    for (const auto& s : pairs) grid.params.push_back(parse_pair(s));
    if (grid.params.empty()) throw lucaslab::InvalidArgument("need at least one --pair");
    grid.num_max = num_max;
    grid.den_max = den_max;
    lucaslab::LawReport r = lucaslab::run_law(*id, grid, resolve_jobs(opt.jobs));
    if (opt.format == "json") {
        emit(opt, lucaslab::json_law_report(r));
    } else if (opt.format == "csv") {
        std::cout << "law,cells,matches,mismatches,skipped\n";
        std::cout << r.law_id << "," << r.cells_checked << "," << r.matches << ","
                  << r.mismatches.size() << "," << r.skipped.size() << "\n";
    } else {
        print_law_text(r);
    }
    return report_exit(r);
}

int run_witness(const Options& opt, const std::string& kind, unsigned long m, unsigned long p,
                unsigned long n, unsigned long e, unsigned long scan_bound) {
    if (kind == "prop41") {
        lucaslab::ParityWitness w = lucaslab::prop41_witness(m, scan_bound);
        if (opt.format == "json")
            emit(opt, lucaslab::json_parity_witness(w));
        else
            std::cout << "m=" << w.m << " u=" << w.u.get_str() << " u'=" << w.u_prime.get_str()
                      << " N-difference " << w.difference << "\n";
        return 0;
    }
    if (kind == "prop55") {
        lucaslab::ParityWitness w = lucaslab::prop55_witness(p, e);
        if (opt.format == "json")
            emit(opt, lucaslab::json_parity_witness(w));
        else
            std::cout << "m=" << w.m << " u=" << w.u.get_str() << " u'=" << w.u_prime.get_str()
                      << " N-difference " << w.difference << "\n";
        return w.difference == 1 ? 0 : 1;
    }
    if (kind == "prop53") {
        lucaslab::Prop53Witness w = lucaslab::prop53_witness(p, n, e, scan_bound);
        if (opt.format == "json")
            emit(opt, lucaslab::json_prop53_witness(w));
        else
            std::cout << "m=" << w.m << " eval_modulus=" << w.eval_modulus << " u="
                      << w.u.get_str() << " u'=" << w.u_prime.get_str() << " N-difference "
                      << w.difference << "\n";
        return 0;
    }
    throw lucaslab::InvalidArgument("unknown witness kind: " + kind);
}

int run_theorem(const Options& opt, const std::string& name, const std::vector<std::string>& pairs,
                const std::vector<std::string>& rs, unsigned long nmax) {
    auto id = lucaslab::theorem_from_name(name);
    if (!id) throw lucaslab::InvalidArgument("unknown theorem: " + name);
    lucaslab::TheoremGrid grid;
    for (const auto& s : pairs) grid.params.push_back(parse_pair(s));
    for (const auto& s : rs) grid.rs_pairs.push_back(parse_ll_pair(s));
    if (*id == lucaslab::TheoremId::theorem1 && grid.rs_pairs.empty())
        throw lucaslab::InvalidArgument("theorem T1 needs at least one --rs pair");
    if (*id != lucaslab::TheoremId::theorem1 && grid.params.empty())
        throw lucaslab::InvalidArgument("need at least one --pair");
    grid.nmax = nmax;
    lucaslab::TheoremReport r =
        lucaslab::verify_theorem(*id, grid, resolve_jobs(opt.jobs), opt.effort);
    if (opt.format == "json") {
        emit(opt, lucaslab::json_theorem_report(r));
    } else {
        print_law_text(r.report);
        for (const auto& c : r.certificates) {
            std::cout << "exceptional b=" << c.cell.b << " c=" << c.cell.c;
            for (const auto& [k, v] : c.cell.indices) std::cout << " " << k << "=" << v;
            std::cout << ": " << c.certificate.kind << " value "
                      << c.certificate.value.get_str() << " root "
                      << c.certificate.root.get_str() << "\n";
        }
    }
    return report_exit(r.report);
}

int run_squares(const Options& opt, long long b, long long c, unsigned long nmax) {
    lucaslab::LucasParams P(b, c);
    lucaslab::LucasSequence seq(P);
    auto certs = lucaslab::square_products(seq, nmax, opt.effort);
    if (opt.format == "json") {
        emit(opt, ordered_json{{"params", lucaslab::json_params(P)},
                               {"nmax", nmax},
                               {"certificates", lucaslab::json_square_certificates(certs)}});
    } else {
        std::cout << "square products up to n=" << nmax << ": " << certs.size() << "\n";
        for (const auto& cert : certs) {
            std::cout << "indices";
            for (unsigned long i : cert.indices) std::cout << " " << i;
            std::cout << " product " << cert.product.get_str() << " root "
                      << cert.root.get_str() << "\n";
        }
    }
    return 0;
}

int run_repunits(const Options& opt, unsigned long base, unsigned long nmax) {
    lucaslab::RepunitReport r = lucaslab::repunit_report(base, nmax, opt.effort);
    if (opt.format == "json") {
        emit(opt, lucaslab::json_repunit_report(r));
    } else {
        std::cout << "repunits base " << r.base << " up to n=" << r.nmax << ": "
                  << r.certificates.size() << " square products\n";
        for (const auto& cert : r.certificates) {
            std::cout << "indices";
            for (unsigned long i : cert.indices) std::cout << " " << i;
            std::cout << " product " << cert.product.get_str() << " root "
                      << cert.root.get_str() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lucaslab: Lucas sequences, cyclotomic parts and symbol laws"};
    app.set_version_flag("--version", lucaslab::version);
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("LUCASLAB_EFFORT"))
        opt.effort.rho_iterations = std::strtoul(env, nullptr, 10);
    app.add_option("--format", opt.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", opt.jobs, "Worker threads for sweeps (default: all cores)");
    app.add_option("--seed", opt.effort.seed, "Seed for the factoring RNG");
    unsigned long effort_flag = 0;
    auto* effort_opt =
        app.add_option("--effort", effort_flag, "Pollard rho iteration budget per factor");

    long long b = 1, c = 1;
    unsigned long from = 0, to = 10, pmax = 100, k = 1, m = 1, n = 0, e = 1, p = 3;
    unsigned long nmax = 20, num_max = 20, den_max = 20, base = 10, scan_bound = 10000;
    std::string mod, method = "direct", law, kind, theorem;
    std::vector<std::string> pairs, rs;

    auto add_bc = [&](CLI::App* sub) {
        sub->add_option("--b", b, "Parameter b")->required();
        sub->add_option("--c", c, "Parameter c")->required();
    };

    auto* seq_cmd = app.add_subcommand("seq", "Print terms x_n");
    add_bc(seq_cmd);
    seq_cmd->add_option("--from", from, "First index");
    seq_cmd->add_option("--to", to, "Last index");
    seq_cmd->add_option("--mod", mod, "Reduce terms modulo this integer");

    auto* phi_cmd = app.add_subcommand("phi", "Print cyclotomic parts phi_n");
    add_bc(phi_cmd);
    unsigned long phi_from = 1;
    phi_cmd->add_option("--from", phi_from, "First index");
    phi_cmd->add_option("--to", to, "Last index");

    auto* ranks_cmd = app.add_subcommand("ranks", "Ranks of apparition for primes up to a bound");
    add_bc(ranks_cmd);
    ranks_cmd->add_option("--pmax", pmax, "Largest prime to examine");

    auto* jac_cmd = app.add_subcommand("jacobi", "Evaluate a Jacobi symbol of Lucas data");
    add_bc(jac_cmd);
    jac_cmd->add_option("--k", k, "Numerator index")->required();
    jac_cmd->add_option("--m", m, "Denominator index")->required();
    jac_cmd->add_option("--method", method,
                        "direct, theorem4, eq4, prop61, cor62, cor63 or cor64");

    auto* law_cmd = app.add_subcommand("law", "Sweep a symbol law against the direct oracle");
    law_cmd->add_option("--law", law, "Law identifier")->required();
    law_cmd->add_option("--pair", pairs, "Parameter pair \"b,c\" (repeatable)");
    law_cmd->add_option("--num-max", num_max, "Bound for the first index");
    law_cmd->add_option("--den-max", den_max, "Bound for the second index");

    auto* wit_cmd = app.add_subcommand("witness", "Parity witnesses for N(m, u)");
    wit_cmd->add_option("--kind", kind, "prop41, prop53 or prop55")->required();
    wit_cmd->add_option("--m", m, "Modulus (prop41)");
    wit_cmd->add_option("--p", p, "Odd prime (prop53, prop55)");
    wit_cmd->add_option("--n", n, "n with m = p^e n (prop53)");
    wit_cmd->add_option("--e", e, "Exponent e");
    wit_cmd->add_option("--scan-bound", scan_bound, "Fallback scan bound");

    auto* thm_cmd = app.add_subcommand("theorem", "Verify a theorem over a parameter grid");
    thm_cmd->add_option("name", theorem, "T1, T2, T3 or carmichael")->required();
    thm_cmd->add_option("--pair", pairs, "Parameter pair \"b,c\" (repeatable)");
    thm_cmd->add_option("--rs", rs, "Pair \"r,s\" for T1 (repeatable)");
    thm_cmd->add_option("--nmax", nmax, "Largest index to check");

    auto* sq_cmd = app.add_subcommand("squares", "Subsets of terms with square product");
    add_bc(sq_cmd);
    sq_cmd->add_option("--nmax", nmax, "Largest index");

    auto* rep_cmd = app.add_subcommand("repunits", "Square products among repunits");
    rep_cmd->add_option("--base", base, "Repunit base");
    rep_cmd->add_option("--nmax", nmax, "Largest index");

    // let --format and friends appear after the subcommand's own options
    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }
    if (*effort_opt) opt.effort.rho_iterations = effort_flag;

    try {
        if (app.got_subcommand(seq_cmd)) return run_seq(opt, b, c, from, to, mod);
        if (app.got_subcommand(phi_cmd)) return run_phi(opt, b, c, phi_from, to);
        if (app.got_subcommand(ranks_cmd)) return run_ranks(opt, b, c, pmax);
        if (app.got_subcommand(jac_cmd)) return run_jacobi(opt, b, c, k, m, method);
        if (app.got_subcommand(law_cmd)) return run_law_verb(opt, law, pairs, num_max, den_max);
        if (app.got_subcommand(wit_cmd)) return run_witness(opt, kind, m, p, n, e, scan_bound);
        if (app.got_subcommand(thm_cmd)) return run_theorem(opt, theorem, pairs, rs, nmax);
        if (app.got_subcommand(sq_cmd)) return run_squares(opt, b, c, nmax);
        if (app.got_subcommand(rep_cmd)) return run_repunits(opt, base, nmax);
    } catch (const lucaslab::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
