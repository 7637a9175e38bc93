#pragma once

// JSON views of the report structures. Big integers are rendered as decimal
// strings so output is exact and byte-stable across platforms.

#include <string>
#include <vector>

#include "json.hpp"

#include "cyclotomic.hpp"
#include "lucas.hpp"
#include "numtheory.hpp"
#include "parity_witness.hpp"
#include "square_hunter.hpp"
#include "symbol_laws.hpp"
#include "version.hpp"

namespace lucaslab {

using ordered_json = nlohmann::ordered_json;

inline std::string to_decimal(const mpz_class& z) { return z.get_str(); }
inline std::string to_decimal(const mpq_class& q) { return q.get_str(); }

inline ordered_json json_params(const LucasParams& P) {
    return ordered_json{{"b", P.original_b()}, {"c", P.c}, {"delta", P.delta}};
}

inline ordered_json json_factorization(const Factorization& f) {
    ordered_json factors = ordered_json::array();
    for (const auto& [p, e] : f.factors)
        factors.push_back(ordered_json{{"p", to_decimal(p)}, {"e", e}});
    ordered_json j{{"factors", factors}, {"complete", f.complete}};
    if (!f.complete) j["cofactor"] = to_decimal(f.cofactor);
    return j;
}

inline ordered_json json_rank(const RankRecord& r) {
    ordered_json j{{"p", to_decimal(r.p)}};
    j["n_p"] = r.n_p ? ordered_json(*r.n_p) : ordered_json(nullptr);
    j["r_p"] = r.r_p ? ordered_json(*r.r_p) : ordered_json(nullptr);
    j["e_p"] = r.e_p ? ordered_json(*r.e_p) : ordered_json(nullptr);
    return j;
}

inline ordered_json json_cell(const LawCell& c) {
    ordered_json j{{"b", c.b}, {"c", c.c}};
    for (const auto& [name, value] : c.indices) j[name] = value;
    return j;
}

inline ordered_json json_law_report(const LawReport& r) {
    ordered_json mismatches = ordered_json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back(ordered_json{
            {"cell", json_cell(m.cell)}, {"formula", m.formula}, {"oracle", m.oracle}});
    ordered_json skipped = ordered_json::array();
    for (const auto& s : r.skipped)
        skipped.push_back(ordered_json{{"cell", json_cell(s.cell)}, {"reason", s.reason}});
    return ordered_json{{"law", r.law_id},          {"grid", r.grid},
                        {"cells_checked", r.cells_checked}, {"matches", r.matches},
                        {"mismatches", mismatches}, {"skipped", skipped}};
}

inline ordered_json json_exceptional(const ExceptionalCertificate& c) {
    return ordered_json{
        {"kind", c.kind}, {"value", to_decimal(c.value)}, {"root", to_decimal(c.root)}};
}

inline ordered_json json_theorem_report(const TheoremReport& r) {
    ordered_json certs = ordered_json::array();
    for (const auto& c : r.certificates)
        certs.push_back(
            ordered_json{{"cell", json_cell(c.cell)}, {"certificate", json_exceptional(c.certificate)}});
    ordered_json j = json_law_report(r.report);
    j["certificates"] = certs;
    return j;
}

inline ordered_json json_parity_witness(const ParityWitness& w) {
    return ordered_json{{"m", w.m},
                        {"u", to_decimal(w.u)},
                        {"u_prime", to_decimal(w.u_prime)},
                        {"difference", w.difference}};
}

inline ordered_json json_prop53_witness(const Prop53Witness& w) {
    return ordered_json{{"p", w.p},
                        {"n", w.n},
                        {"e", w.e},
                        {"m", w.m},
                        {"eval_modulus", w.eval_modulus},
                        {"u", to_decimal(w.u)},
                        {"u_prime", to_decimal(w.u_prime)},
                        {"base_u", to_decimal(w.base_u)},
                        {"difference", w.difference}};
}

inline ordered_json json_split(const CharacteristicSplit& s) {
    return ordered_json{{"n", s.n},
                        {"x", to_decimal(s.x)},
                        {"characteristic", to_decimal(s.y)},
                        {"rest", to_decimal(s.z)}};
}

inline ordered_json json_anatomy(const AnatomyReport& r) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : r.noncharacteristic)
        entries.push_back(ordered_json{{"p", to_decimal(e.p)},
                                       {"n_p", e.n_p},
                                       {"exponent", e.exponent},
                                       {"index_ratio_is_p_power", e.index_ratio_is_p_power},
                                       {"exponent_ok", e.exponent_ok}});
    ordered_json j{{"n", r.n},
                   {"phi", to_decimal(r.phi)},
                   {"noncharacteristic", entries},
                   {"index_ratios_ok", r.index_ratios_ok},
                   {"exponents_ok", r.exponents_ok},
                   {"count_ok", r.count_ok}};
    j["phi_shape_ok"] = r.phi_shape_ok ? ordered_json(*r.phi_shape_ok) : ordered_json(nullptr);
    return j;
}

inline ordered_json json_square_certificate(const SquareProductCertificate& c) {
    return ordered_json{{"indices", c.indices},
                        {"product", to_decimal(c.product)},
                        {"root", to_decimal(c.root)}};
}

inline ordered_json json_square_certificates(const std::vector<SquareProductCertificate>& cs) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cs) arr.push_back(json_square_certificate(c));
    return arr;
}

inline ordered_json json_repunit_report(const RepunitReport& r) {
    return ordered_json{{"base", r.base},
                        {"nmax", r.nmax},
                        {"b", r.b},
                        {"c", r.c},
                        {"certificates", json_square_certificates(r.certificates)}};
}

} // namespace lucaslab
