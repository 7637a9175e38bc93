#pragma once

// Square-product searches and the odd-power / primitive-prime theorems.
// Exponent vectors of terms live in GF(2) (one coordinate per prime plus a
// sign bit); subsets with square product are exactly the kernel combinations.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "lucas.hpp"
#include "numtheory.hpp"
#include "symbol_laws.hpp"

namespace lucaslab {

// Smallest characteristic prime of x_n with odd exponent, if any.
inline std::optional<mpz_class> odd_power_characteristic(LucasSequence& seq, unsigned long n,
                                                         const EffortBudget& effort = {}) {
    if (n == 0) throw InvalidArgument("odd_power_characteristic: n must be >= 1");
    if (n == 1) return std::nullopt;
    Factorization f = factor_term(seq, n, effort);
    if (!f.complete)
        throw IncompleteFactorization(f, "odd_power_characteristic: x_n did not factor completely");
    for (const auto& [p, e] : f.factors)
        if (e % 2 != 0 && is_characteristic(seq.params(), n, p)) return p;
    return std::nullopt;
}

// Same, restricted to primitive primes (characteristic and not dividing delta).
inline std::optional<mpz_class> odd_power_primitive(LucasSequence& seq, unsigned long n,
                                                    const EffortBudget& effort = {}) {
    if (n == 0) throw InvalidArgument("odd_power_primitive: n must be >= 1");
    if (n == 1) return std::nullopt;
    Factorization f = factor_term(seq, n, effort);
    if (!f.complete)
        throw IncompleteFactorization(f, "odd_power_primitive: x_n did not factor completely");
    mpz_class delta = to_mpz(seq.params().delta);
    for (const auto& [p, e] : f.factors)
        if (e % 2 != 0 && !mpz_divisible_p(delta.get_mpz_t(), p.get_mpz_t()) &&
            is_characteristic(seq.params(), n, p))
            return p;
    return std::nullopt;
}

// b = 3B^2 and c = C^2 - 3B^4 with B, C odd, (C, 3B) = 1 and 4C^2 > 3B^4:
// exactly the parameter shapes whose x_3 x_6 is a perfect square.
inline std::optional<std::pair<mpz_class, mpz_class>> corollary2_certificate(
    const LucasParams& P) {
    if (P.b <= 0 || P.b % 3 != 0) return std::nullopt;
    mpz_class B2 = to_mpz(P.b) / 3;
    if (!is_square(B2)) return std::nullopt;
    mpz_class B = isqrt(B2);
    if (mpz_even_p(B.get_mpz_t())) return std::nullopt;
    mpz_class C2 = to_mpz(P.c) + 3 * B2 * B2;
    if (C2 <= 0 || !is_square(C2)) return std::nullopt;
    mpz_class C = isqrt(C2);
    if (mpz_even_p(C.get_mpz_t())) return std::nullopt;
    if (gcd(C, 3 * B) != 1) return std::nullopt;
    if (4 * C2 <= 3 * B2 * B2) return std::nullopt;
    return std::make_pair(B, C);
}

struct SquareProductCertificate {
    std::vector<unsigned long> indices;
    mpz_class product, root;
};

namespace detail {

struct BitVec {
    std::vector<uint64_t> w;
    explicit BitVec(size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void flip(size_t i) { w[i / 64] ^= 1ull << (i % 64); }
    bool test(size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    void operator^=(const BitVec& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    std::optional<size_t> lowest() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return std::nullopt;
    }
};

} // namespace detail

// All nonempty subsets of {x_1, ..., x_nmax} whose product is a perfect
// square. Terms with |x_n| <= 1 are left out: a unit changes no product and a
// vanishing term makes every superset trivially square. Throws
// EnumerationOverflow when the kernel has more than 2^20 - 1 combinations.
inline std::vector<SquareProductCertificate> square_products(LucasSequence& seq,
                                                             unsigned long nmax,
                                                             const EffortBudget& effort = {}) {
    if (nmax < 1) throw InvalidArgument("square_products: nmax must be >= 1");
    std::vector<unsigned long> idx;
    std::vector<Factorization> facs;
    std::vector<bool> negative;
    for (unsigned long n = 1; n <= nmax; ++n) {
        mpz_class x = seq.term(n);
        if (x == 0 || x == 1 || x == -1) continue;
        Factorization f = factor_term(seq, n, effort);
        if (!f.complete)
            throw IncompleteFactorization(f, "square_products: a term did not factor completely");
        idx.push_back(n);
        facs.push_back(std::move(f));
        negative.push_back(x < 0);
    }
    std::map<mpz_class, size_t> col;
    for (const auto& f : facs)
        for (const auto& [p, e] : f.factors)
            if (e % 2 != 0) col.emplace(p, 0);
    size_t ncols = 1; // column 0 is the sign
    for (auto& [p, c] : col) c = ncols++;

    size_t k = idx.size();
    std::vector<std::optional<std::pair<detail::BitVec, detail::BitVec>>> pivot(ncols);
    std::vector<detail::BitVec> kernel;
    for (size_t i = 0; i < k; ++i) {
        detail::BitVec v(ncols), comb(k);
        if (negative[i]) v.flip(0);
        for (const auto& [p, e] : facs[i].factors)
            if (e % 2 != 0) v.flip(col[p]);
        comb.flip(i);
        for (;;) {
            auto low = v.lowest();
            if (!low) {
                kernel.push_back(comb);
                break;
            }
            auto& pv = pivot[*low];
            if (!pv) {
                pv.emplace(std::move(v), std::move(comb));
                break;
            }
            v ^= pv->first;
            comb ^= pv->second;
        }
    }
    if (kernel.size() > 20)
        throw EnumerationOverflow("square_products: more than 2^20 square subsets");

    std::vector<SquareProductCertificate> out;
    for (uint64_t mask = 1; mask < (uint64_t(1) << kernel.size()); ++mask) {
        detail::BitVec comb(k);
        for (size_t j = 0; j < kernel.size(); ++j)
            if (mask >> j & 1) comb ^= kernel[j];
        SquareProductCertificate cert;
        cert.product = 1;
        for (size_t i = 0; i < k; ++i)
            if (comb.test(i)) {
                cert.indices.push_back(idx[i]);
                cert.product *= seq.term(idx[i]);
            }
        cert.root = isqrt(cert.product);
        if (cert.root * cert.root != cert.product)
            throw Error("square_products: internal check failed");
        out.push_back(std::move(cert));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    });
    return out;
}

// Repunits to a given base are the terms of (base + 1, -base).
struct RepunitReport {
    unsigned long base = 0, nmax = 0;
    long long b = 0, c = 0;
    std::vector<SquareProductCertificate> certificates;
};

inline RepunitReport repunit_report(unsigned long base, unsigned long nmax,
                                    const EffortBudget& effort = {}) {
    if (base < 2) throw InvalidArgument("repunit_report: base must be >= 2");
    if (base > (1ul << 30)) throw InvalidArgument("repunit_report: base too large");
    LucasParams P((long long)base + 1, -(long long)base);
    LucasSequence seq(P);
    RepunitReport rep;
    rep.base = base;
    rep.nmax = nmax;
    rep.b = P.b;
    rep.c = P.c;
    rep.certificates = square_products(seq, nmax, effort);
    return rep;
}

// --- theorem verifiers -------------------------------------------------------

enum class TheoremId { theorem1, theorem2, theorem3, carmichael };

inline const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::theorem1: return "T1";
        case TheoremId::theorem2: return "T2";
        case TheoremId::theorem3: return "T3";
        case TheoremId::carmichael: return "carmichael";
    }
    return "?";
}

inline std::optional<TheoremId> theorem_from_name(const std::string& s) {
    for (TheoremId id : {TheoremId::theorem1, TheoremId::theorem2, TheoremId::theorem3,
                         TheoremId::carmichael})
        if (s == theorem_name(id)) return id;
    return std::nullopt;
}

struct ExceptionalCertificate {
    std::string kind; // unit_term | x2_square | phi6_three_square | x3_three_square |
                      // carmichael_exception
    mpz_class value, root;
};

struct TheoremGrid {
    std::vector<LucasParams> params;                        // T2, T3, carmichael
    std::vector<std::pair<long long, long long>> rs_pairs;  // T1: (r, s) with 2 || rs
    unsigned long nmax = 0;
};

struct TheoremCertificate {
    LawCell cell;
    ExceptionalCertificate certificate;
};

struct TheoremReport {
    LawReport report;
    std::vector<TheoremCertificate> certificates;
};

namespace detail {

struct TheoremCellOutcome {
    CellOutcome::Kind kind = CellOutcome::skip;
    std::string formula, oracle, reason;
    std::optional<ExceptionalCertificate> certificate;
};

inline std::optional<ExceptionalCertificate> theorem_exception(TheoremId id,
                                                               const LucasParams& P,
                                                               unsigned long n) {
    bool primitive = id == TheoremId::theorem1 || id == TheoremId::theorem3;
    if (id == TheoremId::carmichael) {
        if (std::abs(P.b) == 1 && P.c == 1 && n == 12)
            return ExceptionalCertificate{"carmichael_exception", mpz_class(144), mpz_class(12)};
        return std::nullopt;
    }
    if (n == 1) return ExceptionalCertificate{"unit_term", mpz_class(1), mpz_class(1)};
    if (n == 2 && is_square(to_mpz(P.b)))
        return ExceptionalCertificate{"x2_square", to_mpz(P.b), isqrt(to_mpz(P.b))};
    mpz_class b2 = to_mpz(P.b) * to_mpz(P.b);
    if (n == 6) {
        mpz_class phi6 = b2 + 3 * to_mpz(P.c);
        if (is_three_times_square(phi6))
            return ExceptionalCertificate{"phi6_three_square", phi6, isqrt(phi6 / 3)};
    }
    if (primitive && n == 3) {
        mpz_class x3 = b2 + to_mpz(P.c);
        if (is_three_times_square(x3))
            return ExceptionalCertificate{"x3_three_square", x3, isqrt(x3 / 3)};
    }
    return std::nullopt;
}

inline TheoremCellOutcome theorem_eval(TheoremId id, LucasSequence& seq, unsigned long n,
                                       const EffortBudget& effort) {
    TheoremCellOutcome out;
    const LucasParams& P = seq.params();
    try {
        std::optional<mpz_class> witness;
        switch (id) {
            case TheoremId::theorem2:
                witness = odd_power_characteristic(seq, n, effort);
                break;
            case TheoremId::theorem1:
            case TheoremId::theorem3:
                witness = odd_power_primitive(seq, n, effort);
                break;
            case TheoremId::carmichael: {
                auto ps = characteristic_primes(seq, n, effort);
                if (!ps.empty()) witness = ps.front();
                break;
            }
        }
        auto cert = theorem_exception(id, P, n);
        out.formula = cert ? "exceptional:" + cert->kind : "witness";
        out.oracle = witness ? "witness:" + witness->get_str() : "none";
        if (cert && !witness) {
            out.kind = CellOutcome::match;
            out.certificate = cert;
        } else if (!cert && witness) {
            out.kind = CellOutcome::match;
        } else {
            out.kind = CellOutcome::mismatch;
        }
    } catch (const Error& e) {
        out.kind = CellOutcome::skip;
        out.reason = e.what();
    }
    return out;
}

} // namespace detail

inline TheoremReport verify_theorem(TheoremId id, const TheoremGrid& grid, unsigned jobs = 1,
                                    const EffortBudget& effort = {}) {
    TheoremReport rep;
    rep.report.law_id = theorem_name(id);

    std::vector<LucasParams> params;
    if (id == TheoremId::theorem1) {
        for (auto [r, s] : grid.rs_pairs) {
            LawCell cell{0, 0, {{"r", r}, {"s", s}}};
            long long rs = r * s;
            if (std::gcd(r, s) != 1 || rs % 2 != 0 || rs % 4 == 0) {
                rep.report.cells_checked += 1;
                rep.report.skipped.push_back({cell, "need coprime r, s with rs exactly once even"});
                continue;
            }
            try {
                params.emplace_back(r + s, -rs);
            } catch (const Error& e) {
                rep.report.cells_checked += 1;
                rep.report.skipped.push_back({cell, e.what()});
            }
        }
    } else {
        params = grid.params;
    }
    {
        std::string g = "params=[";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) g += ",";
            g += "(" + std::to_string(params[i].original_b()) + "," + std::to_string(params[i].c) +
                 ")";
        }
        g += "] nmax=" + std::to_string(grid.nmax);
        rep.report.grid = g;
    }

    for (const LucasParams& P : params) {
        std::optional<std::string> bad;
        if (id == TheoremId::carmichael) {
            if (P.delta <= 0) bad = "need delta > 0";
        } else {
            if (!(P.delta > 0 && P.b > 0 && P.flags.c_is_2_mod_4))
                bad = "need delta > 0, b > 0, c = 2 mod 4";
        }
        if (bad) {
            rep.report.cells_checked += 1;
            rep.report.skipped.push_back({LawCell{P.original_b(), P.c, {}}, *bad});
            continue;
        }
        std::vector<unsigned long> ns;
        for (unsigned long n = 1; n <= grid.nmax; ++n) {
            if (id == TheoremId::carmichael && (n == 1 || n == 2 || n == 6)) continue;
            ns.push_back(n);
        }
        std::vector<detail::TheoremCellOutcome> outcomes(ns.size());
        detail::parallel_for(ns.size(), jobs, [&](size_t ix) {
            thread_local std::optional<LucasSequence> seq;
            if (!seq || seq->params().b != P.b || seq->params().c != P.c) seq.emplace(P);
            outcomes[ix] = detail::theorem_eval(id, *seq, ns[ix], effort);
        });
        for (size_t ix = 0; ix < ns.size(); ++ix) {
            const auto& o = outcomes[ix];
            LawCell cell{P.original_b(), P.c, {{"n", (long long)ns[ix]}}};
            rep.report.cells_checked += 1;
            if (o.kind == detail::CellOutcome::match) {
                rep.report.matches += 1;
                if (o.certificate) rep.certificates.push_back({cell, *o.certificate});
            } else if (o.kind == detail::CellOutcome::mismatch) {
                rep.report.mismatches.push_back({cell, o.formula, o.oracle});
            } else {
                rep.report.skipped.push_back({cell, o.reason});
            }
        }
    }
    return rep;
}

} // namespace lucaslab
