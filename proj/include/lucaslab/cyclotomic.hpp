#pragma once

// Cyclotomic parts phi_n = prod_{d|n} x_d^{mu(n/d)}, characteristic /
// primitive prime classification and the structural anatomy of the
// non-characteristic part of phi_n.

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "lucas.hpp"
#include "numtheory.hpp"

namespace lucaslab {

// Exact phi_n with its true sign. phi_1 = x_1 = 1.
inline mpz_class phi_term(LucasSequence& seq, unsigned long n) {
    if (n == 0) throw InvalidArgument("phi_term: n must be >= 1");
    mpz_class num = 1, den = 1;
    for (const mpz_class& dz : divisors(mpz_class(n))) {
        unsigned long d = mpz_get_ui(dz.get_mpz_t());
        int mu = moebius(mpz_class(n / d));
        if (mu == 0) continue;
        if (seq.params().term_is_zero(d))
            throw DegenerateTerm("phi_term: a required term vanishes");
        if (mu == 1) num *= seq.term(d);
        else den *= seq.term(d);
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw Error("phi_term: non-integral cyclotomic part");
    return q;
}

// Least divisor d of n with p | x_d. When p | x_n this equals the rank of
// apparition n_p, since the index set of p is the set of multiples of n_p.
inline unsigned long apparition_index_dividing(const LucasParams& P, unsigned long n,
                                               const mpz_class& p) {
    for (const mpz_class& dz : divisors(mpz_class(n))) {
        unsigned long d = mpz_get_ui(dz.get_mpz_t());
        if (term_mod(P, d, p) == 0) return d;
    }
    throw NotFound("apparition_index_dividing: p does not divide x_n");
}

// p is a characteristic prime factor of x_n iff p | x_n and p | x_m for no
// 1 <= m < n; equivalently p | x_n and p misses every maximal proper divisor.
inline bool is_characteristic(const LucasParams& P, unsigned long n, const mpz_class& p) {
    if (term_mod(P, n, p) != 0) return false;
    Factorization nf = factorize(mpz_class(n));
    for (const auto& [q, e] : nf.factors)
        if (term_mod(P, n / mpz_get_ui(q.get_mpz_t()), p) == 0) return false;
    return true;
}

// Characteristic primes of x_n, read off the factorization of phi_n.
inline std::vector<mpz_class> characteristic_primes(LucasSequence& seq, unsigned long n,
                                                    const EffortBudget& effort = {}) {
    std::vector<mpz_class> out;
    if (n == 1) return out;
    mpz_class phi = phi_term(seq, n);
    if (phi == 0) throw DegenerateTerm("characteristic_primes: phi_n = 0");
    Factorization f = factorize(phi, effort);
    if (!f.complete)
        throw IncompleteFactorization(f, "characteristic_primes: phi_n did not factor completely");
    for (const auto& [p, e] : f.factors)
        if (is_characteristic(seq.params(), n, p)) out.push_back(p);
    return out;
}

// Characteristic primes not dividing delta.
inline std::vector<mpz_class> primitive_primes(LucasSequence& seq, unsigned long n,
                                               const EffortBudget& effort = {}) {
    std::vector<mpz_class> out;
    mpz_class delta = to_mpz(seq.params().delta);
    for (const mpz_class& p : characteristic_primes(seq, n, effort))
        if (!mpz_divisible_p(delta.get_mpz_t(), p.get_mpz_t())) out.push_back(p);
    return out;
}

// Factorization of |x_n| assembled from the cyclotomic parts phi_d, d | n.
// Each part is much smaller than the term itself, so this stays cheap well
// past where factoring x_n directly would stall.
inline Factorization factor_term(LucasSequence& seq, unsigned long n,
                                 const EffortBudget& effort = {}) {
    if (n == 0) throw InvalidArgument("factor_term: n must be >= 1");
    if (seq.term(n) == 0) throw DegenerateTerm("factor_term: x_n = 0");
    std::map<mpz_class, unsigned long> merged;
    Factorization out;
    for (const mpz_class& dz : divisors(mpz_class(n))) {
        mpz_class part = abs(phi_term(seq, mpz_get_ui(dz.get_mpz_t())));
        if (part == 1) continue;
        Factorization f = factorize(part, effort);
        for (const auto& [p, e] : f.factors) merged[p] += e;
        if (!f.complete) {
            out.complete = false;
            out.cofactor *= f.cofactor;
        }
    }
    out.factors.assign(merged.begin(), merged.end());
    return out;
}

// |x_n| = y_n z_n with y_n the characteristic part.
struct CharacteristicSplit {
    unsigned long n = 0;
    mpz_class x, y, z;
};

inline CharacteristicSplit characteristic_split(LucasSequence& seq, unsigned long n,
                                                const EffortBudget& effort = {}) {
    if (n == 0) throw InvalidArgument("characteristic_split: n must be >= 1");
    CharacteristicSplit s;
    s.n = n;
    s.x = seq.term(n);
    if (s.x == 0) throw DegenerateTerm("characteristic_split: x_n = 0");
    mpz_class ax = abs(s.x);
    Factorization f = factor_term(seq, n, effort);
    if (!f.complete)
        throw IncompleteFactorization(f, "characteristic_split: x_n did not factor completely");
    s.y = 1;
    for (const auto& [p, e] : f.factors) {
        if (is_characteristic(seq.params(), n, p)) {
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            s.y *= pe;
        }
    }
    s.z = ax / s.y;
    return s;
}

struct AnatomyEntry {
    mpz_class p;
    unsigned long n_p = 0;           // rank of apparition (a proper divisor of n)
    unsigned long exponent = 0;      // v_p(phi_n)
    bool index_ratio_is_p_power = false; // n / n_p a power of p?
    bool exponent_ok = false;        // exponent 1, or the permitted 4 | phi_6 lane
};

// Structure of the non-characteristic part of phi_n: every non-characteristic
// prime p has n / n_p a p-power and p^2 does not divide phi_n (one 2-adic lane
// excepted); there is at most one such prime apart from two 6-divisibility
// lanes at n = 6 and n = 12.
struct AnatomyReport {
    unsigned long n = 0;
    mpz_class phi;
    std::vector<AnatomyEntry> noncharacteristic;
    bool index_ratios_ok = true;  // all entries are p-power ratios
    bool exponents_ok = true;     // all entries pass the squarefree claim
    bool count_ok = true;         // at most one entry, or a permitted lane
    std::optional<bool> phi_shape_ok; // square / p-square shape when premise applies
};

inline AnatomyReport noncharacteristic_anatomy(LucasSequence& seq, unsigned long n,
                                               const EffortBudget& effort = {}) {
    if (n == 0) throw InvalidArgument("noncharacteristic_anatomy: n must be >= 1");
    const LucasParams& P = seq.params();
    AnatomyReport rep;
    rep.n = n;
    rep.phi = phi_term(seq, n);
    if (rep.phi == 0) throw DegenerateTerm("noncharacteristic_anatomy: phi_n = 0");
    Factorization f = factorize(abs(rep.phi), effort);
    if (!f.complete)
        throw IncompleteFactorization(f, "noncharacteristic_anatomy: phi_n did not factor completely");

    bool all_characteristic_even = true;
    for (const auto& [p, e] : f.factors) {
        if (is_characteristic(P, n, p)) {
            if (e % 2 != 0) all_characteristic_even = false;
            continue;
        }
        AnatomyEntry ent;
        ent.p = p;
        ent.n_p = apparition_index_dividing(P, n, p);
        ent.exponent = e;
        unsigned long ratio = n / ent.n_p;
        if (p.fits_ulong_p()) {
            unsigned long pu = mpz_get_ui(p.get_mpz_t());
            while (ratio % pu == 0) ratio /= pu;
        }
        ent.index_ratio_is_p_power = ratio == 1;
        bool two_adic_lane = p == 2 && n == 6 && ent.n_p == 3 && P.b % 2 != 0 &&
                             ((P.c % 4) + 4) % 4 == 1;
        ent.exponent_ok = e == 1 || two_adic_lane;
        rep.index_ratios_ok &= ent.index_ratio_is_p_power;
        rep.exponents_ok &= ent.exponent_ok;
        rep.noncharacteristic.push_back(ent);
    }

    if (rep.noncharacteristic.size() > 1) {
        bool six_lane = n == 6 && ((P.b % 6) + 6) % 6 == 3 && P.c % 2 != 0;
        bool twelve_lane = n == 12 &&
                           (((P.b % 6) + 6) % 6 == 1 || ((P.b % 6) + 6) % 6 == 5) &&
                           ((P.c % 6) + 6) % 6 == 1;
        bool only_2_and_3 = rep.noncharacteristic.size() == 2 &&
                            rep.noncharacteristic[0].p == 2 && rep.noncharacteristic[1].p == 3;
        rep.count_ok = (six_lane || twelve_lane) && only_2_and_3;
    }

    // When x_n has no characteristic prime to an odd power and n != 6, 12,
    // phi_n is a square or p times a square with p^e | n and n / p^e <= p + 1.
    if (all_characteristic_even && n != 6 && n != 12) {
        std::vector<std::pair<mpz_class, unsigned long>> odd;
        for (const auto& [p, e] : f.factors)
            if (e % 2 != 0) odd.emplace_back(p, e);
        if (odd.empty()) {
            rep.phi_shape_ok = rep.phi > 0; // a genuine square
        } else if (odd.size() == 1 && odd[0].first.fits_ulong_p()) {
            unsigned long p = mpz_get_ui(odd[0].first.get_mpz_t());
            unsigned long pe = 1, rest = n;
            while (rest % p == 0) { rest /= p; pe *= p; }
            rep.phi_shape_ok = rep.phi > 0 && pe > 1 && rest <= p + 1;
        } else {
            rep.phi_shape_ok = false;
        }
    }
    return rep;
}

} // namespace lucaslab
