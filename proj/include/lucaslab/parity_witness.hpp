#pragma once

// Witness constructions for the parity of N(m, u): pairs of arguments whose
// N-values differ by an odd amount (or by exactly 1), plus the coprime-window
// and symbol-periodicity helpers that feed the square-product theorems.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "lucas.hpp"
#include "numtheory.hpp"
#include "symbol_laws.hpp"

namespace lucaslab {

struct ParityWitness {
    unsigned long m = 0;
    mpz_class u, u_prime;
    long long difference = 0; // N(m, u') - N(m, u), odd by construction
};

namespace detail {

inline long long n_diff(unsigned long m, const mpz_class& u, const mpz_class& up) {
    return (long long)N_value(m, mpq_class(up)) - (long long)N_value(m, mpq_class(u));
}

} // namespace detail

// Find u, u' coprime to m with N(m, u) and N(m, u') of opposite parity.
// Constructive for squarefree m; falls back to a bounded scan elsewhere.
// No such pair exists for m in {1, 2, 6}.
inline ParityWitness prop41_witness(unsigned long m, unsigned long scan_bound = 10000) {
    if (m == 0) throw InvalidArgument("prop41_witness: m must be >= 1");
    if (m == 1 || m == 2 || m == 6)
        throw ExcludedModulus("prop41_witness: N(m, u) has constant parity for m in {1, 2, 6}");
    mpz_class mz(m);
    bool squarefree = moebius(mz) != 0;
    if (squarefree && m % 2 == 1) {
        mpz_class u((m - 1) / 2), up((m + 1) / 2);
        ParityWitness w{m, u, up, detail::n_diff(m, u, up)};
        if (w.difference % 2 == 0) throw Error("prop41_witness: internal check failed");
        return w;
    }
    if (squarefree && m % 2 == 0) {
        // pick the largest odd prime factor q >= 5; kill 2u+3 mod q, keep 2u+1 alive
        mpz_class q = 0;
        for (const auto& [pf, _] : factorize(mz).factors)
            if (pf % 2 == 1 && pf >= 5) q = pf;
        if (q != 0) {
            // u = -1 mod s and u = -3/2 mod q makes 2u+1 coprime to m while
            // q | 2u+3, so the window [2u, 2u+4) gains exactly one coprime i
            mpz_class s = mz / q;
            mpz_class a1 = s - 1;
            mpz_class a2 = mod_floor((q - 3) * mod_inverse(mpz_class(2), q), q);
            mpz_class u = mod_floor(a1 + s * mod_floor((a2 - a1) * mod_inverse(s, q), q), mz);
            if (u == 0) u = mz;
            mpz_class up = u + 2;
            if (gcd(u, mz) == 1 && gcd(up, mz) == 1) {
                ParityWitness w{m, u, up, detail::n_diff(m, u, up)};
                if (w.difference % 2 == 0) throw Error("prop41_witness: internal check failed");
                return w;
            }
        }
    }
    // bounded scan: first argument of each parity wins
    mpz_class even_u = -1, odd_u = -1;
    for (unsigned long u = 1; u <= scan_bound; ++u) {
        if (std::gcd(u, m) != 1) continue;
        unsigned long nv = N_value(m, u);
        if (nv % 2 == 0 && even_u < 0) even_u = u;
        if (nv % 2 == 1 && odd_u < 0) odd_u = u;
        if (even_u >= 0 && odd_u >= 0) {
            mpz_class a = std::min(even_u, odd_u), b = std::max(even_u, odd_u);
            return {m, a, b, detail::n_diff(m, a, b)};
        }
    }
    throw NoWitnessFound("prop41_witness: no parity change up to scan bound");
}

// N(p^{e+1}, (p^e + 1)/2) - N(p^{e+1}, 1) = 1 for odd prime p, e >= 1.
inline ParityWitness prop55_witness(unsigned long p, unsigned long e) {
    if (e < 1) throw InvalidArgument("prop55_witness: e must be >= 1");
    if (p < 3 || p % 2 == 0 || !is_probable_prime(mpz_class(p)))
        throw InvalidArgument("prop55_witness: p must be an odd prime");
    mpz_class m = 1;
    for (unsigned long i = 0; i <= e; ++i) m *= p;
    if (!m.fits_ulong_p()) throw InvalidArgument("prop55_witness: modulus too large");
    mpz_class pe = m / p;
    unsigned long mu = mpz_get_ui(m.get_mpz_t());
    mpz_class u(1), up = (pe + 1) / 2;
    return {mu, u, up, detail::n_diff(mu, u, up)};
}

struct Prop53Witness {
    unsigned long p = 0, n = 0, e = 0;
    unsigned long m = 0;            // p^e * n
    unsigned long eval_modulus = 0; // m when e >= 2, n when e == 1
    mpq_class u, u_prime;           // arguments actually passed to N
    mpz_class base_u;               // the integer pair is (base_u, base_u + n)
    long long difference = 0;       // N(eval, u') - N(eval, u); 1 when the claim holds
};

namespace detail {

inline long long prop53_diff(unsigned long p, unsigned long n, unsigned long e, unsigned long m,
                             const mpz_class& u, Prop53Witness& out) {
    out.base_u = u;
    if (e >= 2) {
        out.eval_modulus = m;
        out.u = mpq_class(u);
        out.u_prime = mpq_class(u + n);
    } else {
        out.eval_modulus = n;
        out.u = mpq_class(u) / p;
        out.u_prime = mpq_class(u + n) / p;
        out.u.canonicalize();
        out.u_prime.canonicalize();
    }
    out.difference = (long long)N_value(out.eval_modulus, out.u_prime) -
                     (long long)N_value(out.eval_modulus, out.u);
    return out.difference;
}

} // namespace detail

// Witness pair (u, u + n) for m = p^e n with n | p - 1 or n | p + 1:
// the two N-values differ by exactly 1. Evaluated at modulus m for e >= 2
// and at modulus n with arguments divided by p for e = 1. The case
// p = 3, n = 2, e = 1 has no coprime witness at all.
inline Prop53Witness prop53_witness(unsigned long p, unsigned long n, unsigned long e,
                                    unsigned long scan_bound = 10000) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(mpz_class(p)))
        throw InvalidArgument("prop53_witness: p must be an odd prime");
    if (e < 1) throw InvalidArgument("prop53_witness: e must be >= 1");
    if (n < 2 || ((p - 1) % n != 0 && (p + 1) % n != 0))
        throw HypothesisViolated("prop53_witness: need n > 1 dividing p - 1 or p + 1");
    if (p == 3 && n == 2 && e == 1)
        throw HypothesisViolated("prop53_witness: p = 3, n = 2, e = 1 admits no coprime witness");
    mpz_class mz(n);
    for (unsigned long i = 0; i < e; ++i) mz *= p;
    if (!mz.fits_ulong_p()) throw InvalidArgument("prop53_witness: modulus too large");
    unsigned long m = mpz_get_ui(mz.get_mpz_t());
    Prop53Witness w;
    w.p = p;
    w.n = n;
    w.e = e;
    w.m = m;
    unsigned long f = e >= 2 ? e - 1 : 1;
    mpz_class pf = 1;
    for (unsigned long i = 0; i < f; ++i) pf *= p;
    std::vector<mpz_class> candidates;
    if (p == 3 && n == 2) {
        // e >= 2 here; the pair is (1, u') with a bespoke u' instead of 1 + n
        mpz_class p_em1 = 1;
        for (unsigned long i = 0; i + 1 < e; ++i) p_em1 *= 3;
        mpz_class up = (p_em1 + 4 + (e % 2 == 0 ? 3 : -3)) / 2;
        if (gcd(up, mz) == 1) {
            w.base_u = 1;
            w.eval_modulus = m;
            w.u = mpq_class(1);
            w.u_prime = mpq_class(up);
            w.difference =
                (long long)N_value(m, w.u_prime) - (long long)N_value(m, w.u);
            if (w.difference == 1) return w;
        }
    } else if (p == 5 && (n == 3 || n == 6)) {
        candidates.push_back((pf - 3) / 2);
    } else if (p == 3 && n == 4) {
        candidates.push_back(pf - 2);
    } else if (n == 2) {
        for (long j : {1, 3}) {
            mpz_class u = (pf - j) / 2;
            if (u > 0 && mpz_odd_p(u.get_mpz_t())) candidates.push_back(u);
        }
    }
    for (const mpz_class& u : candidates) {
        if (u <= 0 || gcd(u * (u + n), mz) != 1) continue;
        if (detail::prop53_diff(p, n, e, m, u, w) == 1) return w;
    }
    for (unsigned long u = 1; u <= scan_bound; ++u) {
        mpz_class uz(u);
        if (gcd(uz * (uz + n), mz) != 1) continue;
        if (detail::prop53_diff(p, n, e, m, uz, w) == 1) return w;
    }
    throw NoWitnessFound("prop53_witness: no witness up to scan bound");
}

// Least u in (start, start + n] with gcd(u (u + n), n p) = 1. Exists whenever
// p = n - 1 or p >= n + 1, except (n, p) in {(3, 5), (6, 5), (4, 3)}.
inline mpz_class lemma54_find(unsigned long n, unsigned long p, const mpz_class& start) {
    if (n < 3) throw InvalidArgument("lemma54_find: n must be >= 3");
    if (p < 3 || p % 2 == 0 || !is_probable_prime(mpz_class(p)))
        throw InvalidArgument("lemma54_find: p must be an odd prime");
    if (p != n - 1 && p < n + 1)
        throw HypothesisViolated("lemma54_find: need p = n - 1 or p >= n + 1");
    if (((n == 3 || n == 6) && p == 5) || (n == 4 && p == 3))
        throw ExcludedCase("lemma54_find: no window is guaranteed for this (n, p)");
    mpz_class np = mpz_class(n) * p;
    for (unsigned long d = 1; d <= n; ++d) {
        mpz_class u = start + d;
        if (gcd(u * (u + n), np) == 1) return u;
    }
    // reaching this would falsify the window claim outright
    throw NotFound("lemma54_find: window contains no admissible u");
}

// Periodicity check behind the square-product sieve: with m = p^e n, e >= 0,
// 1 < n <= p + 1, p | phi_n and phi_m = p * (perfect square), the symbol
// (x_k / phi_m) depends only on k mod 2n for k coprime to m.
inline std::pair<int, int> lemma51_check(LucasSequence& seq, unsigned long p, unsigned long e,
                                         unsigned long n, unsigned long k, unsigned long kprime) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(mpz_class(p)))
        throw InvalidArgument("lemma51_check: p must be an odd prime");
    if (n < 2 || n > p + 1) throw HypothesisViolated("lemma51_check: need 1 < n <= p + 1");
    mpz_class mz(n);
    for (unsigned long i = 0; i < e; ++i) mz *= p;
    if (!mz.fits_ulong_p()) throw InvalidArgument("lemma51_check: modulus too large");
    unsigned long m = mpz_get_ui(mz.get_mpz_t());
    if (phi_term(seq, n) % p != 0) throw HypothesisViolated("lemma51_check: p does not divide phi_n");
    mpz_class phim = phi_term(seq, m);
    if (phim % p != 0 || !is_square(phim / p))
        throw HypothesisViolated("lemma51_check: phi_m is not p times a square");
    if (k % (2 * n) != kprime % (2 * n))
        throw HypothesisViolated("lemma51_check: k and k' disagree mod 2n");
    if (gcd(mpz_class(k) * kprime, mz) != 1)
        throw NotCoprime("lemma51_check: k and k' must be coprime to m");
    return {symbol_direct_x_over_phi(seq, k, m), symbol_direct_x_over_phi(seq, kprime, m)};
}

} // namespace lucaslab
