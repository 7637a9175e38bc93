#pragma once

// Lucas sequences x_0 = 0, x_1 = 1, x_{n+2} = b x_{n+1} + c x_n for nonzero
// coprime b, c: exact terms, fast modular terms, rank of apparition and the
// p-adic valuation law.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "numtheory.hpp"

namespace lucaslab {

struct LucasParams {
    long long b = 0, c = 0;
    long long delta = 0; // b^2 + 4c
    bool sign_flipped = false;

    struct Flags {
        bool coprime_bc = false;
        bool c_is_2_mod_4 = false;
        bool delta_positive = false;
        bool b_positive = false;
        bool b_3_mod_4 = false;
        bool four_divides_c = false;
        bool b_even = false;
        std::optional<bool> jacobi_c_b_is_1; // only when b odd and positive
    } flags;

    LucasParams(long long b_, long long c_) : b(b_), c(c_) {
        if (b == 0 || c == 0) throw InvalidArgument("LucasParams: b and c must be nonzero");
        if ((b > (1ll << 31)) || (b < -(1ll << 31)) || (c > (1ll << 31)) || (c < -(1ll << 31)))
            throw InvalidArgument("LucasParams: parameters out of supported range");
        if (std::gcd(b, c) != 1) throw NotCoprime("LucasParams: b and c must be coprime");
        delta = b * b + 4 * c;
        flags.coprime_bc = true;
        flags.c_is_2_mod_4 = ((c % 4) + 4) % 4 == 2;
        flags.delta_positive = delta > 0;
        flags.b_positive = b > 0;
        flags.b_3_mod_4 = ((b % 4) + 4) % 4 == 3;
        flags.four_divides_c = c % 4 == 0;
        flags.b_even = b % 2 == 0;
        if (b > 0 && b % 2 != 0)
            flags.jacobi_c_b_is_1 = b == 1 || jacobi(to_mpz(c), to_mpz(b)) == 1;
    }

    // b > 0, delta > 0, b = 3 (4), c = 2 (4), (c/b) = 1.
    bool in_class_T() const {
        return flags.b_positive && flags.delta_positive && flags.b_3_mod_4 &&
               flags.c_is_2_mod_4 && flags.jacobi_c_b_is_1 && *flags.jacobi_c_b_is_1;
    }

    // c = 2 (4), delta > 0 (b automatically odd).
    bool in_class_C2() const { return flags.c_is_2_mod_4 && flags.delta_positive; }

    // The only coprime parameter family with vanishing terms: (+-1, -1),
    // where x_n = 0 exactly when 3 | n.
    bool has_zero_terms() const { return (b == 1 || b == -1) && c == -1; }
    bool term_is_zero(unsigned long n) const { return n > 0 && has_zero_terms() && n % 3 == 0; }

    // Sign-flip reduction: the sequence for (-b, c) is (-1)^(n-1) times the
    // sequence for (b, c), so laws stated for b > 0 apply after flipping.
    LucasParams canonical() const {
        if (b > 0) return *this;
        LucasParams p(-b, c);
        p.sign_flipped = true;
        return p;
    }
    long long original_b() const { return sign_flipped ? -b : b; }
};

// Term cache. Not internally synchronized: use one instance per worker.
class LucasSequence {
  public:
    explicit LucasSequence(LucasParams p)
        : params_(p), bz_(to_mpz(p.b)), cz_(to_mpz(p.c)), terms_{0, 1} {}

    const LucasParams& params() const { return params_; }

    const mpz_class& term(unsigned long n) {
        while (terms_.size() <= n) {
            size_t k = terms_.size();
            terms_.push_back(bz_ * terms_[k - 1] + cz_ * terms_[k - 2]);
        }
        return terms_[n];
    }

  private:
    LucasParams params_;
    mpz_class bz_, cz_;
    std::vector<mpz_class> terms_;
};

// x_n mod M (M >= 2) by index doubling:
//   x_{2k}   = x_k (2 x_{k+1} - b x_k)
//   x_{2k+1} = x_{k+1}^2 + c x_k^2
inline mpz_class term_mod(const LucasParams& P, unsigned long n, const mpz_class& M) {
    if (M < 2) throw InvalidArgument("term_mod: modulus must be >= 2");
    if (n == 0) return 0;
    mpz_class b = mod_floor(to_mpz(P.b), M), c = mod_floor(to_mpz(P.c), M);
    mpz_class x = 0, y = 1; // (x_k, x_{k+1}) for the prefix of bits consumed
    int bits = int(mpz_sizeinbase(mpz_class(n).get_mpz_t(), 2));
    for (int i = bits - 1; i >= 0; --i) {
        mpz_class even = mod_floor(x * (2 * y - b * x), M);
        mpz_class odd = (y * y + c * x * x) % M;
        if ((n >> i) & 1) {
            x = odd;
            y = (b * odd + c * even) % M;
        } else {
            x = even;
            y = odd;
        }
    }
    return mod_floor(x, M);
}

// Rank of apparition of p: n_p minimal with p | x_{n_p}; r_p minimal with
// q | x_{r_p} where q = p for odd p and q = 4 for p = 2; e_p = v_p(x_{r_p}).
// All three are absent (nullopt) when p | c.
struct RankRecord {
    mpz_class p;
    std::optional<unsigned long> n_p, r_p, e_p;
    bool absent() const { return !n_p.has_value(); }
};

namespace detail {

// v_p(x_idx) for a term known to be divisible by p without computing the term.
inline unsigned long term_valuation(const LucasParams& P, unsigned long idx, const mpz_class& p) {
    if (P.term_is_zero(idx))
        throw DegenerateTerm("valuation of a vanishing term is undefined");
    unsigned long v = 1;
    mpz_class mod = p * p;
    while (term_mod(P, idx, mod) == 0) {
        ++v;
        mod *= p;
    }
    return v;
}

// Linear scan for the least n >= 1 with p | x_n, bounded by `limit`.
inline std::optional<unsigned long> rank_scan(const LucasParams& P, const mpz_class& p,
                                              unsigned long limit) {
    mpz_class b = mod_floor(to_mpz(P.b), p), c = mod_floor(to_mpz(P.c), p);
    mpz_class x = 0, y = 1;
    for (unsigned long n = 1; n <= limit; ++n) {
        mpz_class next = (b * y + c * x) % p;
        x = y;
        y = next; // now x = x_n
        if (x == 0) return n;
    }
    return std::nullopt;
}

} // namespace detail

inline RankRecord rank_of_apparition(const LucasParams& P, const mpz_class& p) {
    if (!is_probable_prime(p)) throw InvalidArgument("rank_of_apparition: p must be prime");
    RankRecord rec;
    rec.p = p;
    if (mpz_divisible_p(to_mpz(P.c).get_mpz_t(), p.get_mpz_t())) return rec; // absent

    if (p == 2) {
        unsigned long n2 = (P.b % 2 == 0) ? 2 : 3;
        rec.n_p = n2;
        unsigned long r2 = (term_mod(P, n2, mpz_class(4)) == 0) ? n2 : 2 * n2;
        rec.r_p = r2;
        rec.e_p = detail::term_valuation(P, r2, p);
        return rec;
    }

    mpz_class delta = to_mpz(P.delta);
    std::optional<unsigned long> np;
    if (mpz_divisible_p(delta.get_mpz_t(), p.get_mpz_t())) {
        if (!p.fits_ulong_p())
            throw InvalidArgument("rank_of_apparition: rank p exceeds the index range");
        // p | delta: x_n = n (b/2)^(n-1) mod p, so n_p = p; scan to confirm.
        np = detail::rank_scan(P, p, mpz_get_ui(p.get_mpz_t()));
    } else {
        mpz_class D = p - jacobi(delta, p);
        for (const mpz_class& d : divisors(D)) {
            if (!d.fits_ulong_p())
                break; // ascending, so a representable rank was already seen
            if (term_mod(P, mpz_get_ui(d.get_mpz_t()), p) == 0) {
                np = mpz_get_ui(d.get_mpz_t());
                break;
            }
        }
        if (!np) {
            if (!p.fits_ulong_p())
                throw InvalidArgument("rank_of_apparition: rank exceeds the index range");
            // would contradict n_p | p - (delta/p); stay honest and rescan
            np = detail::rank_scan(P, p, mpz_get_ui(p.get_mpz_t()) + 1);
        }
    }
    if (!np) throw Error("rank_of_apparition: no rank found below p+1");
    rec.n_p = *np;
    rec.r_p = *np;
    rec.e_p = detail::term_valuation(P, *np, p);
    return rec;
}

// Predicted v_p(x_n) from the rank record alone:
//   odd p: 0 unless r_p | n, else e_p + v_p(n / r_p);
//   p = 2: same with r_2, except n = (odd) * n_2 with r_2 = 2 n_2 gives exactly 1.
inline unsigned long valuation(const LucasParams& P, unsigned long n, const mpz_class& p) {
    if (n == 0) throw InvalidArgument("valuation: n must be >= 1");
    if (P.term_is_zero(n)) throw DegenerateTerm("valuation: x_n = 0");
    RankRecord rec = rank_of_apparition(P, p);
    if (rec.absent()) throw RankAbsent("valuation: p divides c, no rank of apparition");
    unsigned long np = *rec.n_p, rp = *rec.r_p, ep = *rec.e_p;
    if (p == 2 && rp != np) {
        if (n % np != 0) return 0;
        if (n % rp != 0) return 1; // divisible by 2, never by 4
    }
    if (n % rp != 0) return 0;
    unsigned long q = n / rp, k = 0;
    unsigned long pul = p.fits_ulong_p() ? mpz_get_ui(p.get_mpz_t()) : 0;
    if (pul)
        while (q % pul == 0) { q /= pul; ++k; }
    return ep + k;
}

// Lemma-4 style congruence for odd p | delta: x_n = n (b/2)^(n-1) mod p.
inline bool delta_residue_check(const LucasParams& P, unsigned long n, const mpz_class& p) {
    if (p == 2 || !is_probable_prime(p))
        throw NotDivisorOfDelta("delta_residue_check: p must be an odd prime");
    if (!mpz_divisible_p(to_mpz(P.delta).get_mpz_t(), p.get_mpz_t()))
        throw NotDivisorOfDelta("delta_residue_check: p does not divide delta");
    mpz_class half_b = mod_floor(to_mpz(P.b) * mod_inverse(mpz_class(2), p), p);
    mpz_class rhs;
    mpz_powm_ui(rhs.get_mpz_t(), half_b.get_mpz_t(), n - 1, p.get_mpz_t());
    rhs = mod_floor(rhs * n, p);
    return term_mod(P, n, p) == rhs;
}

} // namespace lucaslab
