#pragma once

// Arbitrary-precision integer primitives: gcd/inverse/Jacobi wrappers around
// GMP, factorization (trial division + Brent's rho + Miller-Rabin), Moebius,
// radical, powerful-part split, square detectors and canonical continued
// fractions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace lucaslab {

// gmpxx has no long long constructor; parameters and discriminants are
// long long throughout, so funnel them through here.
inline mpz_class to_mpz(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
    return mpz_class(static_cast<long>(v));
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Jacobi symbol (a/n); n must be odd and positive.
inline int jacobi(const mpz_class& a, const mpz_class& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw EvenDenominator("jacobi: denominator must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

// Least positive inverse of a mod m, m >= 2.
inline mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
    if (m < 2) throw InvalidArgument("mod_inverse: modulus must be >= 2");
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw NotCoprime("mod_inverse: argument shares a factor with the modulus");
    return r; // in [1, m-1]
}

// Non-negative remainder, also for negative a.
inline mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_square(const mpz_class& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// True iff n = 3*w^2 for some integer w >= 1; false for n <= 0.
inline bool is_three_times_square(const mpz_class& n) {
    if (n <= 0) return false;
    if (!mpz_divisible_ui_p(n.get_mpz_t(), 3)) return false;
    return is_square(n / 3);
}

inline mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace detail {

inline const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

inline bool miller_rabin_round(const mpz_class& n, const mpz_class& nm1,
                               const mpz_class& d, unsigned long s, const mpz_class& base) {
    mpz_class a = mod_floor(base, n);
    if (a <= 1) return true; // uninformative base
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

} // namespace detail

// Miller-Rabin primality. Below 3.3e24 the first 13 prime bases are a known
// deterministic witness set; above that, 40 fixed prime bases are used.
inline bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const unsigned bases[40] = {
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
        71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139,
        149, 151, 157, 163, 167, 173};
    for (unsigned p : bases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const mpz_class deterministic_limit("3317044064679887385961981");
    const unsigned rounds = n < deterministic_limit ? 13 : 40;
    mpz_class nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    mpz_class d = nm1 >> s;
    for (unsigned i = 0; i < rounds; ++i)
        if (!detail::miller_rabin_round(n, nm1, d, s, mpz_class(bases[i]))) return false;
    return true;
}

// Prime-exponent list for |n|, sorted by prime. `complete` is false when the
// work budget ran out; the unfactored (composite or unknown) part is kept in
// `cofactor`, which is 1 otherwise.
struct Factorization {
    std::vector<std::pair<mpz_class, unsigned long>> factors;
    bool complete = true;
    mpz_class cofactor = 1;

    mpz_class reassemble() const {
        mpz_class v = cofactor;
        for (const auto& [p, e] : factors) {
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            v *= pe;
        }
        return v;
    }

    std::optional<unsigned long> exponent_of(const mpz_class& p) const {
        for (const auto& [q, e] : factors)
            if (q == p) return e;
        return std::nullopt;
    }
};

struct IncompleteFactorization : Error {
    Factorization partial;
    explicit IncompleteFactorization(Factorization f, const std::string& what)
        : Error(what), partial(std::move(f)) {}
};

struct EffortBudget {
    unsigned long trial_bound = 1'000'000;
    unsigned long rho_iterations = 20'000'000; // total squarings per factorize() call
    unsigned long seed = 1;
};

namespace detail {

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor of n
// (odd composite, no factors below the trial bound) or 0 on budget exhaustion.
inline mpz_class brent_rho(const mpz_class& n, unsigned long& budget, gmp_randstate_t rng) {
    while (budget > 0) {
        mpz_class y, add;
        mpz_urandomm(y.get_mpz_t(), rng, n.get_mpz_t());
        mpz_urandomm(add.get_mpz_t(), rng, n.get_mpz_t());
        if (add == 0) add = 1;
        mpz_class x, ys, q = 1, g = 1, diff;
        unsigned long r = 1;
        const unsigned long block = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + add) % n;
            if (r > budget) { budget = 0; break; }
            budget -= r;
            for (unsigned long k = 0; k < r && g == 1; k += block) {
                ys = y;
                unsigned long lim = std::min(block, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + add) % n;
                    diff = x - y;
                    q = q * diff % n;
                }
                if (lim > budget) { budget = 0; break; }
                budget -= lim;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) { // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + add) % n;
                diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g > 1 && g < n) return g;
        // retry with fresh parameters
    }
    return 0;
}

} // namespace detail

inline Factorization factorize(const mpz_class& n, const EffortBudget& effort = {}) {
    if (n == 0) throw ZeroInput("factorize: zero has no factorization");
    mpz_class m = abs(n);
    Factorization out;
    if (m == 1) return out;

    std::vector<std::pair<mpz_class, unsigned long>> found;
    for (uint32_t p : detail::small_primes()) {
        if (p > effort.trial_bound) break;
        if (mpz_class(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned long e = 0;
        do {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
        found.emplace_back(p, e);
    }

    gmp_randstate_t rng;
    gmp_randinit_mt(rng);
    // deterministic per (seed, input) so reports are reproducible
    gmp_randseed_ui(rng, effort.seed ^ (mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffff) * 2654435761ull));
    unsigned long budget = effort.rho_iterations;

    std::vector<std::pair<mpz_class, unsigned long>> stack;
    if (m > 1) stack.emplace_back(m, 1);
    while (!stack.empty()) {
        auto [v, mult] = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_probable_prime(v)) {
            found.emplace_back(v, mult);
            continue;
        }
        if (mpz_perfect_power_p(v.get_mpz_t())) {
            for (unsigned long k = 2;; ++k) {
                mpz_class root;
                if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), k)) {
                    stack.emplace_back(root, mult * k);
                    break;
                }
            }
            continue;
        }
        mpz_class f = detail::brent_rho(v, budget, rng);
        if (f == 0) {
            out.complete = false;
            mpz_class ve;
            mpz_pow_ui(ve.get_mpz_t(), v.get_mpz_t(), mult);
            out.cofactor *= ve;
            continue;
        }
        stack.emplace_back(f, mult);
        stack.emplace_back(v / f, mult);
    }
    gmp_randclear(rng);

    std::sort(found.begin(), found.end());
    for (auto& [p, e] : found) {
        if (!out.factors.empty() && out.factors.back().first == p)
            out.factors.back().second += e;
        else
            out.factors.emplace_back(p, e);
    }
    return out;
}

// Moebius function; requires n >= 1 and a complete factorization.
inline int moebius(const mpz_class& n, const EffortBudget& effort = {}) {
    if (n < 1) throw InvalidArgument("moebius: argument must be >= 1");
    Factorization f = factorize(n, effort);
    if (!f.complete) throw IncompleteFactorization(f, "moebius: factorization incomplete");
    int sign = 1;
    for (const auto& [p, e] : f.factors) {
        if (e >= 2) return 0;
        sign = -sign;
    }
    return sign;
}

// Product of the distinct primes of n; radical(1) = 1.
inline mpz_class radical(const mpz_class& n, const EffortBudget& effort = {}) {
    if (n < 1) throw InvalidArgument("radical: argument must be >= 1");
    Factorization f = factorize(n, effort);
    if (!f.complete) throw IncompleteFactorization(f, "radical: factorization incomplete");
    mpz_class r = 1;
    for (const auto& [p, e] : f.factors) r *= p;
    return r;
}

// m = m1 * m2 with m2 the largest powerful divisor (every prime exponent >= 2)
// and m1 squarefree, gcd(m1, m2) = 1.
inline std::pair<mpz_class, mpz_class> powerful_split(const mpz_class& m,
                                                      const EffortBudget& effort = {}) {
    if (m < 1) throw InvalidArgument("powerful_split: argument must be >= 1");
    Factorization f = factorize(m, effort);
    if (!f.complete) throw IncompleteFactorization(f, "powerful_split: factorization incomplete");
    mpz_class m1 = 1, m2 = 1;
    for (const auto& [p, e] : f.factors) {
        if (e == 1) m1 *= p;
        else {
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            m2 *= pe;
        }
    }
    return {m1, m2};
}

// n = p^e with p prime, e >= 1?
inline std::optional<std::pair<mpz_class, unsigned long>> prime_power_decompose(
    const mpz_class& n, const EffortBudget& effort = {}) {
    if (n < 2) return std::nullopt;
    Factorization f = factorize(n, effort);
    if (!f.complete) throw IncompleteFactorization(f, "prime_power_decompose: factorization incomplete");
    if (f.factors.size() != 1) return std::nullopt;
    return f.factors.front();
}

// Sorted list of all positive divisors.
inline std::vector<mpz_class> divisors(const mpz_class& n, const EffortBudget& effort = {}) {
    if (n < 1) throw InvalidArgument("divisors: argument must be >= 1");
    Factorization f = factorize(n, effort);
    if (!f.complete) throw IncompleteFactorization(f, "divisors: factorization incomplete");
    std::vector<mpz_class> ds{1};
    for (const auto& [p, e] : f.factors) {
        size_t old = ds.size();
        mpz_class pe = 1;
        for (unsigned long i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < old; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Canonical continued fraction of num/den > 0 in lowest terms: partial
// quotients with the final one >= 2 (the plain Euclid expansion). Lambda is
// the number of partial quotients; 1/1 has no canonical expansion.
struct CFExpansion {
    std::vector<mpz_class> quotients;
    size_t lambda() const { return quotients.size(); }
};

inline CFExpansion cf_expansion(const mpz_class& num, const mpz_class& den) {
    if (num < 1 || den < 1) throw InvalidArgument("cf_expansion: arguments must be positive");
    if (gcd(num, den) != 1) throw NotCoprime("cf_expansion: arguments must be coprime");
    if (num == 1 && den == 1)
        throw UndefinedForUnity("cf_expansion: 1/1 has no canonical expansion");
    CFExpansion cf;
    mpz_class a = num, b = den, q, r;
    while (b != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        cf.quotients.push_back(q);
        a = b;
        b = r;
    }
    return cf;
}

// Parity of the length of the canonical expansion of k/m.
inline int lambda_parity(const mpz_class& k, const mpz_class& m) {
    return int(cf_expansion(k, m).lambda() % 2);
}

} // namespace lucaslab
