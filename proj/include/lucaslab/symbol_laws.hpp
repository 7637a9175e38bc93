#pragma once

// Jacobi-symbol laws for Lucas terms and cyclotomic parts: least-absolute
// inverse residues, the counting functions N(m, t) and E(m, u), closed-form
// symbol evaluations, and a grid runner that compares each law against the
// direct Jacobi-symbol oracle.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "lucas.hpp"
#include "numtheory.hpp"

namespace lucaslab {

// Least absolute residue u of 1/k mod m: ku = 1 (mod m), -m/2 < u <= m/2.
struct InverseResidue {
    mpz_class k, m, u;
};

inline InverseResidue inverse_residue(const mpz_class& k, const mpz_class& m) {
    if (m < 2) throw InvalidArgument("inverse_residue: m must be >= 2");
    mpz_class u0 = mod_inverse(k, m);
    return {k, m, 2 * u0 <= m ? u0 : u0 - m};
}

namespace detail {
inline int pow_sign(int s, unsigned long parity) { return parity % 2 ? s : 1; }
inline long long mod2(long long v) { return ((v % 2) + 2) % 2; }
} // namespace detail

// N(m, t) = mu^2(m) + #{ i : 1 <= i < 2 t r(m)/m, (i, m) = 1 } for rational
// t > 0. Exact rational comparison; no floating point.
inline unsigned long N_value(unsigned long m, const mpq_class& t) {
    if (m == 0) throw InvalidArgument("N_value: m must be >= 1");
    if (t <= 0) throw InvalidArgument("N_value: t must be positive");
    mpz_class mz(static_cast<unsigned long>(m));
    unsigned long mu2 = moebius(mz) != 0 ? 1 : 0;
    mpz_class r = radical(mz);
    mpz_class qn = 2 * t.get_num() * r, qd = t.get_den() * mz;
    mpz_class imax = (qn - 1) / qd; // largest i with i*qd < qn
    if (imax < 0) return mu2;
    if (!imax.fits_ulong_p()) throw InvalidArgument("N_value: bound too large");
    unsigned long im = mpz_get_ui(imax.get_mpz_t()), count = 0;
    for (unsigned long i = 1; i <= im; ++i)
        if (std::gcd(i, m) == 1) ++count;
    return mu2 + count;
}

inline unsigned long N_value(unsigned long m, unsigned long u) {
    return N_value(m, mpq_class(mpz_class(u)));
}

// E(m, u) = sum over d | m, d >= 3 of mu(m/d) * floor(2u/d); needs (u, m) = 1.
inline long long E_value(unsigned long m, unsigned long u) {
    if (m == 0 || u == 0) throw InvalidArgument("E_value: arguments must be >= 1");
    if (std::gcd(m, u) != 1) throw NotCoprime("E_value: u must be coprime to m");
    long long sum = 0;
    for (const mpz_class& dz : divisors(mpz_class(m))) {
        unsigned long d = mpz_get_ui(dz.get_mpz_t());
        if (d < 3) continue;
        int mu = moebius(mpz_class(m / d));
        if (mu == 0) continue;
        sum += mu * (long long)((2 * (unsigned long long)u) / d);
    }
    return sum;
}

// --- direct symbols (the oracles) -----------------------------------------

inline int symbol_direct(LucasSequence& seq, unsigned long k, unsigned long m) {
    mpz_class num = seq.term(k); // copy: term() may reallocate the cache below
    const mpz_class& den = seq.term(m);
    if (den <= 0 || mpz_even_p(den.get_mpz_t()))
        throw EvenDenominator("symbol_direct: x_m must be odd and positive");
    return jacobi(num, den);
}

inline int symbol_direct_x_over_phi(LucasSequence& seq, unsigned long k, unsigned long m) {
    mpz_class den = phi_term(seq, m);
    if (den <= 0 || mpz_even_p(den.get_mpz_t()))
        throw EvenDenominator("symbol_direct_x_over_phi: phi_m must be odd and positive");
    return jacobi(seq.term(k), den);
}

inline int symbol_direct_phi_over_x(LucasSequence& seq, unsigned long m, unsigned long n) {
    mpz_class num = phi_term(seq, m); // before binding den: phi_term grows the cache
    const mpz_class& den = seq.term(n);
    if (den <= 0 || mpz_even_p(den.get_mpz_t()))
        throw EvenDenominator("symbol_direct_phi_over_x: x_n must be odd and positive");
    return jacobi(num, den);
}

// --- closed forms ----------------------------------------------------------

// (x_k / x_m) = sign of the least absolute residue of 1/k mod m, in class T.
inline int symbol_theorem4(const LucasParams& P, unsigned long k, unsigned long m) {
    if (!P.in_class_T()) throw HypothesisViolated("symbol_theorem4: parameters not in class T");
    if (k < 1 || m < 2) throw HypothesisViolated("symbol_theorem4: need k >= 1 and m > 1");
    if (std::gcd(k, m) != 1) throw NotCoprime("symbol_theorem4: k and m must be coprime");
    return inverse_residue(mpz_class(k), mpz_class(m)).u > 0 ? 1 : -1;
}

// (x_k / x_m) = (-1)^floor(2u/m) for any integer u with ku = 1 (mod m), m != 2.
inline int symbol_eq4(const mpz_class& k, const mpz_class& m, const mpz_class& u) {
    if (m == 2) throw HypothesisViolated("symbol_eq4: m = 2 is excluded");
    if (m < 1 || k < 1) throw InvalidArgument("symbol_eq4: k, m must be positive");
    if (gcd(k, m) != 1) throw NotCoprime("symbol_eq4: k and m must be coprime");
    if (mod_floor(k * u - 1, m) != 0)
        throw HypothesisViolated("symbol_eq4: u is not an inverse of k mod m");
    mpz_class q;
    mpz_class two_u = 2 * u;
    mpz_fdiv_q(q.get_mpz_t(), two_u.get_mpz_t(), m.get_mpz_t());
    return mpz_even_p(q.get_mpz_t()) ? 1 : -1;
}

// (x_k / phi_m) = (-1)^N(m,u), class T, u = 1/k mod m.
inline int symbol_eq5(const LucasParams& P, unsigned long k, unsigned long m) {
    if (!P.in_class_T()) throw HypothesisViolated("symbol_eq5: parameters not in class T");
    if (k < 1 || m < 1 || std::gcd(k, m) != 1)
        throw HypothesisViolated("symbol_eq5: need coprime positive k, m");
    unsigned long u = m == 1 ? 1 : mpz_get_ui(mod_inverse(mpz_class(k), mpz_class(m)).get_mpz_t());
    return detail::pow_sign(-1, N_value(m, u));
}

// (x_m / x_n) for n > 1 odd, (m, n) = 1, delta > 0, b > 0, by parity class of c:
//   4 | c:        (c/b)^{(m-1)(n-1)/2}
//   c = 2 (4):    (-1)^{Lambda(m/n) + ((b+1)/2)(m-1)} (c/b)^{(m-1)(n-1)/2}
//   2 | b, c odd: (m/n)^{(c-1)/2} (2/n)^{(m-1)(b+c-1)/2} (b/|c|)^{(m-1)(n-1)/2}
inline int symbol_prop61(const LucasParams& P, unsigned long m, unsigned long n) {
    if (!(P.delta > 0 && P.b > 0))
        throw HypothesisViolated("symbol_prop61: need delta > 0 and b > 0");
    if (n < 3 || n % 2 == 0) throw HypothesisViolated("symbol_prop61: n must be odd and > 1");
    if (m < 1 || std::gcd(m, n) != 1)
        throw HypothesisViolated("symbol_prop61: m must be positive and coprime to n");
    unsigned long cross = (m - 1) % 2 * (((n - 1) / 2) % 2);
    if (P.flags.four_divides_c)
        return detail::pow_sign(jacobi(to_mpz(P.c), to_mpz(P.b)), cross);
    if (P.flags.c_is_2_mod_4) {
        unsigned long par =
            (lambda_parity(mpz_class(m), mpz_class(n)) + ((P.b + 1) / 2) * (m - 1)) % 2;
        return detail::pow_sign(-1, par) *
               detail::pow_sign(jacobi(to_mpz(P.c), to_mpz(P.b)), cross);
    }
    if (P.flags.b_even) {
        unsigned long e1 = detail::mod2((P.c - 1) / 2);
        unsigned long e2 = (m - 1) % 2 * detail::mod2((P.b + P.c - 1) / 2);
        return detail::pow_sign(jacobi(mpz_class(m), mpz_class(n)), e1) *
               detail::pow_sign(jacobi(mpz_class(2), mpz_class(n)), e2) *
               detail::pow_sign(jacobi(to_mpz(P.b), to_mpz(std::llabs(P.c))), cross);
    }
    throw HypothesisViolated("symbol_prop61: no case applies (b and c both odd)");
}

enum class CorWhich { x_over_phi_primepower, x_over_phi_composite, phi_over_x_even };

namespace detail {

inline std::pair<unsigned long, bool> odd_prime_power(unsigned long n) {
    // returns (p, true) when n = p^j, p odd prime, j >= 1
    if (n < 3 || n % 2 == 0) return {0, false};
    auto pp = prime_power_decompose(mpz_class(n));
    if (!pp) return {0, false};
    return {mpz_get_ui(pp->first.get_mpz_t()), true};
}

} // namespace detail

// Corollary-6.2 family, c = 2 (4): (x_m/phi_n) for odd n via N(n, 1/m mod n),
// and (phi_m/x_n) for even m via N(m, 1/n mod m) + mu(m/2).
inline int symbol_cor62(const LucasParams& P, unsigned long m, unsigned long n, CorWhich which) {
    if (!(P.delta > 0 && P.b > 0 && P.flags.c_is_2_mod_4))
        throw HypothesisViolated("symbol_cor62: need delta > 0, b > 0, c = 2 mod 4");
    if (which == CorWhich::phi_over_x_even) {
        if (m <= 2 || m % 2 != 0) throw HypothesisViolated("symbol_cor62: m must be even, > 2");
        if (n < 3 || n % 2 == 0) throw HypothesisViolated("symbol_cor62: n must be odd, > 1");
        if (std::gcd(m, n) != 1) throw NotCoprime("symbol_cor62: m, n must be coprime");
        unsigned long v = mpz_get_ui(mod_inverse(mpz_class(n), mpz_class(m)).get_mpz_t());
        unsigned long par = N_value(m, v) + (moebius(mpz_class(m / 2)) != 0 ? 1 : 0);
        return detail::pow_sign(-1, par);
    }
    if (n < 3 || n % 2 == 0) throw HypothesisViolated("symbol_cor62: n must be odd, > 1");
    if (m < 2) throw HypothesisViolated("symbol_cor62: m must be > 1");
    if (std::gcd(m, n) != 1) throw NotCoprime("symbol_cor62: m, n must be coprime");
    auto [p, is_pp] = detail::odd_prime_power(n);
    if (which == CorWhich::x_over_phi_primepower && !is_pp)
        throw HypothesisViolated("symbol_cor62: n is not a prime power");
    if (which == CorWhich::x_over_phi_composite && is_pp)
        throw HypothesisViolated("symbol_cor62: n has fewer than two prime factors");
    unsigned long u = mpz_get_ui(mod_inverse(mpz_class(m), mpz_class(n)).get_mpz_t());
    unsigned long par =
        N_value(n, u) + (moebius(mpz_class(n)) != 0 ? 1 : 0) * (((P.b + 1) / 2) % 2) * ((m - 1) % 2);
    int val = detail::pow_sign(-1, par);
    if (which == CorWhich::x_over_phi_primepower)
        val *= detail::pow_sign(jacobi(to_mpz(P.c), to_mpz(P.b)),
                                (m - 1) % 2 * (((p - 1) / 2) % 2));
    return val;
}

// Corollary-6.3 family, 4 | c: (x_m/phi_n) = (c/b)^{(m-1)(p-1)/2} for n an odd
// prime power, = 1 for composite odd n; (phi_n/x_m) = 1 for even n > 2.
inline int symbol_cor63(const LucasParams& P, unsigned long m, unsigned long n, CorWhich which) {
    if (!(P.delta > 0 && P.b > 0 && P.flags.four_divides_c))
        throw HypothesisViolated("symbol_cor63: need delta > 0, b > 0, 4 | c");
    if (m < 1) throw HypothesisViolated("symbol_cor63: m must be >= 1");
    if (std::gcd(m, n) != 1) throw NotCoprime("symbol_cor63: m, n must be coprime");
    if (which == CorWhich::phi_over_x_even) {
        if (n <= 2 || n % 2 != 0) throw HypothesisViolated("symbol_cor63: n must be even, > 2");
        return 1;
    }
    if (n < 3 || n % 2 == 0) throw HypothesisViolated("symbol_cor63: n must be odd, > 1");
    auto [p, is_pp] = detail::odd_prime_power(n);
    if (which == CorWhich::x_over_phi_primepower) {
        if (!is_pp) throw HypothesisViolated("symbol_cor63: n is not a prime power");
        return detail::pow_sign(jacobi(to_mpz(P.c), to_mpz(P.b)),
                                (m - 1) % 2 * (((p - 1) / 2) % 2));
    }
    if (is_pp) throw HypothesisViolated("symbol_cor63: n has fewer than two prime factors");
    return 1;
}

// Corollary-6.4 family, 2 | b, c odd. For n an odd prime power,
// (x_m/phi_n) = (m/p)^{(c-1)/2} (2/p)^{(m-1)(b+c-1)/2} (b/|c|)^{(m-1)(p-1)/2};
// composite odd n gives 1; even n > 2 gives (phi_n/x_m) = 1 except
// c = -1 (4), n a power of 2 and m = +-3 (8), which gives -1.
inline int symbol_cor64(const LucasParams& P, unsigned long m, unsigned long n, CorWhich which) {
    if (!(P.delta > 0 && P.b > 0 && P.flags.b_even))
        throw HypothesisViolated("symbol_cor64: need delta > 0, b > 0 even, c odd");
    if (m < 1) throw HypothesisViolated("symbol_cor64: m must be >= 1");
    if (std::gcd(m, n) != 1) throw NotCoprime("symbol_cor64: m, n must be coprime");
    if (which == CorWhich::phi_over_x_even) {
        if (n <= 2 || n % 2 != 0) throw HypothesisViolated("symbol_cor64: n must be even, > 2");
        bool pow2 = (n & (n - 1)) == 0;
        bool c_is_m1_mod4 = ((P.c % 4) + 4) % 4 == 3;
        unsigned long m8 = m % 8;
        return c_is_m1_mod4 && pow2 && (m8 == 3 || m8 == 5) ? -1 : 1;
    }
    if (n < 3 || n % 2 == 0) throw HypothesisViolated("symbol_cor64: n must be odd, > 1");
    auto [p, is_pp] = detail::odd_prime_power(n);
    if (which == CorWhich::x_over_phi_primepower) {
        if (!is_pp) throw HypothesisViolated("symbol_cor64: n is not a prime power");
        mpz_class pz(p);
        return detail::pow_sign(jacobi(mpz_class(m), pz), detail::mod2((P.c - 1) / 2)) *
               detail::pow_sign(jacobi(mpz_class(2), pz),
                                (m - 1) % 2 * detail::mod2((P.b + P.c - 1) / 2)) *
               detail::pow_sign(jacobi(to_mpz(P.b), to_mpz(std::llabs(P.c))),
                                (m - 1) % 2 * (((p - 1) / 2) % 2));
    }
    if (is_pp) throw HypothesisViolated("symbol_cor64: n has fewer than two prime factors");
    return 1;
}

// (x_{d+1} / x_d) = 1 in class T.
inline bool prop2_check(LucasSequence& seq, unsigned long d) {
    if (!seq.params().in_class_T()) throw HypothesisViolated("prop2_check: parameters not in class T");
    if (d < 1) throw InvalidArgument("prop2_check: d must be >= 1");
    return symbol_direct(seq, d + 1, d) == 1;
}

// --- grid runner -----------------------------------------------------------

enum class LawId {
    theorem4,
    eq4,
    eq5,
    eq2_terjanian,
    eq3_rotkiewicz,
    prop61,
    cor62_x_over_phi,
    cor62_phi_over_x,
    cor63_x_over_phi,
    cor63_phi_over_x,
    cor64_x_over_phi,
    cor64_phi_over_x,
    prop2,
};

inline const char* law_name(LawId id) {
    switch (id) {
        case LawId::theorem4: return "theorem4";
        case LawId::eq4: return "eq4";
        case LawId::eq5: return "eq5";
        case LawId::eq2_terjanian: return "eq2_terjanian";
        case LawId::eq3_rotkiewicz: return "eq3_rotkiewicz";
        case LawId::prop61: return "prop61";
        case LawId::cor62_x_over_phi: return "cor62_x_over_phi";
        case LawId::cor62_phi_over_x: return "cor62_phi_over_x";
        case LawId::cor63_x_over_phi: return "cor63_x_over_phi";
        case LawId::cor63_phi_over_x: return "cor63_phi_over_x";
        case LawId::cor64_x_over_phi: return "cor64_x_over_phi";
        case LawId::cor64_phi_over_x: return "cor64_phi_over_x";
        case LawId::prop2: return "prop2";
    }
    return "?";
}

inline std::optional<LawId> law_from_name(const std::string& s) {
    for (LawId id : {LawId::theorem4, LawId::eq4, LawId::eq5, LawId::eq2_terjanian,
                     LawId::eq3_rotkiewicz, LawId::prop61, LawId::cor62_x_over_phi,
                     LawId::cor62_phi_over_x, LawId::cor63_x_over_phi, LawId::cor63_phi_over_x,
                     LawId::cor64_x_over_phi, LawId::cor64_phi_over_x, LawId::prop2})
        if (s == law_name(id)) return id;
    return std::nullopt;
}

struct LawCell {
    long long b = 0, c = 0;
    std::vector<std::pair<std::string, long long>> indices;
};

struct LawMismatch {
    LawCell cell;
    std::string formula, oracle;
};

struct LawSkip {
    LawCell cell;
    std::string reason;
};

struct LawReport {
    std::string law_id;
    std::string grid;
    size_t cells_checked = 0, matches = 0;
    std::vector<LawMismatch> mismatches;
    std::vector<LawSkip> skipped;
    bool clean() const { return mismatches.empty(); }
};

struct LawGrid {
    std::vector<LucasParams> params;
    unsigned long num_max = 0; // bound for the first index of each cell
    unsigned long den_max = 0; // bound for the second index
};

namespace detail {

template <typename F>
inline void parallel_for(size_t count, unsigned jobs, F&& body) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    size_t nt = std::min<size_t>(jobs, count);
    std::vector<std::thread> threads;
    threads.reserve(nt);
    for (size_t t = 0; t < nt; ++t)
        threads.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& th : threads) th.join();
}

struct CellOutcome {
    enum Kind { match, mismatch, skip } kind = skip;
    int formula = 0, oracle = 0;
    std::string reason;
};

// Reason a whole parameter pair falls outside a law's class, if any.
inline std::optional<std::string> law_class_reason(LawId id, const LucasParams& P) {
    auto need = [&](bool ok, const char* msg) -> std::optional<std::string> {
        if (ok) return std::nullopt;
        return std::string(msg);
    };
    switch (id) {
        case LawId::theorem4:
        case LawId::eq4:
        case LawId::eq5:
        case LawId::prop2:
            return need(P.in_class_T(), "parameters not in class T");
        case LawId::eq2_terjanian:
            return need(P.delta > 0 && P.b > 0 && P.flags.b_even && ((P.c % 4) + 4) % 4 == 3,
                        "need delta > 0, b > 0 even, c = -1 mod 4");
        case LawId::eq3_rotkiewicz:
        case LawId::cor62_x_over_phi:
        case LawId::cor62_phi_over_x:
            return need(P.delta > 0 && P.b > 0 && P.flags.c_is_2_mod_4,
                        "need delta > 0, b > 0, c = 2 mod 4");
        case LawId::prop61:
            return need(P.delta > 0 && P.b > 0 && !(P.b % 2 != 0 && P.c % 2 != 0),
                        "need delta > 0, b > 0 and b or c even");
        case LawId::cor63_x_over_phi:
        case LawId::cor63_phi_over_x:
            return need(P.delta > 0 && P.b > 0 && P.flags.four_divides_c,
                        "need delta > 0, b > 0, 4 | c");
        case LawId::cor64_x_over_phi:
        case LawId::cor64_phi_over_x:
            return need(P.delta > 0 && P.b > 0 && P.flags.b_even,
                        "need delta > 0, b > 0 even, c odd");
    }
    return std::nullopt;
}

struct IndexedCell {
    unsigned long i = 0, j = 0;
};

inline std::vector<IndexedCell> law_cells(LawId id, const LawGrid& g) {
    std::vector<IndexedCell> cells;
    auto push_all = [&](unsigned long ilo, unsigned long istep, unsigned long jlo,
                        unsigned long jstep) {
        for (unsigned long i = ilo; i <= g.num_max; i += istep)
            for (unsigned long j = jlo; j <= g.den_max; j += jstep) cells.push_back({i, j});
    };
    switch (id) {
        case LawId::theorem4: push_all(1, 1, 2, 1); break;
        case LawId::eq4:
        case LawId::eq5: push_all(1, 1, 1, 1); break;
        case LawId::eq2_terjanian: push_all(1, 2, 1, 2); break;
        case LawId::eq3_rotkiewicz: push_all(1, 2, 3, 2); break;
        case LawId::prop61:
        case LawId::cor63_x_over_phi:
        case LawId::cor64_x_over_phi: push_all(1, 1, 3, 2); break;
        case LawId::cor62_x_over_phi: push_all(2, 1, 3, 2); break;
        case LawId::cor62_phi_over_x: push_all(4, 2, 3, 2); break;
        case LawId::cor63_phi_over_x:
        case LawId::cor64_phi_over_x: push_all(1, 2, 4, 2); break;
        case LawId::prop2:
            for (unsigned long d = 1; d <= g.num_max; ++d) cells.push_back({d, 0});
            break;
    }
    return cells;
}

inline std::pair<const char*, const char*> law_index_names(LawId id) {
    switch (id) {
        case LawId::theorem4:
        case LawId::eq4:
        case LawId::eq5: return {"k", "m"};
        case LawId::prop2: return {"d", ""};
        default: return {"m", "n"};
    }
}

// Formula vs oracle for one cell. Throws nothing: errors become skips.
inline CellOutcome law_eval(LawId id, LucasSequence& seq, unsigned long i, unsigned long j) {
    CellOutcome out;
    const LucasParams& P = seq.params();
    try {
        bool coprime = std::gcd(i, j == 0 ? 1ul : j) == 1;
        switch (id) {
            case LawId::theorem4:
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                out.formula = symbol_theorem4(P, i, j);
                out.oracle = symbol_direct(seq, i, j);
                break;
            case LawId::eq4: {
                if (j == 2) { out.reason = "m = 2 excluded"; return out; }
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                mpz_class u = j == 1 ? mpz_class(0) : mod_inverse(mpz_class(i), mpz_class(j));
                out.formula = symbol_eq4(mpz_class(i), mpz_class(j), u);
                out.oracle = symbol_direct(seq, i, j);
                break;
            }
            case LawId::eq5:
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                out.formula = symbol_eq5(P, i, j);
                out.oracle = symbol_direct_x_over_phi(seq, i, j);
                break;
            case LawId::eq2_terjanian:
                out.formula = jacobi(mpz_class(i), mpz_class(j));
                out.oracle = symbol_direct(seq, i, j);
                break;
            case LawId::eq3_rotkiewicz:
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                out.formula = detail::pow_sign(-1, lambda_parity(mpz_class(i), mpz_class(j)));
                out.oracle = symbol_direct(seq, i, j);
                break;
            case LawId::prop61:
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                out.formula = symbol_prop61(P, i, j);
                out.oracle = symbol_direct(seq, i, j);
                break;
            case LawId::cor62_x_over_phi: {
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                bool pp = odd_prime_power(j).second;
                out.formula = symbol_cor62(P, i, j,
                                           pp ? CorWhich::x_over_phi_primepower
                                              : CorWhich::x_over_phi_composite);
                out.oracle = symbol_direct_x_over_phi(seq, i, j);
                break;
            }
            case LawId::cor62_phi_over_x:
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                out.formula = symbol_cor62(P, i, j, CorWhich::phi_over_x_even);
                out.oracle = symbol_direct_phi_over_x(seq, i, j);
                break;
            case LawId::cor63_x_over_phi:
            case LawId::cor64_x_over_phi: {
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                bool pp = odd_prime_power(j).second;
                CorWhich w = pp ? CorWhich::x_over_phi_primepower : CorWhich::x_over_phi_composite;
                out.formula = id == LawId::cor63_x_over_phi ? symbol_cor63(P, i, j, w)
                                                            : symbol_cor64(P, i, j, w);
                out.oracle = symbol_direct_x_over_phi(seq, i, j);
                break;
            }
            case LawId::cor63_phi_over_x:
            case LawId::cor64_phi_over_x:
                if (!coprime) { out.reason = "indices not coprime"; return out; }
                out.formula = id == LawId::cor63_phi_over_x
                                  ? symbol_cor63(P, i, j, CorWhich::phi_over_x_even)
                                  : symbol_cor64(P, i, j, CorWhich::phi_over_x_even);
                out.oracle = symbol_direct_phi_over_x(seq, j, i);
                break;
            case LawId::prop2:
                out.formula = 1;
                out.oracle = symbol_direct(seq, i + 1, i);
                break;
        }
    } catch (const Error& e) {
        out.kind = CellOutcome::skip;
        out.reason = e.what();
        return out;
    }
    out.kind = out.formula == out.oracle ? CellOutcome::match : CellOutcome::mismatch;
    return out;
}

} // namespace detail

inline LawReport run_law(LawId id, const LawGrid& grid, unsigned jobs = 1) {
    LawReport rep;
    rep.law_id = law_name(id);
    {
        std::string g = "params=[";
        for (size_t i = 0; i < grid.params.size(); ++i) {
            if (i) g += ",";
            g += "(" + std::to_string(grid.params[i].original_b()) + "," +
                 std::to_string(grid.params[i].c) + ")";
        }
        g += "] num_max=" + std::to_string(grid.num_max) +
             " den_max=" + std::to_string(grid.den_max);
        rep.grid = g;
    }
    auto [iname, jname] = detail::law_index_names(id);
    for (const LucasParams& P : grid.params) {
        if (auto why = detail::law_class_reason(id, P)) {
            rep.cells_checked += 1;
            rep.skipped.push_back({LawCell{P.original_b(), P.c, {}}, *why});
            continue;
        }
        std::vector<detail::IndexedCell> cells = detail::law_cells(id, grid);
        std::vector<detail::CellOutcome> outcomes(cells.size());
        detail::parallel_for(cells.size(), jobs, [&](size_t ix) {
            thread_local std::optional<LucasSequence> seq;
            if (!seq || seq->params().b != P.b || seq->params().c != P.c)
                seq.emplace(P);
            outcomes[ix] = detail::law_eval(id, *seq, cells[ix].i, cells[ix].j);
        });
        for (size_t ix = 0; ix < cells.size(); ++ix) {
            const auto& o = outcomes[ix];
            LawCell cell{P.original_b(), P.c, {{iname, (long long)cells[ix].i}}};
            if (*jname) cell.indices.emplace_back(jname, (long long)cells[ix].j);
            rep.cells_checked += 1;
            if (o.kind == detail::CellOutcome::match) {
                rep.matches += 1;
            } else if (o.kind == detail::CellOutcome::mismatch) {
                rep.mismatches.push_back(
                    {cell, std::to_string(o.formula), std::to_string(o.oracle)});
            } else {
                rep.skipped.push_back({cell, o.reason});
            }
        }
    }
    return rep;
}

} // namespace lucaslab
