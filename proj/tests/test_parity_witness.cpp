#include "lucaslab/parity_witness.hpp"

#include <gtest/gtest.h>

using namespace lucaslab;

TEST(Prop41, ExcludedModuli) {
    EXPECT_THROW(prop41_witness(0), InvalidArgument);
    EXPECT_THROW(prop41_witness(1), ExcludedModulus);
    EXPECT_THROW(prop41_witness(2), ExcludedModulus);
    EXPECT_THROW(prop41_witness(6), ExcludedModulus);
}

TEST(Prop41, WitnessSweep) {
    for (unsigned long m = 3; m <= 400; ++m) {
        if (m == 6) continue;
        ParityWitness w = prop41_witness(m);
        EXPECT_EQ(w.m, m);
        EXPECT_EQ(gcd(w.u, mpz_class(m)), 1) << m;
        EXPECT_EQ(gcd(w.u_prime, mpz_class(m)), 1) << m;
        EXPECT_GT(w.u, 0) << m;
        ASSERT_NE(w.difference % 2, 0) << "m=" << m;
        long long recomputed = (long long)N_value(m, mpq_class(w.u_prime)) -
                               (long long)N_value(m, mpq_class(w.u));
        EXPECT_EQ(recomputed, w.difference) << m;
    }
}

TEST(Prop41, SixHasConstantParity) {
    unsigned long base = N_value(6, 1ul) % 2;
    for (unsigned long u = 1; u <= 200; ++u) {
        if (std::gcd(u, 6ul) != 1) continue;
        EXPECT_EQ(N_value(6, u) % 2, base) << u;
    }
}

TEST(Prop55, DifferenceIsOne) {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul})
        for (unsigned long e = 1; e <= 3; ++e) {
            ParityWitness w = prop55_witness(p, e);
            unsigned long pe1 = 1;
            for (unsigned long i = 0; i <= e; ++i) pe1 *= p;
            EXPECT_EQ(w.m, pe1);
            EXPECT_EQ(w.u, 1);
            EXPECT_EQ(w.u_prime, (mpz_class(pe1 / p) + 1) / 2);
            EXPECT_EQ(w.difference, 1) << "p=" << p << " e=" << e;
        }
    EXPECT_THROW(prop55_witness(3, 0), InvalidArgument);
    EXPECT_THROW(prop55_witness(2, 1), InvalidArgument);
    EXPECT_THROW(prop55_witness(9, 1), InvalidArgument);
}

TEST(Prop53, RationalLaneAtEOne) {
    Prop53Witness w = prop53_witness(5, 3, 1);
    EXPECT_EQ(w.m, 15u);
    EXPECT_EQ(w.eval_modulus, 3u);
    EXPECT_EQ(w.u, mpq_class(1, 5));
    EXPECT_EQ(w.u_prime, mpq_class(4, 5));
    EXPECT_EQ(w.difference, 1);
}

TEST(Prop53, ThreeTwoFamily) {
    EXPECT_THROW(prop53_witness(3, 2, 1), HypothesisViolated);
    Prop53Witness w2 = prop53_witness(3, 2, 2);
    EXPECT_EQ(w2.m, 18u);
    EXPECT_EQ(w2.u, mpq_class(1));
    EXPECT_EQ(w2.u_prime, mpq_class(5));
    EXPECT_EQ(w2.difference, 1); // N(18, 5) - N(18, 1)
    Prop53Witness w3 = prop53_witness(3, 2, 3);
    EXPECT_EQ(w3.m, 54u);
    EXPECT_EQ(w3.u_prime, mpq_class(5));
    EXPECT_EQ(w3.difference, 1);
    Prop53Witness w4 = prop53_witness(3, 2, 4);
    EXPECT_EQ(w4.m, 162u);
    EXPECT_EQ(w4.u_prime, mpq_class(17));
    EXPECT_EQ(w4.difference, 1);
}

TEST(Prop53, TableLanes) {
    // every admissible (p, n, e) cell in the small table yields difference 1
    struct Cell { unsigned long p, n, e; };
    std::vector<Cell> cells = {{3, 4, 1}, {3, 4, 2}, {5, 3, 1}, {5, 3, 2}, {5, 6, 1},
                               {5, 6, 2}, {7, 2, 1}, {7, 2, 2}, {11, 2, 1}, {11, 2, 2},
                               {13, 2, 1}, {5, 2, 1}, {5, 2, 2}};
    for (const Cell& c : cells) {
        Prop53Witness w = prop53_witness(c.p, c.n, c.e);
        EXPECT_EQ(w.difference, 1) << c.p << " " << c.n << " " << c.e;
        mpz_class mz(w.m);
        EXPECT_EQ(gcd(w.base_u, mz), 1);
        EXPECT_EQ(gcd(mpz_class(w.base_u + c.n), mz), 1);
    }
    EXPECT_THROW(prop53_witness(7, 5, 1), HypothesisViolated); // 5 divides neither 6 nor 8
    EXPECT_THROW(prop53_witness(4, 2, 1), InvalidArgument);
    EXPECT_THROW(prop53_witness(5, 3, 0), InvalidArgument);
}

TEST(Lemma54, WindowSearch) {
    // least admissible u in (start, start + n]
    for (auto [n, p] : {std::pair<unsigned long, unsigned long>{3, 7}, {5, 7}, {6, 7}, {8, 7},
                        {4, 5}, {10, 11}}) {
        for (long start : {0L, 5L, 17L, 100L}) {
            mpz_class u = lemma54_find(n, p, mpz_class(start));
            EXPECT_GT(u, start);
            EXPECT_LE(u, start + (long)n);
            EXPECT_EQ(gcd(u * (u + n), mpz_class(n) * p), 1);
            for (mpz_class v = start + 1; v < u; ++v)
                EXPECT_NE(gcd(v * (v + n), mpz_class(n) * p), 1) << "missed earlier u";
        }
    }
}

TEST(Lemma54, ExclusionsAndHypotheses) {
    EXPECT_THROW(lemma54_find(3, 5, mpz_class(0)), ExcludedCase);
    EXPECT_THROW(lemma54_find(6, 5, mpz_class(0)), ExcludedCase);
    EXPECT_THROW(lemma54_find(4, 3, mpz_class(0)), ExcludedCase);
    EXPECT_THROW(lemma54_find(5, 3, mpz_class(0)), HypothesisViolated); // p < n - 1
    EXPECT_THROW(lemma54_find(3, 4, mpz_class(0)), InvalidArgument);    // p not prime
    EXPECT_THROW(lemma54_find(2, 3, mpz_class(0)), InvalidArgument);    // n below 3
}

TEST(Lemma51, SymbolPeriodicityMod2n) {
    // (1, 2): phi_3 = 3, m = 3, period 2n = 6
    LucasSequence a{LucasParams(1, 2)};
    for (auto [k, kp] : {std::pair<unsigned long, unsigned long>{1, 7}, {2, 8}, {5, 11}, {4, 10}}) {
        auto [s1, s2] = lemma51_check(a, 3, 0, 3, k, kp);
        EXPECT_EQ(s1, s2) << k << " " << kp;
    }
    // (5, 2): phi_3 = 27 = 3 * 3^2
    LucasSequence b{LucasParams(5, 2)};
    for (auto [k, kp] : {std::pair<unsigned long, unsigned long>{1, 7}, {5, 11}, {7, 13}}) {
        auto [s1, s2] = lemma51_check(b, 3, 0, 3, k, kp);
        EXPECT_EQ(s1, s2);
    }
    // (3, 22): m = 6, phi_2 = 3, phi_6 = 75 = 3 * 5^2, period 2n = 4
    LucasSequence c{LucasParams(3, 22)};
    for (auto [k, kp] : {std::pair<unsigned long, unsigned long>{1, 5}, {5, 13}, {7, 11}}) {
        auto [s1, s2] = lemma51_check(c, 3, 1, 2, k, kp);
        EXPECT_EQ(s1, s2);
    }
}

TEST(Lemma51, HypothesisChecks) {
    LucasSequence fib{LucasParams(1, 1)};
    // phi_3 = 2, not divisible by 3
    EXPECT_THROW(lemma51_check(fib, 3, 0, 3, 1, 7), HypothesisViolated);
    LucasSequence a{LucasParams(1, 2)};
    EXPECT_THROW(lemma51_check(a, 3, 0, 3, 1, 5), HypothesisViolated); // 1 != 5 mod 6
    EXPECT_THROW(lemma51_check(a, 3, 0, 3, 3, 9), NotCoprime);
    EXPECT_THROW(lemma51_check(a, 4, 0, 3, 1, 7), InvalidArgument); // p not prime
    // (3, -2): phi_3 = 7, 3 does not divide it
    LucasSequence mer{LucasParams(3, -2)};
    EXPECT_THROW(lemma51_check(mer, 3, 0, 3, 1, 7), HypothesisViolated);
}

TEST(Lemma52, ParityChainsAtSix) {
    // Cells where p * phi_6 is a perfect square, so the congruence-class claim
    // about N is non-vacuous. Integer lane: u = u' mod n implies even gap.
    struct Cell { long long b, c; unsigned long p, n; };
    std::vector<Cell> cells = {{3, -2, 3, 2}, {3, 22, 3, 2}, {1, 2, 7, 6}, {5, 2, 31, 6}};
    for (const Cell& cell : cells) {
        LucasSequence seq{LucasParams(cell.b, cell.c)};
        mpz_class claim = mpz_class(cell.p) * phi_term(seq, 6);
        ASSERT_TRUE(is_square(claim)) << cell.b << "," << cell.c;
        for (unsigned long u = 1; u <= 60; ++u)
            for (unsigned long up = u; up <= 60; up += cell.n) {
                if (std::gcd(u, 6ul) != 1 || std::gcd(up, 6ul) != 1) continue;
                long long gap = (long long)N_value(6, up) - (long long)N_value(6, u);
                EXPECT_EQ(gap % 2, 0) << cell.b << "," << cell.c << " u=" << u << " u'=" << up;
            }
    }
    // e = 1 lane of the same chain evaluates N at modulus n with u / p rational
    for (unsigned long u = 1; u <= 40; ++u)
        for (unsigned long up = u; up <= 40; up += 2) {
            if (std::gcd(u, 6ul) != 1 || std::gcd(up, 6ul) != 1) continue;
            long long gap = (long long)N_value(2, mpq_class(up, 3)) -
                            (long long)N_value(2, mpq_class(u, 3));
            EXPECT_EQ(gap % 2, 0) << u << " " << up;
        }
}
