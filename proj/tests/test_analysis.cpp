// Volume arithmetic, the three row-count bounds, and the exhaustive
// correcting-matrix verifier.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "doctest.h"

#include "grouptest/analysis.hpp"
#include "grouptest/bit_matrix.hpp"
#include "grouptest/bitvec.hpp"
#include "grouptest/errors.hpp"
#include "grouptest/support_set.hpp"

using namespace gt;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("hamming volume") {
    CHECK(hamming_volume(10, 0) == 1);
    CHECK(hamming_volume(4, 2) == 11); // 1 + 4 + 6
    CHECK(hamming_volume(6, 6) == 64);
    CHECK_THROWS_AS(hamming_volume(3, 4), std::invalid_argument);

    SUBCASE("Pascal recurrence") {
        std::mt19937_64 rng(100);
        for (int trial = 0; trial < 30; ++trial) {
            std::uint64_t a = 2 + rng() % 50;
            std::uint64_t b = 1 + rng() % (a - 1); // 1 <= b < a
            CHECK(hamming_volume(a, b) ==
                  hamming_volume(a - 1, b) + hamming_volume(a - 1, b - 1));
        }
    }
    SUBCASE("entropy upper bound") {
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 20; ++trial) {
            std::uint64_t a = 4 + rng() % 56;
            std::uint64_t b = 1 + rng() % (a / 2); // b <= a/2
            double ratio = static_cast<double>(b) / static_cast<double>(a);
            double h = -ratio * std::log2(ratio) - (1 - ratio) * std::log2(1 - ratio);
            double lhs = std::log2(hamming_volume(a, b).convert_to<double>());
            CHECK(lhs <= static_cast<double>(a) * h + 1e-9);
        }
    }
}

TEST_CASE("close ball volume") {
    CHECK(close_ball_volume(8, 3, 0, 0) == 1);
    CHECK(close_ball_volume(4, 2, 1, 1) == 9);   // (1+2)(1+2)
    CHECK(close_ball_volume(4, 2, 10, 10) == 16); // budgets cap: whole space
    CHECK_THROWS_AS(close_ball_volume(3, 4, 0, 0), std::invalid_argument);

    SUBCASE("matches a brute-force count over the whole cube") {
        for (std::uint64_t a = 1; a <= 6; ++a)
            for (std::uint64_t b = 0; b <= a; ++b)
                for (std::uint64_t e0 = 0; e0 <= 3; ++e0)
                    for (std::uint64_t e1 = 0; e1 <= 3; ++e1) {
                        BitVec base(a);
                        for (std::uint64_t i = 0; i < b; ++i) base.set(i);
                        std::uint64_t count = 0;
                        for (std::uint64_t word = 0; word < (std::uint64_t{1} << a); ++word) {
                            BitVec w(a);
                            for (std::uint64_t i = 0; i < a; ++i)
                                if (word >> i & 1) w.set(i);
                            auto [d0, d1] = closeness_deltas(base, w);
                            if (d0 <= e0 && d1 <= e1) ++count;
                        }
                        CHECK(close_ball_volume(a, b, e0, e1) == count);
                    }
    }
}

TEST_CASE("lemma1 ratio bound") {
    BoundReport ok = lemma1_check(4, 2, 1, 1, 0, 0);
    CHECK(ok.computed == Rational(2));
    CHECK(ok.satisfied); // 2 <= 4/2, boundary included

    BoundReport bad = lemma1_check(10, 1, 10, 10, 0, 0);
    CHECK(bad.computed == Rational(11));
    CHECK_FALSE(bad.satisfied); // 11 > 10

    BoundReport slack = lemma1_check(10, 1, 10, 10, 5, 5);
    CHECK(slack.computed == Rational(1));
    CHECK(slack.satisfied);

    CHECK(lemma1_check(1, 1, 0, 0, 0, 0).satisfied); // 1 <= 1
    CHECK_THROWS_AS(lemma1_check(0, 1, 0, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_check(1, 0, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("lemma2 disjuncts") {
    CHECK(lemma2_check(4, 2, 10, 0, 0, 0, Rational(1, 2)).detail == "first");
    CHECK(lemma2_check(4, 2, 10, 0, 5, 0, Rational(1, 2)).detail == "both");
    CHECK(lemma2_check(1, 1, 10, 1000, 5, 0, Rational(1, 2)).detail == "second");
    BoundReport none = lemma2_check(4, 2, 100, 100, 0, 0, Rational(1, 2));
    CHECK(none.detail == "none");
    CHECK_FALSE(none.satisfied);

    CHECK_THROWS_AS(lemma2_check(4, 0, 10, 0, 0, 0, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(lemma2_check(4, 11, 10, 0, 0, 0, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(lemma2_check(4, 2, 10, 0, 0, 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(lemma2_check(4, 2, 10, 0, 0, 0, Rational(0)), std::invalid_argument);

    SUBCASE("detail always matches a recount across an eps sweep") {
        for (int num = 1; num <= 9; ++num) {
            Rational eps(num, 10);
            std::uint64_t m = 16, d = 3, n = 40, e1 = 7, acc_e0 = 2, acc_e1 = 1;
            BoundReport r = lemma2_check(m, d, n, e1, acc_e0, acc_e1, eps);
            bool first = Rational(static_cast<std::int64_t>(e1)) <
                         Rational(static_cast<std::int64_t>((acc_e1 + 1) * m)) /
                             (eps * Rational(static_cast<std::int64_t>(d)));
            bool second = Rational(static_cast<std::int64_t>(acc_e0)) >=
                          (Rational(1) - eps) *
                              Rational(static_cast<std::int64_t>(n - d + 1)) /
                              Rational(static_cast<std::int64_t>((acc_e1 + 1) * (acc_e1 + 1)));
            std::string expect = first ? (second ? "both" : "first")
                                       : (second ? "second" : "none");
            CHECK(r.detail == expect);
            CHECK(r.satisfied == (first || second));
        }
    }
}

TEST_CASE("lemma3 counting bound") {
    SUBCASE("exact accuracy, closed form lands on an integer") {
        Lemma3Bound b = lemma3_bound(1024, 8, 8, 0);
        CHECK(b.closed_form == doctest::Approx(40.0).epsilon(1e-12));
    }
    SUBCASE("noiseless exact value") {
        Lemma3Bound b = lemma3_bound(256, 4, 0, 0);
        CHECK(b.ball_count == BigInt(177589057));
        CHECK(b.decodable_volume == 1);
        CHECK(b.exact_bound == 28);
        CHECK(b.closed_form == doctest::Approx(20.0).epsilon(1e-12));
    }
    SUBCASE("d = n degenerates the closed form, not the exact bound") {
        Lemma3Bound b = lemma3_bound(6, 6, 0, 0);
        CHECK(b.exact_bound == 6); // log2 of 2^6 supports
        CHECK(b.closed_form <= 0.0);
    }
    SUBCASE("exact bound is the ceiling of the volume quotient") {
        std::mt19937_64 rng(102);
        for (int trial = 0; trial < 40; ++trial) {
            std::uint64_t n = 16 + rng() % 1000;
            std::uint64_t d = 1 + rng() % (n / 4);
            std::uint64_t e0 = rng() % std::min<std::uint64_t>(n - d + 1, 8);
            std::uint64_t e1 = rng() % 8;
            Lemma3Bound b = lemma3_bound(n, d, e0, e1);
            std::uint64_t outside = n - d - e0;
            CHECK(b.ball_count == hamming_volume(n, d));
            CHECK(b.decodable_volume ==
                  hamming_volume(d + e0, std::min(e0, d + e0)) *
                      hamming_volume(outside, std::min(e1, outside)));
            // Smallest s with 2^s * v >= |B|; s may be negative.
            auto covers = [&](std::int64_t s) {
                BigInt lhs = b.decodable_volume, rhs = b.ball_count;
                if (s >= 0)
                    lhs <<= static_cast<unsigned>(s);
                else
                    rhs <<= static_cast<unsigned>(-s);
                return lhs >= rhs;
            };
            CHECK(covers(b.exact_bound));
            CHECK_FALSE(covers(b.exact_bound - 1));
            // With e1 = 0 the closed form is a true lower bound.
            if (e1 == 0)
                CHECK(static_cast<double>(b.exact_bound) >= b.closed_form - 1e-6);
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(lemma3_bound(8, 0, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(lemma3_bound(8, 9, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(lemma3_bound(8, 6, 3, 0), std::invalid_argument);
    }
}

TEST_CASE("verify_correcting on identity matrices") {
    for (std::uint64_t n : {4, 6, 8}) {
        BitMatrix I = BitMatrix::identity(n);
        VerifyReport clean = verify_correcting(I, 1, {0, 0}, {0, 0});
        CHECK(clean.pass);
        CHECK(clean.pairs_evaluated == n + 1); // every weight-<=1 input once

        VerifyReport noisy = verify_correcting(I, 1, {1, 0}, {1, 0});
        CHECK(noisy.pass);
        CHECK(noisy.pairs_evaluated > n + 1);
    }
}

TEST_CASE("verify_correcting reports a validated witness on failure") {
    // Columns 0 and 1 are identical, so observing them is ambiguous at d = 1.
    BitMatrix A(4, 4, {{0, 1}, {0, 1}, {2}, {3}});
    VerifyReport r = verify_correcting(A, 1, {0, 0}, {0, 0});
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.witness_observation.has_value());
    REQUIRE(r.witness_recovered.has_value());
    REQUIRE(r.witness_violator.has_value());
    CHECK(r.witness_observation->str() == "1100");
    CHECK(*r.witness_recovered == SupportSet(4, {0, 1}));
    CHECK(r.witness_violator->is_subset_of(*r.witness_recovered));
    CHECK(r.witness_recovered->difference_size(*r.witness_violator) > 0);
    // The violator really is consistent with the witness observation.
    CHECK(encode(A, *r.witness_violator) == *r.witness_observation);

    // One spare accuracy slot absorbs the duplicate.
    CHECK(verify_correcting(A, 1, {0, 0}, {1, 0}).pass);
}

TEST_CASE("verify_correcting contract checks") {
    BitMatrix I = BitMatrix::identity(8);
    CHECK_THROWS_AS(verify_correcting(I, 1, {0, 0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_correcting(I, 2, {0, 0}, {0, 0}, 10), CapExceeded);
}

TEST_CASE("enumeration cap honors GT_ENUM_CAP") {
    unsetenv("GT_ENUM_CAP");
    CHECK(default_enum_cap() == 10000000);
    setenv("GT_ENUM_CAP", "50", 1);
    CHECK(default_enum_cap() == 50);
    setenv("GT_ENUM_CAP", "not-a-number", 1);
    CHECK(default_enum_cap() == 10000000);
    unsetenv("GT_ENUM_CAP");
}
