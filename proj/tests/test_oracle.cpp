#include "paircollect/oracle.hpp"

#include "doctest.h"
#include "paircollect/distributions.hpp"
#include "paircollect/errors.hpp"

#include <cstdint>

using namespace paircollect;
using namespace paircollect::oracle;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("enumeration, hand-checkable values") {
    EnumeratedLaws two = enumerate_laws(2, 4);
    CHECK(two.total == 16);
    CHECK(two.prob_x(1, 4) == BigRational(1, 8));
    CHECK(two.prob_x(1, 2) == BigRational(1, 4));
    // first two draws unequal <=> no pair by draw 2
    CHECK(two.tail_joint(0b11, 2) == BigRational(1, 2));
    CHECK(two.tail_subset(0b11, 2) == BigRational(1, 2));

    EnumeratedLaws three = enumerate_laws(3, 3);
    CHECK(three.prob_subset(0b011, 3) == BigRational(4, 27));
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_laws(5, 4), size_guard_error);
    CHECK_THROWS_AS(enumerate_laws(3, 13), size_guard_error);
    CHECK_THROWS_AS(enumerate_laws(1, 4), parameter_error);
    CHECK_THROWS_AS(enumerate_laws(3, -1), parameter_error);
    EnumeratedLaws laws = enumerate_laws(2, 3);
    CHECK_THROWS_AS(laws.prob_subset(0, 2), parameter_error);
    CHECK_THROWS_AS(laws.prob_subset(4, 2), parameter_error);
    CHECK_THROWS_AS(laws.prob_x(1, 1), parameter_error);
    CHECK_THROWS_AS(laws.tail_subset(1, 4), parameter_error);
}

TEST_CASE("residual mass accounts for everything") {
    EnumeratedLaws laws = enumerate_laws(3, 6);
    for (unsigned mask = 1; mask < 8; ++mask) {
        BigRational sum = laws.residual_subset(mask);
        for (int k = 2; k <= laws.len; ++k) sum += laws.prob_subset(mask, k);
        CHECK(sum == 1);
    }
}

TEST_CASE("per-symbol laws are exchangeable") {
    for (int n = 2; n <= 3; ++n) {
        EnumeratedLaws laws = enumerate_laws(n, 8);
        for (int j = 2; j <= n; ++j) {
            for (int k = 2; k <= laws.len; ++k) {
                CHECK(laws.prob_x(j, k) == laws.prob_x(1, k));
            }
            CHECK(laws.residual_x(j) == laws.residual_x(1));
        }
    }
}

TEST_CASE("joint tails equal set tails, and both match the recurrences") {
    // one heavier pass at the guard boundary, reused for all three checks
    EnumeratedLaws laws = enumerate_laws(4, 12);
    for (unsigned mask = 1; mask < 16; ++mask) {
        int j = __builtin_popcount(mask);
        for (int m = 0; m <= laws.len; ++m) {
            CHECK(laws.tail_joint(mask, m) == laws.tail_subset(mask, m));
            if (m >= 1) {
                CHECK(laws.tail_subset(mask, m) == dist::tail_Y_exact(4, j, m));
            }
        }
    }
    for (int j = 1; j <= 4; ++j) {
        unsigned mask = (1u << j) - 1;
        auto pmf = recurrence_pmf_Y(4, j, 12);
        for (int k = 2; k <= 12; ++k) {
            CHECK(laws.prob_subset(mask, k) == pmf[static_cast<std::size_t>(k - 2)]);
        }
    }
}

TEST_CASE("recurrence pmf values") {
    auto geometric = recurrence_pmf_Y(2, 2, 5);
    REQUIRE(geometric.size() == 4);
    CHECK(geometric[0] == BigRational(1, 2));
    CHECK(geometric[1] == BigRational(1, 4));
    CHECK(geometric[2] == BigRational(1, 8));
    CHECK(geometric[3] == BigRational(1, 16));

    CHECK(recurrence_pmf_Y(3, 2, 3)[1] == BigRational(4, 27));

    for (int n = 2; n <= 7; ++n) {
        for (int j = 1; j <= n; ++j) {
            CHECK(recurrence_pmf_Y(n, j, 2)[0] == BigRational(j, BigInt(n) * n));
        }
    }
}

TEST_CASE("recurrence pmf partial sums stay below one, exactly") {
    for (int n : {2, 3, 5}) {
        for (int j : {1, n}) {
            auto pmf = recurrence_pmf_Y(n, j, 40);
            BigRational sum = 0;
            for (const BigRational& p : pmf) {
                sum += p;
                CHECK(sum <= 1);
            }
            CHECK(sum + dist::tail_Y_exact(n, j, 40) == 1);
        }
    }
    CHECK_THROWS_AS(recurrence_pmf_Y(60, 2, 10), size_guard_error);
    CHECK_THROWS_AS(recurrence_pmf_Y(3, 2, 20000), size_guard_error);
    CHECK_THROWS_AS(recurrence_pmf_Y(3, 2, 1), parameter_error);
}

TEST_SUITE_END();
