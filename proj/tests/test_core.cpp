#include "alspec/core.hpp"

#include "doctest.h"

#include <random>

using namespace alspec;

TEST_CASE("make_dense_factor reduces to lowest terms")
{
    const auto two = make_dense_factor(2, 1);
    CHECK(two.p() == 2);
    CHECK(two.q() == 1);

    const auto half = make_dense_factor(4, 8);
    CHECK(half.p() == 1);
    CHECK(half.q() == 2);

    const auto three_halves = make_dense_factor(3, 2);
    CHECK(three_halves.p() == 3);
    CHECK(three_halves.q() == 2);
    CHECK(three_halves.value() == 1.5);
}

TEST_CASE("make_dense_factor rejects zero or negative parts")
{
    CHECK_THROWS_AS(make_dense_factor(0, 1), InvalidArgument);
    CHECK_THROWS_AS(make_dense_factor(1, 0), InvalidArgument);
    CHECK_THROWS_AS(make_dense_factor(-2, 3), InvalidArgument);
}

TEST_CASE("parse_dense_factor")
{
    CHECK(parse_dense_factor("2/1") == make_dense_factor(2, 1));
    CHECK(parse_dense_factor("8") == make_dense_factor(8, 1));
    CHECK(parse_dense_factor("6/4") == make_dense_factor(3, 2));
    CHECK_THROWS_AS(parse_dense_factor("1/"), InvalidArgument);
    CHECK_THROWS_AS(parse_dense_factor("x/2"), InvalidArgument);
    CHECK_THROWS_AS(parse_dense_factor("0.5"), InvalidArgument);
    CHECK_THROWS_AS(parse_dense_factor("1/0"), InvalidArgument);
}

TEST_CASE("dense factor predicates")
{
    CHECK(make_dense_factor(1, 8).is_power_of_two());
    CHECK(make_dense_factor(8, 1).is_power_of_two());
    CHECK_FALSE(make_dense_factor(3, 2).is_power_of_two());
    CHECK(make_dense_factor(1, 1).at_least_one());
    CHECK_FALSE(make_dense_factor(1, 2).at_least_one());
    CHECK(make_dense_factor(1, 2) < make_dense_factor(2, 3));
    CHECK(make_dense_factor(3, 2).to_string() == "3/2");
    CHECK(make_dense_factor(4, 1).to_string() == "4");
}

TEST_CASE("validate_pair")
{
    const auto a = validate_pair(4, make_dense_factor(3, 2));
    CHECK(a.n == 4);
    CHECK(a.m == 6);

    try {
        validate_pair(4, make_dense_factor(1, 3));
        FAIL("expected IncompatibleAlpha");
    } catch (const IncompatibleAlpha& e) {
        CHECK(e.n() == 4);
        CHECK(e.p() == 1);
        CHECK(e.q() == 3);
    }

    const auto single = validate_pair(8, make_dense_factor(1, 8));
    CHECK(single.m == 1);

    CHECK_THROWS_AS(validate_pair(0, make_dense_factor(1, 1)), InvalidArgument);
}

TEST_CASE("validate_pair succeeds exactly when q divides N")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> part(1, 12);
    std::uniform_int_distribution<int> len(1, 200);
    for (int i = 0; i < 2000; ++i) {
        const auto alpha = make_dense_factor(part(rng), part(rng));
        const int n = len(rng);
        bool ok = true;
        try {
            const auto pair = validate_pair(n, alpha);
            CHECK(pair.m * alpha.q() == n * alpha.p());
        } catch (const IncompatibleAlpha&) {
            ok = false;
        }
        CHECK(ok == (n % alpha.q() == 0));
    }
}

TEST_CASE("bin_frequency")
{
    CHECK(bin_frequency(0, 16, make_dense_factor(7, 3), 2.5) == 0.0);
    CHECK(bin_frequency(3, 8, make_dense_factor(2, 1), 1.0) == 1.5);
    CHECK(bin_frequency(5, 8, make_dense_factor(1, 2), 2.0) == 5.0);
    CHECK_THROWS_AS(bin_frequency(8, 8, make_dense_factor(1, 1), 1.0), std::out_of_range);
    CHECK_THROWS_AS(bin_frequency(-1, 8, make_dense_factor(1, 1), 1.0), std::out_of_range);
}

TEST_CASE("frequency grid properties")
{
    // alpha = 1 gives the classical m / T grid
    const FrequencyGrid classic(make_dense_factor(1, 1), 2.0, 16);
    for (std::int64_t m = 0; m < 16; ++m) CHECK(classic.frequency(m) == doctest::Approx(static_cast<double>(m) / 2.0));

    // strictly increasing; halving alpha doubles every nonzero frequency
    const FrequencyGrid dense(make_dense_factor(4, 1), 1.5, 64);
    const FrequencyGrid coarse(make_dense_factor(2, 1), 1.5, 64);
    for (std::int64_t m = 1; m < 64; ++m) {
        CHECK(dense.frequency(m) > dense.frequency(m - 1));
        CHECK(coarse.frequency(m) == doctest::Approx(2.0 * dense.frequency(m)).epsilon(1e-15));
    }
    // one past the last bin sits at N / T
    CHECK(dense.spacing() * 64 == doctest::Approx(16 / 1.5));
}

TEST_CASE("signal and spectrum invariants")
{
    const Signal s(Samples(8, Complex{1.0, 0.0}), 2.0);
    CHECK(s.size() == 8);
    CHECK(s.sample_interval() * 8 == doctest::Approx(2.0));
    CHECK_THROWS_AS(Signal(Samples{}), InvalidArgument);
    CHECK_THROWS_AS(Signal(Samples(2), 0.0), InvalidArgument);

    CHECK_NOTHROW(Spectrum(Samples(6), 4, make_dense_factor(3, 2)));
    CHECK_THROWS_AS(Spectrum(Samples(5), 4, make_dense_factor(3, 2)), InvalidArgument);
    CHECK_THROWS_AS(Spectrum(Samples(1), 4, make_dense_factor(1, 3)), IncompatibleAlpha);
}
