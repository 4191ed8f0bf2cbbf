#include "alspec/baseline.hpp"
#include "alspec/oracle.hpp"

#include "doctest.h"
#include "reference.hpp"

#include <random>

using namespace alspec;
using reference::max_abs_diff;

namespace {

const Complex I{0.0, 1.0};

DenseFactor alpha_of(int p, int q) { return make_dense_factor(p, q); }

}  // namespace

TEST_CASE("naive_forward small cases")
{
    const auto impulse = oracle::naive_forward(Signal(Samples{Complex{1.0, 0.0}}), alpha_of(2, 1));
    REQUIRE(impulse.size() == 2);
    CHECK(max_abs_diff(impulse.bins(), {1.0, 1.0}) < 1e-15);

    const auto dc = oracle::naive_forward(Signal({1.0, 1.0}), alpha_of(1, 1));
    CHECK(max_abs_diff(dc.bins(), {2.0, 0.0}) < 1e-15);

    const auto shifted = oracle::naive_forward(Signal({0.0, 1.0}), alpha_of(2, 1));
    CHECK(max_abs_diff(shifted.bins(), {1.0, -I, -1.0, I}) < 1e-15);
}

TEST_CASE("naive_forward at alpha = 1/2 matches the symbolic expansion")
{
    // alpha N = 2: X_0 = a+b+c+d, X_1 = sum_n exp(-i pi n) x_n = a-b+c-d
    const auto x = reference::random_disk(4, 11);
    const Complex a = x[0], b = x[1], c = x[2], d = x[3];
    const auto spectrum = oracle::naive_forward(Signal(x), alpha_of(1, 2));
    REQUIRE(spectrum.size() == 2);
    CHECK(max_abs_diff(spectrum.bins(), Samples{a + b + c + d, a - b + c - d}) < 1e-15);
}

TEST_CASE("naive_forward agrees with a long-double textbook evaluation")
{
    for (const auto& [p, q] : {std::pair{1, 1}, {2, 1}, {3, 2}, {1, 4}, {5, 3}, {8, 1}}) {
        for (int n : {6, 12, 24, 48}) {
            if (n % q != 0) continue;
            const auto x = reference::random_disk(static_cast<std::size_t>(n), static_cast<std::uint64_t>(n * 31 + p));
            const auto got = oracle::naive_forward(Signal(x), alpha_of(p, q)).bins();
            CHECK(reference::max_rel_diff(got, reference::textbook_alpha_dft(x, p, q)) < 1e-13);
        }
    }
}

TEST_CASE("naive_forward counts N * alpha N products and rejects incompatible alpha")
{
    OpCounter counter;
    (void)oracle::naive_forward(Signal(Samples(8, 1.0)), alpha_of(1, 4), counter);
    CHECK(counter.complex_mults == 16);
    CHECK_THROWS_AS(oracle::naive_forward(Signal(Samples(4, 1.0)), alpha_of(1, 3)), IncompatibleAlpha);
}

TEST_CASE("naive_inverse examples")
{
    const auto x = reference::random_disk(4, 3);

    const auto classic = oracle::naive_inverse(oracle::naive_forward(Signal(x), alpha_of(1, 1)));
    CHECK(max_abs_diff(classic.samples(), x) < 1e-14);

    const auto dense = oracle::naive_inverse(oracle::naive_forward(Signal(x), alpha_of(2, 1)));
    CHECK(max_abs_diff(dense.samples(), x) < 1e-14);

    // alpha = 1/2: (1/2)(X_0 + X_1) = a + c, (1/2)(X_0 - X_1) = b + d; periodic beyond alpha N
    const auto sparse = oracle::naive_inverse(oracle::naive_forward(Signal(x), alpha_of(1, 2)));
    REQUIRE(sparse.size() == 4);
    const Complex ac = x[0] + x[2];
    const Complex bd = x[1] + x[3];
    CHECK(max_abs_diff(sparse.samples(), {ac, bd, ac, bd}) < 1e-14);
}

TEST_CASE("orthogonality kernel examples")
{
    for (const auto& [n, a] : {std::pair{4, alpha_of(1, 1)}, {8, alpha_of(1, 4)}, {6, alpha_of(3, 2)}}) {
        CHECK(std::abs(oracle::orthogonality_kernel(3, 3, n, a) - 1.0) < 1e-15);
    }
    // n - l = -2 = -alpha N: on the comb
    CHECK(std::abs(oracle::orthogonality_kernel(0, 2, 4, alpha_of(1, 2)) - 1.0) < 1e-15);
    // eight 8th roots of unity sum to zero
    CHECK(std::abs(oracle::orthogonality_kernel(1, 0, 4, alpha_of(2, 1))) < 1e-12);
}

TEST_CASE("property: round trip for alpha >= 1")
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> len(1, 256);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = len(rng);
        const auto x = reference::random_disk(static_cast<std::size_t>(n), static_cast<std::uint64_t>(trial));
        for (int a : {1, 2, 4}) {
            const auto back = oracle::naive_inverse(oracle::naive_forward(Signal(x), alpha_of(a, 1)));
            CHECK(max_abs_diff(back.samples(), x) <= 1e-10);
        }
    }
}

TEST_CASE("property: alias sum for alpha < 1")
{
    for (int n : {8, 24, 64, 96}) {
        for (int q : {2, 4, 8}) {
            if (n % q != 0) continue;
            const auto x = reference::random_disk(static_cast<std::size_t>(n), static_cast<std::uint64_t>(n + q));
            const auto back = oracle::naive_inverse(oracle::naive_forward(Signal(x), alpha_of(1, q))).samples();
            const auto m = n / q;
            // direct alias sum over every k with 0 <= i + k m < N
            for (int i = 0; i < n; ++i) {
                Complex expected{0.0, 0.0};
                for (int k = -q; k <= q; ++k) {
                    const int idx = i + k * m;
                    if (idx >= 0 && idx < n) expected += x[static_cast<std::size_t>(idx)];
                }
                CHECK(std::abs(back[static_cast<std::size_t>(i)] - expected) <= 1e-10);
            }
            // and the baseline's time-domain fold agrees on the first alpha N slots
            const auto folded = baseline::aliased_reconstruct(Signal(x), alpha_of(1, q));
            CHECK(max_abs_diff(Samples(back.begin(), back.begin() + m), folded) <= 1e-10);
        }
    }
}

TEST_CASE("property: linearity")
{
    const Complex ca{0.3, -1.2};
    const Complex cb{-0.7, 0.4};
    for (const auto& [p, q] : {std::pair{1, 1}, {3, 2}, {1, 4}, {4, 1}}) {
        const auto x = reference::random_disk(16, 100);
        const auto y = reference::random_disk(16, 200);
        Samples mix(16);
        for (std::size_t i = 0; i < 16; ++i) mix[i] = ca * x[i] + cb * y[i];
        const auto fx = oracle::naive_forward(Signal(x), alpha_of(p, q)).bins();
        const auto fy = oracle::naive_forward(Signal(y), alpha_of(p, q)).bins();
        const auto fm = oracle::naive_forward(Signal(mix), alpha_of(p, q)).bins();
        Samples expected(fx.size());
        for (std::size_t i = 0; i < fx.size(); ++i) expected[i] = ca * fx[i] + cb * fy[i];
        CHECK(max_abs_diff(fm, expected) <= 1e-10);
    }
}

TEST_CASE("property: Parseval for alpha >= 1")
{
    for (int a : {1, 2, 4, 8}) {
        for (int n : {5, 16, 33}) {
            const auto x = reference::random_disk(static_cast<std::size_t>(n), static_cast<std::uint64_t>(a * n));
            double time_energy = 0.0;
            for (const auto& v : x) time_energy += std::norm(v);
            double freq_energy = 0.0;
            const auto spectrum = oracle::naive_forward(Signal(x), alpha_of(a, 1));
            for (const auto& v : spectrum.bins()) freq_energy += std::norm(v);
            const double expected = a * n * time_energy;
            CHECK(std::abs(freq_energy - expected) / expected <= 1e-10);
        }
    }
}

TEST_CASE("property: orthogonality comb")
{
    for (int n : {1, 2, 4, 8, 16, 32, 64}) {
        for (const auto& a : {alpha_of(1, 4), alpha_of(1, 2), alpha_of(1, 1), alpha_of(2, 1), alpha_of(4, 1)}) {
            if (n % a.q() != 0) continue;
            const auto m = validate_pair(n, a).m;
            for (const auto& s : oracle::orthogonality_table(n, a)) {
                if ((s.n - s.l) % m == 0) CHECK(std::abs(s.value - 1.0) < 1e-12);
                else CHECK(std::abs(s.value) < 1e-12);
            }
        }
    }
}
