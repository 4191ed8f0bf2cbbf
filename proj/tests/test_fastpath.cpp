#include "alspec/fastpath.hpp"
#include "alspec/oracle.hpp"

#include "doctest.h"
#include "reference.hpp"

#include <numbers>

using namespace alspec;
using reference::max_abs_diff;
using reference::max_rel_diff;

namespace {

const Complex I{0.0, 1.0};

DenseFactor alpha_of(int p, int q) { return make_dense_factor(p, q); }

// W_M^k computed afresh, independent of the plan tables
Complex w(std::int64_t m, std::int64_t k)
{
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double angle = -2.0L * pi * static_cast<long double>(k % m) / static_cast<long double>(m);
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

const std::vector<DenseFactor>& fast_alphas()
{
    static const std::vector<DenseFactor> all{alpha_of(1, 8), alpha_of(1, 4), alpha_of(1, 2), alpha_of(1, 1),
                                              alpha_of(2, 1), alpha_of(4, 1), alpha_of(8, 1)};
    return all;
}

}  // namespace

TEST_CASE("plan shapes")
{
    const auto dense = fastpath::plan(8, alpha_of(2, 1));
    CHECK(dense.m() == 16);
    CHECK(dense.depth() == 3);
    CHECK(dense.leaf() == fastpath::LeafKind::SingleSample);

    const auto sparse = fastpath::plan(8, alpha_of(1, 4));
    CHECK(sparse.m() == 2);
    CHECK(sparse.depth() == 1);
    CHECK(sparse.leaf() == fastpath::LeafKind::BlockSum);

    CHECK_THROWS_AS(fastpath::plan(6, alpha_of(2, 1)), UnsupportedSize);
    CHECK_THROWS_AS(fastpath::plan(4, alpha_of(3, 2)), UnsupportedSize);
    CHECK_THROWS_AS(fastpath::plan(4, alpha_of(1, 8)), IncompatibleAlpha);
}

TEST_CASE("predicted multiplies")
{
    CHECK(fastpath::predicted_mults(fastpath::plan(8, alpha_of(1, 1))) == 12);
    CHECK(fastpath::predicted_mults(fastpath::plan(8, alpha_of(2, 1))) == 24);
    CHECK(fastpath::predicted_mults(fastpath::plan(8, alpha_of(1, 4))) == 1);

    // cross-check by instrumented runs
    for (const auto& [p, q, expected] : {std::tuple{1, 1, 12}, {2, 1, 24}, {1, 4, 1}}) {
        OpCounter counter;
        (void)fastpath::alpha_fft(Signal(reference::random_disk(8, 5)), fastpath::plan(8, alpha_of(p, q)), counter);
        CHECK(counter.complex_mults == expected);
    }
}

TEST_CASE("alpha_fft small cases")
{
    const auto flat = fastpath::alpha_fft(Signal({1.0, 0.0, 0.0, 0.0}), alpha_of(2, 1));
    CHECK(max_abs_diff(flat.bins(), Samples(8, 1.0)) == 0.0);

    const auto x4 = reference::random_disk(4, 21);
    CHECK(max_rel_diff(fastpath::alpha_fft(Signal(x4), alpha_of(2, 1)).bins(),
                       oracle::naive_forward(Signal(x4), alpha_of(2, 1)).bins()) < 1e-14);

    const auto x8 = reference::random_disk(8, 22);
    const auto half = fastpath::alpha_fft(Signal(x8), alpha_of(1, 2));
    REQUIRE(half.size() == 4);
    CHECK(max_rel_diff(half.bins(), oracle::naive_forward(Signal(x8), alpha_of(1, 2)).bins()) < 1e-14);

    CHECK_THROWS_AS(fastpath::alpha_fft(Signal(Samples(4, 1.0)), fastpath::plan(8, alpha_of(1, 1))), InvalidArgument);
}

TEST_CASE("combine")
{
    const Samples one{1.0};
    CHECK(max_abs_diff(fastpath::combine(one, one, one), {2.0, 0.0}) == 0.0);
    CHECK(max_abs_diff(fastpath::combine(Samples{0.0}, one, Samples{-I}), {-I, I}) == 0.0);

    const auto y = reference::random_disk(4, 1);
    const auto z = reference::random_disk(4, 2);
    Samples tw(4);
    for (int l = 0; l < 4; ++l) tw[static_cast<std::size_t>(l)] = w(8, l);
    OpCounter counter;
    const auto x = fastpath::combine(y, z, tw, counter);
    for (std::size_t l = 0; l < 4; ++l) {
        CHECK(std::abs(x[l] - (y[l] + tw[l] * z[l])) < 1e-15);
        CHECK(std::abs(x[l + 4] - (y[l] - tw[l] * z[l])) < 1e-15);
    }
    CHECK(counter.complex_mults == 4);
    CHECK(counter.complex_adds == 8);

    CHECK_THROWS_AS(fastpath::combine(y, Samples(3), tw), std::logic_error);
}

TEST_CASE("leaf_block_sum")
{
    CHECK(fastpath::leaf_block_sum(Samples(4, 1.0)) == Complex{4.0, 0.0});
    CHECK(fastpath::leaf_block_sum(Samples{1.0, -1.0}) == Complex{0.0, 0.0});

    const auto x = reference::random_disk(4, 9);
    const auto bin0 = oracle::naive_forward(Signal(x), alpha_of(1, 4))[0];
    CHECK(std::abs(fastpath::leaf_block_sum(x) - bin0) < 1e-15);
}

TEST_CASE("twiddle tables satisfy the three identities")
{
    for (std::int64_t m = 2; m <= 4096; m *= 2) {
        const auto p = fastpath::plan(m, alpha_of(1, 1));
        const auto top = p.twiddles(0);  // W_m^k, k < m/2
        REQUIRE(static_cast<std::int64_t>(top.size()) == m / 2);
        double worst = 0.0;
        for (std::int64_t k = 0; k < m / 2; ++k) {
            const auto wk = top[static_cast<std::size_t>(k)];
            worst = std::max(worst, std::abs(wk - w(m, k)));
            // W^{m+M/2} = -W^m
            worst = std::max(worst, std::abs(w(m, k + m / 2) + wk));
            // W^{m(n+1)} = W^m W^{mn}, for n = 3
            worst = std::max(worst, std::abs(w(m, k * 4) - wk * w(m, k * 3)));
            if (m >= 4) {
                // W_M^{2k} = W_{M/2}^k, with W_{M/2} read from the next level
                const auto next = p.twiddles(1);
                if (k < m / 4) worst = std::max(worst, std::abs(w(m, 2 * k) - next[static_cast<std::size_t>(k)]));
            }
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("property: oracle equivalence, counts and depth across the grid")
{
    for (std::int64_t n = 1; n <= 1024; n *= 2) {
        for (const auto& a : fast_alphas()) {
            if (n % a.q() != 0) continue;
            const auto p = fastpath::plan(n, a);
            const auto x = reference::random_disk(static_cast<std::size_t>(n), static_cast<std::uint64_t>(n * 13 + a.p()));
            OpCounter counter;
            const auto fast = fastpath::alpha_fft(Signal(x), p, counter);
            CHECK(max_rel_diff(fast.bins(), oracle::naive_forward(Signal(x), a).bins()) <= 1e-10);
            CHECK(counter.complex_mults == p.predicted_mults());
            CHECK(counter.deepest_level == p.depth());
            const auto mn = std::min(n, p.m());
            CHECK(p.depth() == log2_exact(mn));
            // butterflies act on the alpha N outputs at every level
            CHECK(p.predicted_mults() == p.m() / 2 * log2_exact(mn));
            if (a.at_least_one()) CHECK(p.predicted_mults() == std::max(n, p.m()) / 2 * log2_exact(mn));
        }
    }
}

TEST_CASE("alpha = 1 is the classical radix-2 FFT")
{
    for (std::int64_t n = 2; n <= 512; n *= 2) {
        const auto x = reference::random_disk(static_cast<std::size_t>(n), 77);
        OpCounter counter;
        const auto got = fastpath::alpha_fft(Signal(x), fastpath::plan(n, alpha_of(1, 1)), counter);
        CHECK(counter.complex_mults == n / 2 * log2_exact(n));
        CHECK(max_rel_diff(got.bins(), reference::textbook_alpha_dft(x, 1, 1)) < 1e-13);
    }
}

TEST_CASE("plans are reusable and results bitwise stable")
{
    const auto p = fastpath::plan(256, alpha_of(4, 1));
    const Signal x(reference::random_disk(256, 4));
    const auto first = fastpath::alpha_fft(x, p).bins();
    const auto second = fastpath::alpha_fft(x, p).bins();
    CHECK(first == second);
}
