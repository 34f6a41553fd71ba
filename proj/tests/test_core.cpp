#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "iepg/core.hpp"
#include "iepg/verify.hpp"

#include "fixtures.hpp"
#include "support.hpp"

using namespace iepg;
using Catch::Approx;

TEST_CASE("Spectrum sorts descending and counts multiplicities", "[core][spectrum]") {
    Spectrum s({-5, 7, -3, 1, 7, -3, -3, 1, -5});
    REQUIRE(s.size() == 9);
    REQUIRE(s[0] == 7.0);
    REQUIRE(s[8] == -5.0);
    REQUIRE(s.distinct_count() == 4);
    REQUIRE(s.multiplicity(-3) == 3);
    REQUIRE(s.multiplicity(7) == 2);

    SECTION("group sizes sum to the length") {
        int total = 0;
        for (int g : s.group_sizes()) total += g;
        REQUIRE(total == static_cast<int>(s.size()));
    }

    SECTION("rejects empty and non-finite input") {
        REQUIRE_THROWS_AS(Spectrum(std::vector<double>{}), InvalidArgument);
        REQUIRE_THROWS_AS(Spectrum({1.0, std::nan("")}), InvalidArgument);
    }
}

TEST_CASE("spectrum_equal is permutation-invariant and length-strict", "[core][spectrum]") {
    REQUIRE(spectrum_equal(Spectrum({7, 1, -3, -5}), Spectrum({-5, 7, -3, 1})));
    REQUIRE_FALSE(spectrum_equal(Spectrum({7, 1}), Spectrum({7, 1, 1})));

    SECTION("reflexive and symmetric on random draws") {
        std::mt19937_64 rng(401);
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> vals(1 + trial % 7);
            for (double& v : vals) v = dist(rng);
            Spectrum a(vals);
            std::shuffle(vals.begin(), vals.end(), rng);
            Spectrum b(vals);
            REQUIRE(spectrum_equal(a, a));
            REQUIRE(spectrum_equal(a, b));
            REQUIRE(spectrum_equal(b, a));
        }
    }

    SECTION("tolerance is relative to the first argument's scale") {
        Spectrum a({1e6, 0.0});
        Spectrum b({1e6 + 1e-3, 0.0});
        REQUIRE(spectrum_equal(a, b));  // 1e-3 <= 1e-8 * 1e6
        REQUIRE_FALSE(spectrum_equal(Spectrum({1.0, 0.0}), Spectrum({1.0 + 1e-3, 0.0})));
    }
}

TEST_CASE("matrix C of the first worked example has the target spectrum", "[core][spectrum]") {
    const Spectrum target({7, 7, 1, 1, -3, -3, -3, -5, -5});
    REQUIRE(spectrum_equal(eig_symmetric(fixtures::ex31_c()), target));
}

TEST_CASE("assemble_bordered lays out diag, border and corner", "[core][bordered]") {
    SECTION("the 4x4 bordered block of the first worked example") {
        BorderedMatrix b;
        b.diag = {6, 0, -4};
        b.border = {-std::sqrt(33.0) / 2.0, std::sqrt(70.0) / 4.0, -std::sqrt(22.0) / 4.0};
        b.corner = -2;
        const SymMatrix m = assemble_bordered(b);
        REQUIRE(testsup::max_entry_diff(m, fixtures::ex31_a()) == 0.0);
        // |b3| comes from b3^2 = 11/8, so the (4,3) entry is -sqrt(22)/4 and
        // the assembled matrix is exactly symmetric.
        REQUIRE(m(3, 2) == m(2, 3));
        REQUIRE(m(2, 3) == -std::sqrt(22.0) / 4.0);
    }

    SECTION("degenerate order 1") {
        const SymMatrix m = assemble_bordered({{}, {}, 5.0});
        REQUIRE(m.order() == 1);
        REQUIRE(m(0, 0) == 5.0);
    }

    SECTION("2x2 swap matrix has eigenvalues +-1") {
        const SymMatrix m = assemble_bordered({{0.0}, {1.0}, 0.0});
        REQUIRE(m(0, 1) == 1.0);
        // char poly t^2 - 1 by hand: roots +-1
        const Spectrum eigs = eig_symmetric(m);
        REQUIRE(eigs[0] == Approx(1.0).margin(1e-12));
        REQUIRE(eigs[1] == Approx(-1.0).margin(1e-12));
    }

    SECTION("length mismatch is rejected") {
        REQUIRE_THROWS_AS(assemble_bordered({{1.0, 2.0}, {1.0}, 0.0}), InvalidArgument);
    }

    SECTION("assemble then read back is the identity") {
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> dist(-5.0, 5.0);
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 2 + trial % 6;
            BorderedMatrix b;
            for (int t = 0; t + 1 < n; ++t) {
                b.diag.push_back(dist(rng));
                b.border.push_back(dist(rng));
            }
            b.corner = dist(rng);
            const SymMatrix m = assemble_bordered(b);
            for (int t = 0; t + 1 < n; ++t) {
                REQUIRE(m(t, t) == b.diag[t]);
                REQUIRE(m(t, n - 1) == b.border[t]);
                REQUIRE(m(n - 1, t) == b.border[t]);
            }
            REQUIRE(m(n - 1, n - 1) == b.corner);
            for (int p = 0; p + 1 < n; ++p)
                for (int q = p + 1; q + 1 < n; ++q) REQUIRE(m(p, q) == 0.0);
        }
    }
}

TEST_CASE("SymMatrix enforces exact symmetry and finiteness", "[core][matrix]") {
    SymMatrix m(3);
    m.set(0, 2, 1.5);
    REQUIRE(m(2, 0) == 1.5);

    Matrix raw(2, 2);
    raw(0, 1) = 1.0;
    raw(1, 0) = 1.0 + 1e-3;
    REQUIRE_THROWS_AS(SymMatrix::mirrored(raw), InvalidArgument);

    REQUIRE_THROWS_AS(m.set(0, 1, std::numeric_limits<double>::infinity()), InvalidArgument);

    SECTION("principal submatrix removal") {
        const SymMatrix c = fixtures::ex31_c();
        const SymMatrix sub = c.principal_submatrix_removing(0);
        REQUIRE(sub.order() == 8);
        REQUIRE(sub(0, 0) == c(1, 1));
        REQUIRE(sub(0, 7) == c(1, 8));
        REQUIRE(sub(7, 7) == c(8, 8));
    }
}

TEST_CASE("tolerance profile validation", "[core][tolerance]") {
    ToleranceProfile ok;
    REQUIRE_NOTHROW(ok.validate());
    ToleranceProfile bad;
    bad.spec_tol = 0.0;
    REQUIRE_THROWS_AS(bad.validate(), InvalidArgument);
    bad = ToleranceProfile{};
    bad.zero_tol = -1e-9;
    REQUIRE_THROWS_AS(bad.validate(), InvalidArgument);
}
