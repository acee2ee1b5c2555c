#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zzmod/exact_linalg.hpp"
#include "zzmod/generator.hpp"
#include "oracles.hpp"

using namespace zzmod;

namespace {

IntMatrix random_matrix(SplitMix64& rng, std::size_t max_dim, long bound) {
    IntMatrix a(rng.below(max_dim + 1), rng.below(max_dim + 1));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = rng.range(-bound, bound);
    return a;
}

bool same_span(const IntMatrix& a, const IntMatrix& b) {
    return hnf_cols(a) == hnf_cols(b);
}

} // namespace

TEST_CASE("snf worked examples") {
    {
        SnfResult f = snf(IntMatrix{{0}});
        CHECK(f.s == IntMatrix{{0}});
        CHECK(f.u == IntMatrix::identity(1));
        CHECK(f.v == IntMatrix::identity(1));
    }
    CHECK(snf(IntMatrix{{2}}).s == IntMatrix{{2}});
    {
        SnfResult f = snf(IntMatrix{{2, 4}, {6, 8}});
        CHECK(f.s.at(0, 0) == 2);
        CHECK(f.s.at(1, 1) == 4);
        CHECK(f.s.at(0, 1) == 0);
        CHECK(f.s.at(1, 0) == 0);
    }
}

TEST_CASE("snf on empty shapes") {
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {3, 0}}) {
        SnfResult f = snf(IntMatrix(r, c));
        CHECK(f.s == IntMatrix(r, c));
        CHECK(f.u == IntMatrix::identity(r));
        CHECK(f.v == IntMatrix::identity(c));
    }
    CHECK(det(IntMatrix(0, 0)) == 1);
}

TEST_CASE("snf contract on random matrices") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 5);
        SnfResult f = snf(a);
        CHECK(f.u * a * f.v == f.s);
        CHECK(is_unimodular(f.u));
        CHECK(is_unimodular(f.v));
        CHECK((f.u * f.u_inv).is_identity());
        CHECK((f.v * f.v_inv).is_identity());
        const std::size_t rk = f.rank();
        for (std::size_t k = 0; k + 1 < rk; ++k) {
            CHECK(f.diag(k) >= 0);
            CHECK(f.diag(k + 1) % f.diag(k) == 0);
        }
        std::vector<Int> mine;
        for (std::size_t k = 0; k < rk; ++k) mine.push_back(f.diag(k));
        CHECK(mine == oracles::naive_invariant_factors(a));
        CHECK(mine == oracles::determinantal_invariant_factors(a));
    }
}

TEST_CASE("snf determinism") {
    IntMatrix a{{3, -1, 4}, {1, 5, -9}, {2, 6, 5}};
    CHECK(snf(a).s == snf(a).s);
    CHECK(snf(a).u == snf(a).u);
}

TEST_CASE("hnf worked examples") {
    CHECK(hnf_cols(IntMatrix{{2, 0}, {0, 3}}) == IntMatrix{{2, 0}, {0, 3}});
    CHECK(hnf_cols(IntMatrix{{1, 1}, {0, 0}}) == IntMatrix{{1}, {0}});
    CHECK(hnf_cols(IntMatrix{{2, 3}}) == IntMatrix{{1}});
}

TEST_CASE("hnf idempotence and span preservation") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 5);
        IntMatrix h = hnf_cols(a);
        CHECK(hnf_cols(h) == h);
        for (std::size_t j = 0; j < a.cols(); ++j)
            CHECK(solve(h, a.column_at(j)).has_value());
        for (std::size_t j = 0; j < h.cols(); ++j)
            CHECK(solve(a, h.column_at(j)).has_value());
    }
}

TEST_CASE("kernel worked examples") {
    CHECK(kernel_basis(IntMatrix::identity(2)) == IntMatrix(2, 0));
    CHECK(kernel_basis(IntMatrix{{1, 0}, {0, 0}}) == IntMatrix{{0}, {1}});
    CHECK(kernel_basis(IntMatrix{{2, 4}}) == IntMatrix{{2}, {-1}});
}

TEST_CASE("kernel and image rank bookkeeping") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 5);
        IntMatrix k = kernel_basis(a);
        CHECK((a * k).is_zero());
        CHECK(k.cols() + image_basis(a).cols() == a.cols());
    }
}

TEST_CASE("image worked examples") {
    CHECK(image_basis(IntMatrix{{1, 0}, {0, 0}}) == IntMatrix{{1}, {0}});
    CHECK(image_basis(IntMatrix(2, 2)) == IntMatrix(2, 0));
    IntMatrix b = image_basis(IntMatrix{{2, 4}, {6, 8}});
    REQUIRE(b.cols() == 2);
    Int d = det(b);
    CHECK((d == 8 || d == -8));
}

TEST_CASE("cokernel worked examples") {
    CHECK(cokernel_invariants(IntMatrix{{2}}) == CokerInvariants{0, {2}});
    CHECK(cokernel_invariants(IntMatrix{{1, 0}, {0, 0}}) == CokerInvariants{1, {}});
    CHECK(cokernel_invariants(IntMatrix{{2, 4}, {6, 8}}) == CokerInvariants{0, {2, 4}});
}

TEST_CASE("cokernel cross-oracle") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 5);
        CHECK(cokernel_invariants(a) == oracles::naive_coker(a));
    }
}

TEST_CASE("solve worked examples") {
    CHECK(solve(IntMatrix{{2}}, IntMatrix::column({4})) == IntMatrix::column({2}));
    CHECK(!solve(IntMatrix{{2}}, IntMatrix::column({3})).has_value());
    CHECK(solve(IntMatrix{{1, 1}, {0, 2}}, IntMatrix::column({1, 2})) ==
          IntMatrix::column({0, 1}));
    CHECK_THROWS_AS((void)solve(IntMatrix{{1}}, IntMatrix(2, 1)), DimensionError);
}

TEST_CASE("split_surjection worked examples") {
    CHECK(split_surjection(IntMatrix::identity(3)).is_identity());
    CHECK(split_surjection(IntMatrix{{1, 0}}) == IntMatrix{{1}, {0}});
    IntMatrix phi{{2, 1}};
    IntMatrix psi = split_surjection(phi);
    CHECK((phi * psi).is_identity());
    CHECK(same_span(hconcat(kernel_basis(phi), psi), IntMatrix::identity(2)));
    CHECK_THROWS_AS(split_surjection(IntMatrix{{2}}), NotSurjectiveError);
    CHECK_THROWS_AS(split_surjection(IntMatrix{{1}, {0}}), NotSurjectiveError);
}

TEST_CASE("split_surjection domain split on random surjections") {
    SplitMix64 rng(15);
    int tried = 0;
    for (int trial = 0; trial < 400 && tried < 60; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 3);
        if (!cokernel_invariants(a).is_trivial()) continue;
        ++tried;
        IntMatrix psi = split_surjection(a);
        CHECK((a * psi).is_identity());
        CHECK(same_span(hconcat(kernel_basis(a), psi), IntMatrix::identity(a.cols())));
    }
    CHECK(tried > 20);
}

TEST_CASE("complement worked examples") {
    CHECK(complement(IntMatrix{{1}, {0}}, 2) == IntMatrix{{0}, {1}});
    CHECK(complement(IntMatrix::identity(2), 2) == IntMatrix(2, 0));
    IntMatrix g{{1}, {1}};
    IntMatrix c = complement(g, 2);
    CHECK(c == IntMatrix{{0}, {1}});
    CHECK(is_unimodular(hconcat(g, c)));
    CHECK_THROWS_AS(complement(IntMatrix{{2}}, 1), NotFreeQuotientError);
}

TEST_CASE("complement stacks to a unimodular basis") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 4);
        IntMatrix basis = image_basis(a);
        if (!cokernel_invariants(basis).is_free()) continue;
        IntMatrix c = complement(basis, a.rows());
        CHECK(is_unimodular(hconcat(basis, c)));
    }
}

TEST_CASE("intersect worked examples") {
    IntMatrix e1{{1}, {0}}, e2{{0}, {1}};
    CHECK(intersect(e1, e2) == IntMatrix(2, 0));
    CHECK(intersect(e1, e1) == e1);
    IntMatrix two{{2}, {0}};
    CHECK(intersect(two, e1) == two);
    CHECK(intersect(IntMatrix{{2}, {0}}, IntMatrix{{3}, {0}}) == IntMatrix{{6}, {0}});
}

TEST_CASE("intersect is symmetric and idempotent") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        IntMatrix a = random_matrix(rng, 3, 4);
        IntMatrix b(a.rows(), rng.below(4));
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) = rng.range(-4, 4);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(a, a) == hnf_cols(a));
        IntMatrix w = intersect(a, b);
        for (std::size_t j = 0; j < w.cols(); ++j) {
            CHECK(solve(a, w.column_at(j)).has_value());
            CHECK(solve(b, w.column_at(j)).has_value());
        }
    }
}

TEST_CASE("preimage worked examples") {
    IntMatrix b{{1, 4}, {2, 5}};
    CHECK(preimage(IntMatrix::identity(2), b) == hnf_cols(b));
    CHECK(preimage(IntMatrix(2, 2), IntMatrix(2, 0)) == IntMatrix::identity(2));
    CHECK(preimage(IntMatrix{{2}}, IntMatrix{{4}}) == IntMatrix{{2}});
}

TEST_CASE("preimage contains the kernel and maps into the span") {
    SplitMix64 rng(18);
    for (int trial = 0; trial < 150; ++trial) {
        IntMatrix m = random_matrix(rng, 4, 4);
        IntMatrix b(m.rows(), rng.below(3));
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) = rng.range(-4, 4);
        IntMatrix p = preimage(m, b);
        IntMatrix k = kernel_basis(m);
        for (std::size_t j = 0; j < k.cols(); ++j)
            CHECK(solve(p, k.column_at(j)).has_value());
        for (std::size_t j = 0; j < p.cols(); ++j)
            CHECK(solve(b, m * p.column_at(j)).has_value());
    }
}

TEST_CASE("unimodularity worked examples") {
    CHECK(is_unimodular(IntMatrix::identity(4)));
    CHECK(!is_unimodular(IntMatrix{{2}}));
    CHECK(is_unimodular(IntMatrix{{1, 3}, {1, 4}}));
    CHECK(!is_unimodular(IntMatrix(2, 3)));
    CHECK(det(IntMatrix{{1, 3}, {1, 4}}) == 1);
}

TEST_CASE("inverse_unimodular") {
    SplitMix64 rng(19);
    for (int level : {0, 2, 5}) {
        IntMatrix u = random_unimodular_pair(rng, 4, level).u;
        CHECK((u * inverse_unimodular(u)).is_identity());
    }
}

TEST_CASE("complement_within") {
    IntMatrix outer{{1, 0}, {0, 2}, {0, 0}};
    IntMatrix inner{{1}, {0}, {0}};
    CHECK(complement_within(inner, outer) == IntMatrix{{0}, {2}, {0}});
    CHECK_THROWS_AS(complement_within(IntMatrix{{1}, {1}, {1}}, outer),
                    PreconditionError);
}

TEST_CASE("entries survive 64-bit overflow") {
    // iterated multiplication drives entries far past 2^64
    IntMatrix a{{2, 1}, {1, 1}};
    IntMatrix p = IntMatrix::identity(2);
    for (int i = 0; i < 100; ++i) p = p * a;
    CHECK(is_unimodular(p));
    SnfResult f = snf(p);
    CHECK(f.u * p * f.v == f.s);
    CHECK(f.diag(0) == 1);
    CHECK(f.diag(1) == 1);
}
