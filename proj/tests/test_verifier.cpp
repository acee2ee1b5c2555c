#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zzmod/decomposer.hpp"
#include "zzmod/generator.hpp"
#include "zzmod/verifier.hpp"

using namespace zzmod;
using Dir = Direction;

TEST_CASE("decomposer output verifies") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        ZigzagShape sh({Dir::Forward, Dir::Backward, Dir::Forward});
        GeneratedInstance inst = gen_decomposable(rng.next(), sh, 5, 2, 3);
        DecompOutcome res = decompose(inst.module);
        REQUIRE(res.success());
        VerifyReport rep = verify_decomposition(inst.module, *res.decomposition);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("tampering one generator entry breaks the direct sum") {
    ZigzagShape sh({Dir::Forward, Dir::Backward});
    PersModule m = direct_sum(interval_module(sh, {1, 2}, 1),
                              interval_module(sh, {2, 3}, 1));
    DecompOutcome res = decompose(m);
    REQUIRE(res.success());
    Decomposition bad = *res.decomposition;
    bad.summands[0].at(2).at(0, 0) += 1;
    VerifyReport rep = verify_decomposition(m, bad);
    CHECK(!rep.ok);
    bool direct_sum_failure = false;
    for (const VerifyFailure& f : rep.failures)
        if ((f.kind == FailureKind::DirectSumNotUnimodular ||
             f.kind == FailureKind::NotInvariant) &&
            true)
            direct_sum_failure = true;
    CHECK(direct_sum_failure);
}

TEST_CASE("gapped support is an interval violation") {
    ZigzagShape sh({Dir::Forward, Dir::Forward});
    PersModule m{sh, {1, 0, 1}, {IntMatrix(0, 1), IntMatrix(1, 0)}};
    Submodule gap{{IntMatrix{{1}}, IntMatrix(0, 0), IntMatrix{{1}}}};
    Decomposition d{{gap}};
    VerifyReport rep = verify_decomposition(m, d);
    CHECK(!rep.ok);
    bool saw_gap = false;
    for (const VerifyFailure& f : rep.failures)
        if (f.kind == FailureKind::SupportGap) saw_gap = true;
    CHECK(saw_gap);
}

TEST_CASE("rank must be constant and transitions unimodular") {
    ZigzagShape sh({Dir::Forward});
    PersModule m{sh, {2, 2}, {IntMatrix{{1, 0}, {0, 2}}}};
    // the doubling direction is invariant but not an isomorphism onto the
    // second generator
    Decomposition d{{full_submodule(m)}};
    VerifyReport rep = verify_decomposition(m, d);
    CHECK(!rep.ok);
    bool saw_edge = false;
    for (const VerifyFailure& f : rep.failures)
        if (f.kind == FailureKind::EdgeNotIsomorphism) saw_edge = true;
    CHECK(saw_edge);
}

TEST_CASE("direct-sum rank accounting") {
    SplitMix64 rng(62);
    ZigzagShape sh({Dir::Backward, Dir::Forward, Dir::Forward});
    GeneratedInstance inst = gen_decomposable(rng.next(), sh, 6, 2, 2);
    DecompOutcome res = decompose(inst.module);
    REQUIRE(res.success());
    for (int v = 1; v <= 4; ++v) {
        std::size_t total = 0;
        for (const Submodule& s : res.decomposition->summands) total += s.at(v).cols();
        CHECK(total == inst.module.rank_at(v));
    }
}

TEST_CASE("barcode_of worked examples") {
    CHECK(barcode_of(Decomposition{}).bars.empty());

    ZigzagShape sh({Dir::Forward});
    PersModule m = direct_sum(interval_module(sh, {1, 2}, 1),
                              interval_module(sh, {1, 2}, 1));
    DecompOutcome res = decompose(m);
    REQUIRE(res.success());
    Barcode bc = barcode_of(*res.decomposition);
    REQUIRE(bc.bars.size() == 2);
    CHECK(bc.bars[0] == bc.bars[1]);
    for (const Bar& b : bc.bars) CHECK(b.rank == 1);
}

TEST_CASE("barcodes_equal worked examples") {
    Barcode a, b;
    a.bars = {{{1, 2}, 1}, {{2, 3}, 1}};
    b.bars = {{{2, 3}, 1}, {{1, 2}, 1}};
    CHECK(barcodes_equal(a, b));

    Barcode joined, split;
    joined.bars = {{{1, 2}, 1}};
    split.bars = {{{1, 1}, 1}, {{2, 2}, 1}};
    CHECK(!barcodes_equal(joined, split));

    Barcode coarse, fine;
    coarse.bars = {{{1, 2}, 2}};
    fine.bars = {{{1, 2}, 1}, {{1, 2}, 1}};
    CHECK(barcodes_equal(coarse, fine));
    CHECK(normalize(coarse).bars == fine.bars);
}

TEST_CASE("barcodes_equal is invariant under re-presentation") {
    SplitMix64 rng(63);
    ZigzagShape sh({Dir::Forward, Dir::Backward});
    GeneratedInstance inst = gen_decomposable(9, sh, 4, 2, 2);
    DecompOutcome res = decompose(inst.module);
    REQUIRE(res.success());
    // permuting summands leaves the barcode unchanged
    Decomposition shuffled = *res.decomposition;
    std::reverse(shuffled.summands.begin(), shuffled.summands.end());
    CHECK(barcodes_equal(barcode_of(shuffled), *res.barcode));
}

TEST_CASE("is_internal_direct_sum rejects overlap") {
    ZigzagShape sh({Dir::Forward});
    PersModule m = interval_module(sh, {1, 2}, 2);
    Submodule half = zero_submodule(m);
    half.at(1) = IntMatrix{{1}, {0}};
    half.at(2) = IntMatrix{{1}, {0}};
    CHECK(!is_internal_direct_sum(m, {half, half}));
    Submodule other = zero_submodule(m);
    other.at(1) = IntMatrix{{0}, {1}};
    other.at(2) = IntMatrix{{0}, {1}};
    CHECK(is_internal_direct_sum(m, {half, other}));
}
