#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mixport/block_props.hpp"
#include "mixport/channels.hpp"
#include "mixport/entanglement.hpp"
#include "mixport/metrics.hpp"

using namespace mixport;
using namespace mixport::channels;
using entanglement::concurrence;
using entanglement::linear_entropy;
using entanglement::min_pt_eigenvalue;

TEST_CASE("catalog concurrences") {
    CHECK(concurrence(build(Meps{}).state) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(concurrence(build(MemsRank2{0.6}).state) == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(concurrence(build(MemsRank3{0.4}).state) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(concurrence(build(MemsRank4{0.5}).state) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("concurrence identities over the weight ranges") {
    for (int i = 0; i <= 30; ++i) {
        const double p1 = 0.5 + 0.5 * i / 30.0;
        CHECK(std::abs(concurrence(build(MemsRank2{p1}).state) - p1) < 1e-12);
    }
    for (int i = 0; i <= 30; ++i) {
        const double p1 = 1.0 / 3.0 + (0.5 - 1.0 / 3.0) * i / 30.0;
        CHECK(std::abs(concurrence(build(MemsRank3{p1}).state) -
                       std::max(0.0, 3.0 * p1 - 1.0)) < 1e-12);
    }
    for (int i = 0; i <= 30; ++i) {
        const double p1 = 0.25 + 0.75 * i / 30.0;
        CHECK(std::abs(concurrence(build(MemsRank4{p1}).state) -
                       std::max(0.0, 2.0 * p1 - 1.0)) < 1e-12);
    }
}

TEST_CASE("werner concurrence equals the mapped rank-4 concurrence") {
    for (int i = 0; i <= 20; ++i) {
        const double r = i / 20.0;
        const double cw = concurrence(build(Werner{r}).state);
        const double c4 = concurrence(build(MemsRank4{werner_to_mems_p1(r)}).state);
        CHECK(std::abs(cw - c4) < 1e-12);
        // Known closed form: max(0, (3r-1)/2).
        CHECK(std::abs(cw - std::max(0.0, (3.0 * r - 1.0) / 2.0)) < 1e-12);
    }
}

TEST_CASE("minimum partial-transpose eigenvalues") {
    CHECK(min_pt_eigenvalue(build(Meps{}).state) == doctest::Approx(-0.5).epsilon(1e-13));
    for (const double r : {0.0, 1.0 / 3.0, 0.7}) {
        CHECK(min_pt_eigenvalue(build(Werner{r}).state) ==
              doctest::Approx((1.0 - 3.0 * r) / 4.0).epsilon(1e-12));
    }

    std::mt19937_64 rng(3);
    const DensityMatrix prod(
        tensor_product(blockprops::random_psd(2, rng), blockprops::random_psd(2, rng)),
        Dims{2, 2});
    CHECK(min_pt_eigenvalue(prod) > -kPsdTol);
}

TEST_CASE("peres-horodecki agreement on random states") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 300; ++rep) {
        const DensityMatrix rho(blockprops::random_psd(4, rng), Dims{2, 2});
        const double c = concurrence(rho);
        const double pt = min_pt_eigenvalue(rho);
        CHECK((c > 1e-10) == (pt < -1e-10));
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
}

TEST_CASE("linear entropy of the x = 1/2 input class") {
    CHECK(linear_entropy(from_qubit(QubitState(0.5, 0.0))) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(linear_entropy(from_qubit(QubitState(0.5, 0.5))) ==
          doctest::Approx(0.0).epsilon(1e-14));
    for (int i = 0; i <= 20; ++i) {
        const double abs_y = 0.5 * i / 20.0;
        CHECK(std::abs(linear_entropy(from_qubit(QubitState(0.5, abs_y))) -
                       (8.0 / 3.0) * (0.25 - abs_y * abs_y)) < 1e-14);
    }
}

TEST_CASE("channel entropies intersect at p1 = 1/2") {
    const double r2 = linear_entropy(build(MemsRank2{0.5}).state);
    const double r3 = linear_entropy(build(MemsRank3{0.5}).state);
    CHECK(r2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(r3 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(metrics::sl_rank2(0.5) - r2) < 1e-14);
    CHECK(std::abs(metrics::sl_rank3(0.5) - r3) < 1e-14);
}

TEST_CASE("entropy orderings on both sides of p1 = 1/2") {
    // Grid intersected with each family's evaluable range; closed forms carry
    // the rank-3 branch past 1/2.
    for (const double p1 : {0.35, 0.4, 0.45}) {
        CHECK(metrics::sl_rank2(p1) < metrics::sl_rank3(p1));
        CHECK(metrics::sl_rank3(p1) < metrics::sl_rank4(p1));
    }
    for (const double p1 : {0.55, 0.6, 0.65}) {
        CHECK(metrics::sl_rank3(p1) < metrics::sl_rank2(p1));
        CHECK(metrics::sl_rank2(p1) < metrics::sl_rank4(p1));
    }
}

TEST_CASE("closed-form entropies match matrix entropies") {
    for (int i = 0; i <= 20; ++i) {
        const double p1 = i / 20.0;
        CHECK(std::abs(metrics::sl_rank2(p1) - linear_entropy(build(MemsRank2{p1}).state)) <
              1e-13);
        CHECK(std::abs(metrics::sl_rank4(p1) - linear_entropy(build(MemsRank4{p1}).state)) <
              1e-13);
        if (p1 <= 0.5) {
            CHECK(std::abs(metrics::sl_rank3(p1) -
                           linear_entropy(build(MemsRank3{p1}).state)) < 1e-13);
        }
    }
    // The flagged continuation of the rank-3 family still evaluates.
    const Channel high = build(MemsRank3{0.6});
    CHECK(std::abs(entanglement::linear_entropy_mat(high.state.mat()) -
                   metrics::sl_rank3(0.6)) < 1e-13);
}

TEST_CASE("shape errors") {
    const DensityMatrix qubit = from_qubit(QubitState(0.5, 0.1));
    CHECK_THROWS_AS(concurrence(qubit), WrongShape);
    CHECK_THROWS_AS(min_pt_eigenvalue(qubit), WrongShape);
    CHECK_NOTHROW(linear_entropy(qubit));
}
