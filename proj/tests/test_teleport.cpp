#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mixport/metrics.hpp"
#include "mixport/teleport.hpp"
#include "oracles.hpp"

using namespace mixport;
using namespace mixport::teleport;

namespace {

QubitState random_qubit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double x = uni(rng);
    const double mag = uni(rng) * std::sqrt(x * (1.0 - x));
    const double theta = 2.0 * 3.14159265358979323846 * uni(rng);
    return QubitState(x, Complex(mag * std::cos(theta), mag * std::sin(theta)));
}

int sign_of(BellOutcome outcome) {
    return (outcome == BellOutcome::PhiPlus || outcome == BellOutcome::PsiPlus) ? +1 : -1;
}

bool is_phi(BellOutcome outcome) {
    return outcome == BellOutcome::PhiPlus || outcome == BellOutcome::PhiMinus;
}

} // namespace

TEST_CASE("bell projectors are complete orthogonal rank-1 projectors") {
    const auto projectors = bell_projectors();
    ComplexMatrix sum(4);
    for (const auto& p : projectors) {
        sum = sum + p;
        CHECK((p * p).max_abs_diff(p) < 1e-15);
        CHECK(std::abs(trace(p) - Complex(1.0, 0.0)) < 1e-15);
    }
    CHECK(sum.max_abs_diff(ComplexMatrix::identity(4)) < 1e-15);

    for (std::size_t i = 0; i < projectors.size(); ++i) {
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            CHECK((projectors[i] * projectors[j]).frobenius_norm() < 1e-15);
        }
    }

    const ComplexMatrix& phi_plus = bell_projector(BellOutcome::PhiPlus);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
            CHECK(std::abs(phi_plus(i, j) - (corner ? Complex(0.5, 0.0) : Complex{})) < 1e-15);
        }
    }
}

TEST_CASE("corrections are the fixed Pauli assignment and unitary") {
    CHECK(correction(BellOutcome::PhiMinus) == ComplexMatrix::identity(2));
    CHECK(correction(BellOutcome::PhiPlus) == ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}));
    CHECK(correction(BellOutcome::PsiMinus) == ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}));
    CHECK(correction(BellOutcome::PsiPlus) ==
          ComplexMatrix(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}));
    for (const BellOutcome outcome : kAllOutcomes) {
        const ComplexMatrix u = correction(outcome);
        CHECK((u * adjoint(u)) == ComplexMatrix::identity(2));
    }
}

TEST_CASE("meps channel: raw states match the closed form, probability 1/4") {
    const channels::Channel meps = channels::build(channels::Meps{});
    const QubitState input(0.35, Complex(0.2, -0.3));
    const DensityMatrix rho1 = from_qubit(input);
    for (const BellOutcome outcome : kAllOutcomes) {
        const MeasureResult m = measure(rho1, meps.state, outcome);
        CHECK(m.probability == doctest::Approx(0.25).epsilon(1e-14));
        const ComplexMatrix expected =
            is_phi(outcome) ? oracles::bob_phi_meps(input.x, input.y, sign_of(outcome))
                            : oracles::bob_psi_meps(input.x, input.y, sign_of(outcome));
        CHECK(m.bob_raw->mat().max_abs_diff(expected) < 1e-14);
    }
}

TEST_CASE("meps channel teleports exactly") {
    const channels::Channel meps = channels::build(channels::Meps{});
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 50; ++rep) {
        const QubitState input = random_qubit(rng);
        const DensityMatrix rho1 = from_qubit(input);
        const TeleportRun run_result = run(input, meps);
        for (const auto& outcome : run_result.outcomes) {
            REQUIRE(!outcome.degenerate);
            CHECK(rho1.mat().max_abs_diff(outcome.bob_corrected->mat()) < 1e-14);
        }
    }
}

TEST_CASE("general X-shaped channel matches the conditional-state closed forms") {
    // 5x5x5 grid over (x, |y|, channel), phases included via y's argument.
    const std::vector<double> xs = {0.05, 0.3, 0.5, 0.75, 0.95};
    const std::vector<double> fracs = {0.0, 0.25, 0.5, 0.75, 0.99};
    struct XZ {
        double a, b, d;
        Complex c, e;
    };
    const std::vector<XZ> specs = {
        {0.35, 0.15, 0.2, Complex(0.05, -0.02), Complex(0.1, 0.07)},
        {0.5, 0.0, 0.0, Complex(0.0, 0.0), Complex(-0.5, 0.0)},
        {0.25, 0.25, 0.25, Complex(0.2, 0.1), Complex(0.05, -0.2)},
        {0.4, 0.1, 0.1, Complex(0.0, 0.0), Complex(0.35, 0.0)},
        {0.3, 0.3, 0.2, Complex(0.1, 0.15), Complex(0.0, 0.2)},
    };
    for (const XZ& p : specs) {
        const channels::Channel channel =
            channels::build(channels::GeneralXZ{p.a, p.b, p.c, p.d, p.e});
        int angle_index = 0;
        for (const double x : xs) {
            for (const double frac : fracs) {
                const double theta = 0.7853981633974483 * (angle_index++ % 8);
                const double mag = frac * std::sqrt(x * (1.0 - x));
                const QubitState input(x, Complex(mag * std::cos(theta), mag * std::sin(theta)));
                const DensityMatrix rho1 = from_qubit(input);
                // Branch probabilities are N/2 and N1/2 respectively.
                const double n_phi = x * (p.a + p.b) + (1.0 - x) * (1.0 - p.a - p.b);
                const double n_psi = x * (1.0 - p.a - p.b) + (1.0 - x) * (p.a + p.b);
                for (const BellOutcome outcome : kAllOutcomes) {
                    const MeasureResult m = measure(rho1, channel.state, outcome);
                    const double expected_prob = 0.5 * (is_phi(outcome) ? n_phi : n_psi);
                    CHECK(std::abs(m.probability - expected_prob) < 1e-13);
                    if (m.degenerate) {
                        continue;
                    }
                    const ComplexMatrix expected =
                        is_phi(outcome)
                            ? oracles::bob_phi_xz(x, input.y, p.a, p.b, p.c, p.d, p.e,
                                                  sign_of(outcome))
                            : oracles::bob_psi_xz(x, input.y, p.a, p.b, p.c, p.d, p.e,
                                                  sign_of(outcome));
                    CHECK(m.bob_raw->mat().max_abs_diff(expected) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("rank-2 channel: raw and corrected closed forms") {
    const double p1 = 0.6;
    const channels::Channel channel = channels::build(channels::MemsRank2{p1});
    const QubitState input(0.5, 0.3);
    const DensityMatrix rho1 = from_qubit(input);

    const MeasureResult phi_plus = measure(rho1, channel.state, BellOutcome::PhiPlus);
    // N = x(1 - p1/2) + (1-x) p1/2 = 1/2 at x = 1/2.
    CHECK(phi_plus.probability == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(phi_plus.bob_raw->mat().max_abs_diff(oracles::bob_phi_rank2(0.5, 0.3, p1, +1)) <
          1e-14);

    const TeleportRun run_result = run(input, channel);
    for (const auto& outcome : run_result.outcomes) {
        const ComplexMatrix expected =
            is_phi(outcome.outcome) ? oracles::corrected_phi_rank2(0.5, 0.3, p1)
                                    : oracles::corrected_psi_rank2(0.5, 0.3, p1);
        CHECK(outcome.bob_corrected->mat().max_abs_diff(expected) < 1e-14);
    }
}

TEST_CASE("branch pairs collapse to a single corrected state") {
    std::mt19937_64 rng(11);
    for (const double p1 : {0.5, 0.65, 0.8, 0.95}) {
        const channels::Channel channel = channels::build(channels::MemsRank2{p1});
        const QubitState input = random_qubit(rng);
        const TeleportRun r = run(input, channel);
        CHECK(r.outcomes[0].bob_corrected->mat().max_abs_diff(
                  r.outcomes[1].bob_corrected->mat()) < 1e-13);
        CHECK(r.outcomes[2].bob_corrected->mat().max_abs_diff(
                  r.outcomes[3].bob_corrected->mat()) < 1e-13);
        CHECK(r.outcomes[0].bob_corrected->mat().max_abs_diff(
                  oracles::corrected_phi_rank2(input.x, input.y, p1)) < 1e-13);
        CHECK(r.outcomes[2].bob_corrected->mat().max_abs_diff(
                  oracles::corrected_psi_rank2(input.x, input.y, p1)) < 1e-13);
    }
}

TEST_CASE("rank-3 corrected states match the closed forms") {
    std::mt19937_64 rng(13);
    for (const double p1 : {1.0 / 3.0, 0.4, 0.45, 0.5}) {
        const channels::Channel channel = channels::build(channels::MemsRank3{p1});
        const QubitState input = random_qubit(rng);
        const TeleportRun r = run(input, channel);
        CHECK(r.outcomes[0].bob_corrected->mat().max_abs_diff(
                  oracles::corrected_phi_rank3(input.x, input.y, p1)) < 1e-13);
        CHECK(r.outcomes[1].bob_corrected->mat().max_abs_diff(
                  oracles::corrected_phi_rank3(input.x, input.y, p1)) < 1e-13);
        CHECK(r.outcomes[2].bob_corrected->mat().max_abs_diff(
                  oracles::corrected_psi_rank3(input.x, input.y, p1)) < 1e-13);
        CHECK(r.outcomes[3].bob_corrected->mat().max_abs_diff(
                  oracles::corrected_psi_rank3(input.x, input.y, p1)) < 1e-13);
    }
}

TEST_CASE("rank-4 channel: all four corrected states coincide") {
    const channels::Channel channel = channels::build(channels::MemsRank4{0.7});
    const QubitState input(0.5, 0.3);
    const TeleportRun r = run(input, channel);
    const ComplexMatrix expected = oracles::corrected_rank4(0.5, 0.3, 0.7);
    for (const auto& outcome : r.outcomes) {
        CHECK(outcome.probability == doctest::Approx(0.25).epsilon(1e-13));
        CHECK(outcome.bob_corrected->mat().max_abs_diff(expected) < 1e-14);
    }

    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const QubitState q = random_qubit(rng);
        const TeleportRun rr = run(q, channel);
        const ComplexMatrix want = oracles::corrected_rank4(q.x, q.y, 0.7);
        for (const auto& outcome : rr.outcomes) {
            CHECK(outcome.bob_corrected->mat().max_abs_diff(want) < 1e-13);
        }
    }
}

TEST_CASE("maximally mixed channel erases the input") {
    const channels::Channel channel = channels::build(channels::Werner{0.0});
    const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
    for (const QubitState& input : {QubitState(1.0, 0.0), QubitState(0.5, 0.4)}) {
        const TeleportRun r = run(input, channel);
        for (const auto& outcome : r.outcomes) {
            CHECK(outcome.bob_corrected->mat().max_abs_diff(half) < 1e-14);
        }
    }
}

TEST_CASE("probabilities sum to one") {
    std::mt19937_64 rng(19);
    const std::vector<channels::Channel> catalog = {
        channels::build(channels::Meps{}),
        channels::build(channels::MemsRank2{0.7}),
        channels::build(channels::MemsRank3{0.45}),
        channels::build(channels::MemsRank4{0.3}),
        channels::build(channels::Werner{0.62}),
        channels::build(channels::GeneralXZ{0.35, 0.15, Complex(0.05, -0.02), 0.2,
                                            Complex(0.1, 0.07)}),
    };
    for (const auto& channel : catalog) {
        for (int rep = 0; rep < 10; ++rep) {
            const TeleportRun r = run(random_qubit(rng), channel);
            double total = 0.0;
            for (const auto& outcome : r.outcomes) {
                CHECK(outcome.probability >= 0.0);
                total += outcome.probability;
            }
            CHECK(std::abs(total - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("degenerate outcomes are flagged, not fabricated") {
    // Pure product channel |00><00| with input |0><0|: Psi outcomes have
    // probability zero.
    const channels::Channel channel =
        channels::build(channels::GeneralXZ{1.0, 0.0, 0.0, 0.0, 0.0});
    const TeleportRun r = run(QubitState(1.0, 0.0), channel);
    CHECK(r.outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.outcomes[1].probability == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.outcomes[2].degenerate);
    CHECK(r.outcomes[3].degenerate);
    CHECK(!r.outcomes[2].bob_raw.has_value());
    CHECK(!r.outcomes[3].bob_corrected.has_value());
}

TEST_CASE("shape errors") {
    const channels::Channel channel = channels::build(channels::Meps{});
    const DensityMatrix four(channel.state.mat(), Dims{4, 1});
    CHECK_THROWS_AS(measure(four, channel.state, BellOutcome::PhiPlus), WrongShape);
    const DensityMatrix qubit = from_qubit(QubitState(0.5, 0.0));
    CHECK_THROWS_AS(measure(qubit, qubit, BellOutcome::PhiPlus), WrongShape);
}
