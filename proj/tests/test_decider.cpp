#include <doctest.h>

#include <cmath>

#include "qpad/decider.hpp"
#include "qpad/simulator.hpp"
#include "qpad/stego.hpp"
#include "qpad/testgen.hpp"

using namespace qpad;

TEST_CASE("canonical witnesses are verified yes/no instances") {
    for (std::uint32_t n : {1u, 2u, 4u, 8u}) {
        const Circuit x_in = canonical_yes_witness(n);
        const Circuit x_out = canonical_no_witness(n);
        CHECK(!dec(x_in));
        CHECK(!dec(x_out));

        const OracleVerdict in = sdcs_oracle(x_in);
        CHECK(in.status == OracleStatus::In);
        CHECK(std::abs(in.p_one - 1.0) < 1e-12);

        const OracleVerdict out = sdcs_oracle(x_out);
        CHECK(out.status == OracleStatus::Out);
        CHECK(out.p_one == 0.0);
    }
}

TEST_CASE("is_member_Sx matches the padded-family definition") {
    SplitMix64 rng(101);
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::uint32_t>(1 + rng.below(6));
        RandomCircuitParams params;
        params.fixed_qubits = n;
        const Circuit x = random_frame_free_circuit(rng, params);
        const Message y = random_message(rng, 48);

        CHECK(is_member_Sx(pad(x, y), x));
        CHECK(!is_member_Sx(x, x));  // dec finds no message

        Circuit other = random_frame_free_circuit(rng, params);
        while (other == x) {
            other = random_frame_free_circuit(rng, params);
        }
        CHECK(!is_member_Sx(pad(other, y), x));
    }
}

TEST_CASE("is_member_Sx is false across mismatched shapes") {
    const Circuit x1 = canonical_yes_witness(1);
    const Circuit x2 = canonical_yes_witness(2);
    CHECK(!is_member_Sx(pad(x2, Message{}), x1));
}

TEST_CASE("fast_decide follows the two-family order") {
    SplitMix64 rng(103);
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::uint32_t>(1 + rng.below(6));
        const Circuit x_in = canonical_yes_witness(n);
        const Circuit x_out = canonical_no_witness(n);
        const Message y = random_message(rng, 48);

        CHECK(fast_decide(pad(x_in, y), x_in, x_out) == Verdict::Accept);
        CHECK(fast_decide(pad(x_out, y), x_in, x_out) == Verdict::Reject);

        RandomCircuitParams params;
        params.fixed_qubits = n;
        Circuit unrelated = random_frame_free_circuit(rng, params);
        while (unrelated == x_in || unrelated == x_out) {
            unrelated = random_frame_free_circuit(rng, params);
        }
        CHECK(fast_decide(unrelated, x_in, x_out) == Verdict::Unknown);
    }
}

TEST_CASE("accept/reject verdicts agree with the simulator oracle") {
    SplitMix64 rng(107);
    for (int i = 0; i < 60; ++i) {
        const auto n = static_cast<std::uint32_t>(1 + rng.below(8));
        const Circuit x_in = canonical_yes_witness(n);
        const Circuit x_out = canonical_no_witness(n);
        const Message y = random_message(rng, 32);

        const Circuit z_in = pad(x_in, y);
        REQUIRE(fast_decide(z_in, x_in, x_out) == Verdict::Accept);
        CHECK(sdcs_oracle(z_in).status == OracleStatus::In);

        const Circuit z_out = pad(x_out, y);
        REQUIRE(fast_decide(z_out, x_in, x_out) == Verdict::Reject);
        CHECK(sdcs_oracle(z_out).status == OracleStatus::Out);
    }
}

TEST_CASE("fast_decide never returns Unknown on padded families") {
    SplitMix64 rng(109);
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::uint32_t>(1 + rng.below(8));
        const Circuit x_in = canonical_yes_witness(n);
        const Circuit x_out = canonical_no_witness(n);
        const Circuit z = rng.below(2) == 0 ? pad(x_in, random_message(rng, 64))
                                            : pad(x_out, random_message(rng, 64));
        CHECK(fast_decide(z, x_in, x_out) != Verdict::Unknown);
    }
}

TEST_CASE("verdicts render as ACCEPT/REJECT/UNKNOWN") {
    CHECK(std::string(to_string(Verdict::Accept)) == "ACCEPT");
    CHECK(std::string(to_string(Verdict::Reject)) == "REJECT");
    CHECK(std::string(to_string(Verdict::Unknown)) == "UNKNOWN");
}
