#include <doctest.h>

#include "qpad/errors.hpp"
#include "qpad/promises.hpp"
#include "qpad/stego.hpp"
#include "qpad/testgen.hpp"

using namespace qpad;

namespace {

Gate g(const GateSet& gs, const char* kind, std::vector<std::uint32_t> ops) {
    return Gate{*gs.index_of(kind), std::move(ops)};
}

}  // namespace

TEST_CASE("qubit-count promises") {
    const GateSetPtr gs = clifford_t();
    CHECK(even_qubits()(Circuit(4, gs)));
    CHECK(!even_qubits()(Circuit(7, gs)));
    CHECK(!prime_qubits()(Circuit(4, gs)));
    CHECK(prime_qubits()(Circuit(7, gs)));
    CHECK(prime_qubits()(Circuit(2, gs)));
    CHECK(!prime_qubits()(Circuit(1, gs)));
}

TEST_CASE("gateset_subset checks every gate kind") {
    const GateSetPtr gs = clifford_t();
    const Promise p = gateset_subset({"H", "S", "CX"});
    CHECK(p(Circuit(2, gs, {g(*gs, "H", {0}), g(*gs, "CX", {0, 1})})));
    CHECK(!p(Circuit(1, gs, {g(*gs, "T", {0})})));
    CHECK(gateset_subset({})(Circuit(1, gs)));
}

TEST_CASE("connectivity restricts multi-qubit gates to edges") {
    const GateSetPtr gs = clifford_t();
    const Promise p = connectivity({{0, 1}});
    CHECK(p(Circuit(2, gs, {g(*gs, "CX", {0, 1})})));
    CHECK(p(Circuit(2, gs, {g(*gs, "CX", {1, 0})})));  // unordered edge
    CHECK(!p(Circuit(3, gs, {g(*gs, "CX", {1, 2})})));
    CHECK(connectivity({})(Circuit(3, gs, {g(*gs, "H", {2}), g(*gs, "T", {0})})));
}

TEST_CASE("forbidden_adjacent checks consecutive gates per qubit") {
    const GateSetPtr gs = clifford_t();
    const Promise p = forbidden_adjacent({{"T", "T"}}, *gs);
    CHECK(p(Circuit(1, gs, {g(*gs, "T", {0}), g(*gs, "H", {0}), g(*gs, "T", {0})})));
    CHECK(!p(Circuit(1, gs, {g(*gs, "T", {0}), g(*gs, "T", {0})})));

    // T(0), T(1) are not adjacent on any single qubit.
    CHECK(p(Circuit(2, gs, {g(*gs, "T", {0}), g(*gs, "T", {1})})));

    // A CX sits on both its qubits: T(1) then CX(0,1) then nothing forbids
    // (T,CX), but forbidding it must trip.
    const Promise q = forbidden_adjacent({{"T", "CX"}}, *gs);
    CHECK(!q(Circuit(2, gs, {g(*gs, "T", {1}), g(*gs, "CX", {0, 1})})));
}

TEST_CASE("forbidden pairs inside or between blocks preclude the encoding") {
    const GateSetPtr gs = clifford_t();
    CHECK_THROWS_AS(forbidden_adjacent({{"H", "H"}}, *gs), PrecludesEncoding);
    CHECK_THROWS_AS(forbidden_adjacent({{"S", "S"}}, *gs), PrecludesEncoding);
    CHECK_THROWS_AS(forbidden_adjacent({{"H", "S"}}, *gs), PrecludesEncoding);  // block0->block1
    CHECK_THROWS_AS(forbidden_adjacent({{"S", "H"}}, *gs), PrecludesEncoding);  // block1->block0
    CHECK_NOTHROW(forbidden_adjacent({{"T", "T"}}, *gs));
}

TEST_CASE("edge-position promises exempt qubit 0") {
    const GateSetPtr gs = clifford_t();
    const Promise first_h = initial_kinds({"H"});
    // Qubit 0 starts with T: exempt. Qubit 1 starts with H: allowed.
    CHECK(first_h(Circuit(2, gs, {g(*gs, "T", {0}), g(*gs, "H", {1}), g(*gs, "T", {1})})));
    CHECK(!first_h(Circuit(2, gs, {g(*gs, "T", {1})})));
    CHECK(first_h(Circuit(2, gs)));  // no gates at all

    const Promise last_h = final_kinds({"H"});
    CHECK(last_h(Circuit(2, gs, {g(*gs, "T", {1}), g(*gs, "H", {1}), g(*gs, "T", {0})})));
    CHECK(!last_h(Circuit(2, gs, {g(*gs, "H", {1}), g(*gs, "T", {1})})));
}

TEST_CASE("conjunction is the AND of its parts") {
    const GateSetPtr gs = clifford_t();
    CHECK(conjunction({})(Circuit(1, gs)));

    const Promise both = conjunction({even_qubits(), prime_qubits()});
    CHECK(both(Circuit(2, gs)));
    CHECK(!both(Circuit(6, gs)));

    SplitMix64 rng(83);
    const std::vector<Promise> parts = {even_qubits(), gateset_subset({"H", "S", "CX"}),
                                        connectivity({{0, 1}, {1, 2}})};
    const Promise combined = conjunction({parts[0], parts[1], parts[2]});
    for (int i = 0; i < 100; ++i) {
        const Circuit c = random_circuit(rng);
        bool expected = true;
        for (const Promise& p : parts) {
            expected = expected && p(c);
        }
        CHECK(combined(c) == expected);
    }
}

TEST_CASE("check_closure reports padding violations") {
    const GateSetPtr gs = clifford_t();
    SplitMix64 rng(89);

    // Qubit-count promises are closed: pad never changes the register.
    {
        std::vector<std::pair<Circuit, Message>> samples;
        for (int i = 0; i < 20; ++i) {
            RandomCircuitParams params;
            params.fixed_qubits = static_cast<std::uint32_t>(2 * (1 + rng.below(4)));
            samples.emplace_back(random_circuit(rng, params), random_message(rng, 32));
        }
        CHECK(check_closure(even_qubits(), samples).holds());
    }

    // The full clifford_t gateset is closed: blocks use H and S only.
    {
        std::vector<std::pair<Circuit, Message>> samples;
        for (int i = 0; i < 20; ++i) {
            samples.emplace_back(random_circuit(rng), random_message(rng, 32));
        }
        CHECK(check_closure(gateset_subset({"H", "S", "T", "CX"}), samples).holds());
    }

    // gates(CX,T) is not closed: padding introduces H and S.
    {
        RandomCircuitParams params;
        params.fixed_qubits = 2;
        params.allowed_kinds = std::set<std::size_t>{*gs->index_of("T"), *gs->index_of("CX")};
        std::vector<std::pair<Circuit, Message>> samples;
        samples.emplace_back(random_circuit(rng, params), random_message(rng, 8));
        const ClosureReport report = check_closure(gateset_subset({"CX", "T"}), samples);
        CHECK(!report.holds());
        CHECK(report.violations == std::vector<std::size_t>{0});
    }

    // Samples outside the promise are a caller error.
    {
        std::vector<std::pair<Circuit, Message>> samples;
        samples.emplace_back(Circuit(3, gs), Message{});
        CHECK_THROWS_AS(check_closure(even_qubits(), samples), SampleOutsidePromise);
    }
}

TEST_CASE("promise expression language") {
    const GateSetPtr gs = clifford_t();

    const Promise p = parse_promise_expr("even & gates(H,S,CX) & conn(0-1,1-2) & forbid(T:T)",
                                         *gs);
    CHECK(p(Circuit(2, gs, {g(*gs, "H", {0}), g(*gs, "CX", {0, 1})})));
    CHECK(!p(Circuit(3, gs)));                              // odd qubits
    CHECK(!p(Circuit(2, gs, {g(*gs, "T", {0})})));          // T not allowed
    CHECK(!p(Circuit(4, gs, {g(*gs, "CX", {0, 3})})));      // edge not allowed

    CHECK(parse_promise_expr("", *gs)(Circuit(5, gs)));     // empty = always true
    CHECK(parse_promise_expr("prime", *gs)(Circuit(5, gs)));
    CHECK(parse_promise_expr("first(H) & last(H,S)", *gs)(Circuit(2, gs)));

    CHECK_THROWS_AS(parse_promise_expr("evenn", *gs), ParseError);
    CHECK_THROWS_AS(parse_promise_expr("gates(H,NOPE)", *gs), ParseError);
    CHECK_THROWS_AS(parse_promise_expr("conn(0:1)", *gs), ParseError);
    CHECK_THROWS_AS(parse_promise_expr("even & & prime", *gs), ParseError);
    CHECK_THROWS_AS(parse_promise_expr("forbid(H:H)", *gs), PrecludesEncoding);
}
