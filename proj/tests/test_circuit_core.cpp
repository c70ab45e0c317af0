#include <doctest.h>

#include <map>

#include "qpad/circuit.hpp"
#include "qpad/circuit_io.hpp"
#include "qpad/errors.hpp"
#include "qpad/spaces.hpp"
#include "qpad/testgen.hpp"

using namespace qpad;

namespace {

Gate g(const GateSet& gs, const char* kind, std::vector<std::uint32_t> ops) {
    return Gate{*gs.index_of(kind), std::move(ops)};
}

// Independent ordering oracle: bucket gate positions by associated qubit,
// then concatenate buckets in qubit order. Time order within a bucket is
// preserved by construction, with no sort involved.
std::vector<std::size_t> bucket_order(const Circuit& c) {
    std::map<std::uint32_t, std::vector<std::size_t>> buckets;
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
        buckets[associated_qubit(c.gates()[pos])].push_back(pos);
    }
    std::vector<std::size_t> out;
    for (const auto& [qubit, positions] : buckets) {
        out.insert(out.end(), positions.begin(), positions.end());
    }
    return out;
}

}  // namespace

TEST_CASE("gate kinds validate unitarity and arity") {
    const GateSetPtr gs = clifford_t();
    for (const GateKind& kind : gs->kinds()) {
        CHECK(kind.arity() >= 1);
        CHECK(kind.matrix().is_unitary(1e-12));
    }
    CHECK(gs->size() == 4);
    CHECK(gs->kind(0).name() == "H");
    CHECK(gs->kind(3).name() == "CX");

    ComplexMatrix not_unitary(2);
    not_unitary.at(0, 0) = 2.0;
    not_unitary.at(1, 1) = 1.0;
    CHECK_THROWS_AS(GateKind("BAD", 1, not_unitary), std::invalid_argument);
    CHECK_THROWS_AS(GateKind("BAD", 0, ComplexMatrix::identity(1)), std::invalid_argument);
}

TEST_CASE("gateset rejects duplicate kind names") {
    ComplexMatrix id2 = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(GateSet("dup", {GateKind("A", 1, id2), GateKind("A", 1, id2)}),
                    std::invalid_argument);
}

TEST_CASE("circuit construction validates gates") {
    const GateSetPtr gs = clifford_t();
    CHECK_THROWS_AS(Circuit(0, gs), std::invalid_argument);
    CHECK_THROWS_AS(Circuit(1, gs, {g(*gs, "H", {1})}), std::invalid_argument);
    CHECK_THROWS_AS(Circuit(2, gs, {g(*gs, "CX", {0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(Circuit(2, gs, {g(*gs, "CX", {0})}), std::invalid_argument);
    CHECK_NOTHROW(Circuit(2, gs, {g(*gs, "CX", {1, 0})}));
    CHECK(Circuit(3, gs).empty());
}

TEST_CASE("associated_qubit is the lowest operand") {
    const GateSetPtr gs = clifford_t();
    CHECK(associated_qubit(g(*gs, "H", {0})) == 0);
    CHECK(associated_qubit(g(*gs, "CX", {2, 1})) == 1);
    CHECK(associated_qubit(g(*gs, "CX", {0, 3})) == 0);
}

TEST_CASE("order_gates sorts by associated qubit then time") {
    const GateSetPtr gs = clifford_t();

    CHECK(order_gates(Circuit(2, gs)).empty());

    // Time order CX(0,1), H(1), T(0) -> CX, T, H.
    const Circuit c(2, gs, {g(*gs, "CX", {0, 1}), g(*gs, "H", {1}), g(*gs, "T", {0})});
    const std::vector<std::size_t> expected{0, 2, 1};
    CHECK(order_gates(c) == expected);
    CHECK(order_gates(c) == bucket_order(c));

    const Circuit single(1, gs, {g(*gs, "H", {0}), g(*gs, "T", {0})});
    CHECK(order_gates(single) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("order_gates is a deterministic permutation") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const Circuit c = random_circuit(rng);
        const auto order = order_gates(c);
        CHECK(order == bucket_order(c));
        CHECK(order == order_gates(c));

        std::vector<bool> seen(c.size(), false);
        for (std::size_t pos : order) {
            REQUIRE(pos < c.size());
            CHECK(!seen[pos]);
            seen[pos] = true;
        }
    }
}

TEST_CASE("index_spaces enumerates before-gate spaces then tail slots") {
    const GateSetPtr gs = clifford_t();

    const Circuit empty2(2, gs);
    const auto spaces = index_spaces(empty2, 3);
    REQUIRE(spaces.size() == 3);
    CHECK(spaces[0] == Space::tail_slot(0, 0));
    CHECK(spaces[1] == Space::tail_slot(1, 0));
    CHECK(spaces[2] == Space::tail_slot(0, 1));

    const Circuit one(1, gs, {g(*gs, "H", {0})});
    const auto spaces_one = index_spaces(one, 2);
    REQUIRE(spaces_one.size() == 2);
    CHECK(spaces_one[0] == Space::before_gate(0));
    CHECK(spaces_one[1] == Space::tail_slot(0, 0));

    const Circuit c(2, gs, {g(*gs, "CX", {0, 1}), g(*gs, "H", {1}), g(*gs, "T", {0})});
    const auto spaces_c = index_spaces(c, 4);
    REQUIRE(spaces_c.size() == 4);
    CHECK(spaces_c[0] == Space::before_gate(0));  // CX
    CHECK(spaces_c[1] == Space::before_gate(2));  // T
    CHECK(spaces_c[2] == Space::before_gate(1));  // H
    CHECK(spaces_c[3] == Space::tail_slot(0, 0));
}

TEST_CASE("index_spaces prefixes are consistent") {
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Circuit c = random_circuit(rng);
        const std::size_t k = rng.below(20);
        const std::size_t m = rng.below(20);
        const auto shorter = index_spaces(c, k);
        const auto longer = index_spaces(c, k + m);
        REQUIRE(shorter.size() == k);
        REQUIRE(longer.size() == k + m);
        for (std::size_t j = 0; j < k; ++j) {
            CHECK(shorter[j] == longer[j]);
        }
    }
}

TEST_CASE("insert_at_tail appends retargeted blocks") {
    const GateSetPtr gs = clifford_t();

    const Circuit empty1(1, gs);
    const std::vector<Gate> hh{g(*gs, "H", {0}), g(*gs, "H", {0})};
    const Circuit got = insert_at_tail(empty1, 0, hh);
    CHECK(got == Circuit(1, gs, {g(*gs, "H", {0}), g(*gs, "H", {0})}));

    const Circuit t_only(1, gs, {g(*gs, "T", {0})});
    CHECK(insert_at_tail(t_only, 0, {}) == t_only);

    const Circuit cx(2, gs, {g(*gs, "CX", {0, 1})});
    const std::vector<Gate> ssss(4, g(*gs, "S", {1}));  // operands retargeted to qubit 0
    const Circuit padded = insert_at_tail(cx, 0, ssss);
    REQUIRE(padded.size() == 5);
    for (std::size_t i = 1; i < 5; ++i) {
        CHECK(padded.gates()[i] == g(*gs, "S", {0}));
    }

    CHECK_THROWS_AS(insert_at_tail(empty1, 1, hh), InvalidQubit);
    const std::vector<Gate> cx_block{g(*gs, "CX", {0, 1})};
    CHECK_THROWS_AS(insert_at_tail(cx, 0, cx_block), std::invalid_argument);
}

TEST_CASE("insert_at_tail preserves qubit count and gateset") {
    SplitMix64 rng(11);
    const GateSetPtr gs = clifford_t();
    for (int i = 0; i < 50; ++i) {
        const Circuit c = random_circuit(rng);
        const std::vector<Gate> block{g(*gs, "H", {0}), g(*gs, "H", {0})};
        const std::uint32_t qubit = static_cast<std::uint32_t>(rng.below(c.n_qubits()));
        const Circuit out = insert_at_tail(c, qubit, block);
        CHECK(out.n_qubits() == c.n_qubits());
        CHECK(out.gateset() == c.gateset());
        CHECK(out.size() == c.size() + 2);
    }
}

TEST_CASE("text format round trips") {
    SplitMix64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const Circuit c = random_circuit(rng);
        CHECK(parse_circuit(serialize_circuit(c)) == c);
    }
}

TEST_CASE("text format accepts comments and blank lines") {
    const Circuit c = parse_circuit(
        "# header comment\n"
        "qcirc 1\n"
        "gateset clifford_t  # trailing comment\n"
        "\n"
        "qubits 2\n"
        "H 0\n"
        "CX 0 1 # entangle\n");
    const GateSetPtr gs = clifford_t();
    CHECK(c == Circuit(2, gs, {g(*gs, "H", {0}), g(*gs, "CX", {0, 1})}));
}

TEST_CASE("text format reports positions on errors") {
    const auto check_pos = [](const char* text, std::size_t line, std::size_t column) {
        try {
            parse_circuit(text);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(e.column == column);
        }
    };
    check_pos("qcirc 2\n", 1, 1);
    check_pos("qcirc 1\ngateset nosuch\nqubits 1\n", 2, 9);
    check_pos("qcirc 1\ngateset clifford_t\nqubits 0\n", 3, 8);
    check_pos("qcirc 1\ngateset clifford_t\nqubits 2\nRZ 0\n", 4, 1);
    check_pos("qcirc 1\ngateset clifford_t\nqubits 2\nH 5\n", 4, 3);
    check_pos("qcirc 1\ngateset clifford_t\nqubits 2\nCX 1 1\n", 4, 6);
    check_pos("qcirc 1\ngateset clifford_t\n", 3, 1);
}
