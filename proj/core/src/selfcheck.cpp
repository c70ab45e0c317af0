#include "qpad/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "qpad/codec.hpp"
#include "qpad/decider.hpp"
#include "qpad/promises.hpp"
#include "qpad/reductions.hpp"
#include "qpad/simulator.hpp"
#include "qpad/stego.hpp"
#include "qpad/testgen.hpp"
#include "qpad/unitary.hpp"

namespace qpad {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t scaled(std::size_t base, double scale) {
    const auto n = static_cast<std::size_t>(std::llround(static_cast<double>(base) * scale));
    return std::max<std::size_t>(1, n);
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return values[values.size() / 2];
}

SuiteResult codec_round_trip(std::uint64_t seed, double scale) {
    SuiteResult result{"codec-round-trip", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x01);
    const auto start = Clock::now();
    const std::size_t cases = scaled(1000, scale);
    for (std::size_t i = 0; i < cases; ++i) {
        const Circuit c = random_circuit(rng);
        ++result.cases;
        if (decode(encode(c), c.n_qubits(), c.gateset_ptr()) != c) {
            ++result.failures;
            result.note = "round trip mismatch at case " + std::to_string(i);
        }
    }
    if (seconds_since(start) >= 5.0) {
        ++result.failures;
        result.note = "exceeded the 5 s budget";
    }
    return result;
}

SuiteResult padding_recovery(std::uint64_t seed, double scale) {
    SuiteResult result{"padding-recovery", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x02);
    const std::size_t cases = scaled(500, scale);
    for (std::size_t i = 0; i < cases; ++i) {
        const Circuit x = random_circuit(rng);
        const Message y = random_message(rng, 128);
        const Circuit z = pad(x, y);
        ++result.cases;
        if (dec(z) != y || unpad(z) != x) {
            ++result.failures;
            result.note = "recovery failed at case " + std::to_string(i);
        }
    }
    return result;
}

SuiteResult semantic_preservation(std::uint64_t seed, double scale) {
    SuiteResult result{"semantic-preservation", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x03);
    const std::size_t cases = scaled(200, scale);
    for (std::size_t i = 0; i < cases; ++i) {
        const Circuit x = random_circuit(rng);
        const Message y = random_message(rng, 128);
        ++result.cases;
        if (!distributions_equal(x, pad(x, y), 1e-10)) {
            ++result.failures;
            result.note = "distribution changed at case " + std::to_string(i);
        }
    }
    return result;
}

SuiteResult sx_membership(std::uint64_t seed, double scale) {
    SuiteResult result{"sx-membership", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x04);
    const std::size_t cases = scaled(200, scale);
    for (std::size_t i = 0; i < cases; ++i) {
        const auto n = static_cast<std::uint32_t>(1 + rng.below(8));
        RandomCircuitParams params;
        params.fixed_qubits = n;
        const Circuit x = random_frame_free_circuit(rng, params);
        Circuit x_prime = random_frame_free_circuit(rng, params);
        while (x_prime == x) {
            x_prime = random_frame_free_circuit(rng, params);
        }
        const Message y = random_message(rng, 64);
        ++result.cases;
        if (!is_member_Sx(pad(x, y), x) || is_member_Sx(pad(x_prime, y), x)) {
            ++result.failures;
            result.note = "membership check failed at case " + std::to_string(i);
        }
    }
    return result;
}

SuiteResult algorithm3_verdicts(std::uint64_t seed, double scale) {
    SuiteResult result{"algorithm3-verdicts", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x05);
    const std::size_t cases = scaled(200, scale);

    const auto fail = [&](std::size_t i, const char* what) {
        ++result.failures;
        result.note = std::string(what) + " at case " + std::to_string(i);
    };

    for (std::size_t i = 0; i < cases; ++i) {
        const auto n = static_cast<std::uint32_t>(1 + rng.below(8));
        const Circuit x_in = canonical_yes_witness(n);
        const Circuit x_out = canonical_no_witness(n);

        const Circuit z_in = pad(x_in, random_message(rng, 64));
        const Circuit z_out = pad(x_out, random_message(rng, 64));
        RandomCircuitParams params;
        params.fixed_qubits = n;
        Circuit z_other = random_frame_free_circuit(rng, params);
        while (z_other == x_in || z_other == x_out) {
            z_other = random_frame_free_circuit(rng, params);
        }

        ++result.cases;
        if (fast_decide(z_in, x_in, x_out) != Verdict::Accept) {
            fail(i, "expected ACCEPT");
        } else if (fast_decide(z_out, x_in, x_out) != Verdict::Reject) {
            fail(i, "expected REJECT");
        } else if (fast_decide(z_other, x_in, x_out) != Verdict::Unknown) {
            fail(i, "expected UNKNOWN");
        } else if (sdcs_oracle(z_in).status != OracleStatus::In) {
            fail(i, "ACCEPT disagrees with the simulator");
        } else if (sdcs_oracle(z_out).status != OracleStatus::Out) {
            fail(i, "REJECT disagrees with the simulator");
        }
    }
    return result;
}

SuiteResult one_one_composition(std::uint64_t, double) {
    SuiteResult result{"one-one-composition", 0, 0, ""};
    const auto start = Clock::now();

    const InstanceSpace space{clifford_t(), 2};
    const ReductionFn h = compose_one_one(builtin_reduction("const-yes", space), space);

    std::set<Word> image;
    for (std::uint32_t value = 0; value < (1u << 12); ++value) {
        std::vector<bool> bits(12);
        for (std::size_t b = 0; b < 12; ++b) {
            bits[b] = (value >> (11 - b)) & 1;
        }
        image.insert(h(Word(std::move(bits))));
        ++result.cases;
    }
    if (image.size() != (1u << 12)) {
        ++result.failures;
        result.note = "only " + std::to_string(image.size()) + " distinct outputs";
    }
    if (seconds_since(start) >= 10.0) {
        ++result.failures;
        result.note = "exceeded the 10 s budget";
    }
    return result;
}

SuiteResult linear_scaling(std::uint64_t seed, double) {
    SuiteResult result{"linear-scaling", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x07);
    RandomCircuitParams params;
    params.fixed_qubits = 2;
    params.max_gates = 8;
    const Circuit x = random_circuit(rng, params);

    const auto time_pad_dec = [&](std::size_t bits) {
        Message y;
        for (std::size_t i = 0; i < bits; ++i) {
            y.push_back(rng.below(2) == 1);
        }
        const auto start = Clock::now();
        const Circuit z = pad(x, y);
        const auto got = dec(z);
        double elapsed = seconds_since(start);
        if (got != y) {
            elapsed = -1.0;  // poisoned; recovery itself failed
        }
        return elapsed;
    };

    const std::size_t reps = 11;
    std::vector<double> small_times, large_times;
    for (std::size_t r = 0; r < reps; ++r) {
        small_times.push_back(time_pad_dec(1000));
        large_times.push_back(time_pad_dec(10000));
        ++result.cases;
    }
    const double per_kbit_small = median(small_times);
    const double per_kbit_large = median(large_times) / 10.0;
    if (per_kbit_small <= 0.0 || per_kbit_large < 0.0) {
        ++result.failures;
        result.note = "timing run failed";
    } else if (per_kbit_large > 3.0 * per_kbit_small) {
        ++result.failures;
        result.note = "per-bit ratio " + std::to_string(per_kbit_large / per_kbit_small) +
                      " exceeds 3.0";
    }
    return result;
}

// Sample generation constrained to a promise: qubit counts come from the
// conjunction's count predicates, gate kinds and edges from its structural
// ones, and anything left (adjacency, first/last kinds) is handled by
// redraw with an empty-circuit fallback, which satisfies every structural
// restriction vacuously.
struct PromiseCase {
    Promise promise;
    std::vector<std::uint32_t> qubit_choices;
    std::optional<std::set<std::size_t>> allowed_kinds;
    std::optional<std::set<std::pair<std::uint32_t, std::uint32_t>>> allowed_edges;
};

std::pair<Circuit, Message> draw_sample(SplitMix64& rng, const PromiseCase& pc) {
    const std::uint32_t n = pc.qubit_choices[rng.below(pc.qubit_choices.size())];
    RandomCircuitParams params;
    params.fixed_qubits = n;
    params.max_gates = 24;
    params.allowed_kinds = pc.allowed_kinds;
    params.allowed_edges = pc.allowed_edges;
    for (int attempt = 0; attempt < 60; ++attempt) {
        Circuit candidate = random_circuit(rng, params);
        if (pc.promise(candidate)) {
            return {std::move(candidate), random_message(rng, 64)};
        }
    }
    return {Circuit(n, clifford_t(), {}), random_message(rng, 64)};
}

std::vector<std::uint32_t> intersect_counts(bool need_even, bool need_prime) {
    std::vector<std::uint32_t> counts;
    for (std::uint32_t n = 1; n <= 8; ++n) {
        if (need_even && n % 2 != 0) continue;
        if (need_prime && !(n == 2 || n == 3 || n == 5 || n == 7)) continue;
        counts.push_back(n);
    }
    return counts;
}

SuiteResult promise_closure(std::uint64_t seed, double scale) {
    SuiteResult result{"promise-closure", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x08);
    const GateSetPtr gs = clifford_t();
    const std::size_t samples_per_case = scaled(100, scale);

    std::vector<PromiseCase> cases;
    cases.push_back({even_qubits(), intersect_counts(true, false), std::nullopt, std::nullopt});
    cases.push_back({prime_qubits(), intersect_counts(false, true), std::nullopt, std::nullopt});
    cases.push_back({gateset_subset({"H", "S", "T", "CX"}), intersect_counts(false, false),
                     std::nullopt, std::nullopt});
    cases.push_back({gateset_subset({"H", "S"}), intersect_counts(false, false),
                     std::set<std::size_t>{0, 1}, std::nullopt});
    {
        std::set<std::pair<std::uint32_t, std::uint32_t>> line;
        for (std::uint32_t q = 0; q + 1 < 8; ++q) {
            line.insert({q, q + 1});
        }
        cases.push_back({connectivity(line), intersect_counts(false, false), std::nullopt, line});
    }
    cases.push_back({forbidden_adjacent({{"T", "T"}}, *gs), intersect_counts(false, false),
                     std::nullopt, std::nullopt});
    cases.push_back({initial_kinds({"H", "S", "T", "CX"}), intersect_counts(false, false),
                     std::nullopt, std::nullopt});
    cases.push_back({final_kinds({"H", "S", "T", "CX"}), intersect_counts(false, false),
                     std::nullopt, std::nullopt});

    // Random conjunctions. Forbidden pairs are drawn from combinations the
    // embedding can never create: the appended gates are H and S only, every
    // appended run starts with S (the magic's leading 1-bit), so any pair
    // whose second kind is T or CX, plus (T,H) and (CX,H), stays closed.
    const std::vector<std::pair<std::string, std::string>> safe_forbids = {
        {"H", "T"}, {"S", "T"}, {"T", "T"}, {"CX", "T"},  {"H", "CX"}, {"S", "CX"},
        {"T", "CX"}, {"CX", "CX"}, {"T", "H"}, {"CX", "H"},
    };
    const std::size_t conjunctions = 20;
    for (std::size_t c = 0; c < conjunctions; ++c) {
        std::vector<Promise> parts;
        const bool need_even = rng.below(2) == 1;
        const bool need_prime = !need_even && rng.below(2) == 1;
        if (need_even) parts.push_back(even_qubits());
        if (need_prime) parts.push_back(prime_qubits());

        std::set<std::string> kinds = {"H", "S"};
        std::set<std::size_t> kind_indices = {*gs->index_of("H"), *gs->index_of("S")};
        for (const char* extra : {"T", "CX"}) {
            if (rng.below(2) == 1) {
                kinds.insert(extra);
                kind_indices.insert(*gs->index_of(extra));
            }
        }
        parts.push_back(gateset_subset(kinds));

        std::optional<std::set<std::pair<std::uint32_t, std::uint32_t>>> edges;
        if (rng.below(2) == 1) {
            edges.emplace();
            for (std::uint32_t q = 0; q + 1 < 8; ++q) {
                if (rng.below(2) == 1) {
                    edges->insert({q, q + 1});
                }
            }
            parts.push_back(connectivity(*edges));
        }

        if (rng.below(2) == 1) {
            std::set<std::pair<std::string, std::string>> forbids;
            forbids.insert(safe_forbids[rng.below(safe_forbids.size())]);
            if (rng.below(2) == 1) {
                forbids.insert(safe_forbids[rng.below(safe_forbids.size())]);
            }
            parts.push_back(forbidden_adjacent(forbids, *gs));
        }

        cases.push_back({conjunction(std::move(parts)), intersect_counts(need_even, need_prime),
                         kind_indices, edges});
    }

    for (std::size_t c = 0; c < cases.size(); ++c) {
        std::vector<std::pair<Circuit, Message>> samples;
        samples.reserve(samples_per_case);
        for (std::size_t s = 0; s < samples_per_case; ++s) {
            samples.push_back(draw_sample(rng, cases[c]));
        }
        const ClosureReport report = check_closure(cases[c].promise, samples);
        ++result.cases;
        if (!report.holds()) {
            ++result.failures;
            result.note = "closure violated for '" + cases[c].promise.name() + "'";
        }
    }
    return result;
}

SuiteResult simulator_oracle_agreement(std::uint64_t seed, double scale) {
    SuiteResult result{"simulator-oracle-agreement", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x09);
    const std::size_t cases = scaled(2000, scale);
    RandomCircuitParams params;
    params.max_qubits = 3;
    params.max_gates = 6;
    for (std::size_t i = 0; i < cases; ++i) {
        const Circuit c = random_circuit(rng, params);
        const std::vector<double> via_run = output_distribution(c);

        const ComplexMatrix u = circuit_unitary(c);
        ++result.cases;
        bool ok = true;
        for (std::size_t out = 0; out < via_run.size(); ++out) {
            const double via_chain = std::norm(u.at(out, 0));
            if (std::abs(via_run[out] - via_chain) > 1e-10) {
                ok = false;
            }
        }
        if (!ok) {
            ++result.failures;
            result.note = "distribution mismatch at case " + std::to_string(i);
        }
    }
    return result;
}

SuiteResult decider_simulation_free(std::uint64_t seed, double) {
    SuiteResult result{"decider-simulation-free", 0, 0, ""};
    SplitMix64 rng(seed ^ 0x0a);
    Message y;
    for (std::size_t i = 0; i < 2000; ++i) {
        y.push_back(rng.below(2) == 1);
    }

    const auto time_decide = [&](std::uint32_t n) {
        const Circuit x_in = canonical_yes_witness(n);
        const Circuit x_out = canonical_no_witness(n);
        const Circuit z = pad(x_in, y);
        const std::size_t reps = 15;
        std::vector<double> times;
        times.reserve(reps);
        for (std::size_t r = 0; r < reps; ++r) {
            const auto start = Clock::now();
            const Verdict verdict = fast_decide(z, x_in, x_out);
            double elapsed = seconds_since(start);
            if (verdict != Verdict::Accept) {
                elapsed = -1.0;
            }
            times.push_back(elapsed);
            ++result.cases;
        }
        return median(times);
    };

    const double t_small = time_decide(4);
    const double t_large = time_decide(20);
    if (t_small <= 0.0 || t_large <= 0.0) {
        ++result.failures;
        result.note = "timing run failed";
    } else {
        const double ratio = std::max(t_large / t_small, t_small / t_large);
        if (ratio >= 2.0) {
            ++result.failures;
            result.note = "runtime ratio " + std::to_string(ratio) + " is not < 2.0";
        }
    }
    return result;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, double scale) {
    if (scale <= 0.0) {
        return {};
    }
    return {
        codec_round_trip(seed, scale),
        padding_recovery(seed, scale),
        semantic_preservation(seed, scale),
        sx_membership(seed, scale),
        algorithm3_verdicts(seed, scale),
        one_one_composition(seed, scale),
        linear_scaling(seed, scale),
        promise_closure(seed, scale),
        simulator_oracle_agreement(seed, scale),
        decider_simulation_free(seed, scale),
    };
}

}  // namespace qpad
