#include "qpad/promises.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "qpad/errors.hpp"
#include "qpad/stego.hpp"

namespace qpad {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> normalize_edge(std::uint32_t a, std::uint32_t b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Per-qubit kind-name sequences in time order; a gate appears on every qubit
// it touches.
std::vector<std::vector<std::string>> qubit_tracks(const Circuit& circuit) {
    std::vector<std::vector<std::string>> tracks(circuit.n_qubits());
    for (const Gate& gate : circuit.gates()) {
        for (std::uint32_t q : gate.operands) {
            tracks[q].push_back(circuit.kind_of(gate).name());
        }
    }
    return tracks;
}

}  // namespace

Promise even_qubits() {
    return Promise("even", [](const Circuit& c) { return c.n_qubits() % 2 == 0; });
}

Promise prime_qubits() {
    return Promise("prime", [](const Circuit& c) { return is_prime(c.n_qubits()); });
}

Promise gateset_subset(std::set<std::string> allowed) {
    std::string name = "gates(";
    for (const std::string& kind : allowed) {
        if (name.back() != '(') name += ',';
        name += kind;
    }
    name += ')';
    return Promise(std::move(name), [allowed = std::move(allowed)](const Circuit& c) {
        for (const Gate& gate : c.gates()) {
            if (!allowed.contains(c.kind_of(gate).name())) {
                return false;
            }
        }
        return true;
    });
}

Promise connectivity(std::set<std::pair<std::uint32_t, std::uint32_t>> edges) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> normalized;
    for (const auto& [a, b] : edges) {
        normalized.insert(normalize_edge(a, b));
    }
    std::string name = "conn(";
    for (const auto& [a, b] : normalized) {
        if (name.back() != '(') name += ',';
        name += std::to_string(a) + '-' + std::to_string(b);
    }
    name += ')';
    return Promise(std::move(name), [edges = std::move(normalized)](const Circuit& c) {
        for (const Gate& gate : c.gates()) {
            if (gate.operands.size() < 2) {
                continue;
            }
            for (std::size_t i = 0; i < gate.operands.size(); ++i) {
                for (std::size_t j = i + 1; j < gate.operands.size(); ++j) {
                    if (!edges.contains(normalize_edge(gate.operands[i], gate.operands[j]))) {
                        return false;
                    }
                }
            }
        }
        return true;
    });
}

Promise forbidden_adjacent(std::set<std::pair<std::string, std::string>> pairs,
                           const GateSet& gateset) {
    const IdentityBlockPair blocks = default_block_pair(gateset);

    // Consecutive kind pairs the embedding itself produces: inside either
    // block, and across every block-to-block boundary.
    std::set<std::pair<std::string, std::string>> produced;
    for (const std::vector<std::size_t>* block : {&blocks.block0(), &blocks.block1()}) {
        for (std::size_t i = 0; i + 1 < block->size(); ++i) {
            produced.emplace(gateset.kind((*block)[i]).name(),
                             gateset.kind((*block)[i + 1]).name());
        }
    }
    for (const std::vector<std::size_t>* first : {&blocks.block0(), &blocks.block1()}) {
        for (const std::vector<std::size_t>* second : {&blocks.block0(), &blocks.block1()}) {
            produced.emplace(gateset.kind(first->back()).name(),
                             gateset.kind(second->front()).name());
        }
    }
    for (const auto& pair : pairs) {
        if (produced.contains(pair)) {
            throw PrecludesEncoding("forbidding (" + pair.first + "," + pair.second +
                                    ") would preclude the identity block encoding");
        }
    }

    std::string name = "forbid(";
    for (const auto& [a, b] : pairs) {
        if (name.back() != '(') name += ',';
        name += a + ':' + b;
    }
    name += ')';
    return Promise(std::move(name), [pairs = std::move(pairs)](const Circuit& c) {
        const auto tracks = qubit_tracks(c);
        for (const auto& track : tracks) {
            for (std::size_t i = 0; i + 1 < track.size(); ++i) {
                if (pairs.contains({track[i], track[i + 1]})) {
                    return false;
                }
            }
        }
        return true;
    });
}

namespace {

Promise edge_kinds_promise(std::string prefix, std::set<std::string> allowed, bool first) {
    std::string name = prefix + "(";
    for (const std::string& kind : allowed) {
        if (name.back() != '(') name += ',';
        name += kind;
    }
    name += ')';
    return Promise(std::move(name), [allowed = std::move(allowed), first](const Circuit& c) {
        const auto tracks = qubit_tracks(c);
        for (std::uint32_t q = 1; q < c.n_qubits(); ++q) {
            if (tracks[q].empty()) {
                continue;
            }
            const std::string& kind = first ? tracks[q].front() : tracks[q].back();
            if (!allowed.contains(kind)) {
                return false;
            }
        }
        return true;
    });
}

}  // namespace

Promise initial_kinds(std::set<std::string> allowed) {
    return edge_kinds_promise("first", std::move(allowed), true);
}

Promise final_kinds(std::set<std::string> allowed) {
    return edge_kinds_promise("last", std::move(allowed), false);
}

Promise conjunction(std::vector<Promise> promises) {
    std::string name;
    for (const Promise& p : promises) {
        if (!name.empty()) name += " & ";
        name += p.name();
    }
    if (name.empty()) {
        name = "true";
    }
    return Promise(std::move(name), [promises = std::move(promises)](const Circuit& c) {
        return std::all_of(promises.begin(), promises.end(),
                           [&](const Promise& p) { return p(c); });
    });
}

ClosureReport check_closure(const Promise& promise,
                            std::span<const std::pair<Circuit, Message>> samples) {
    ClosureReport report;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& [circuit, message] = samples[i];
        if (!promise(circuit)) {
            throw SampleOutsidePromise("sample " + std::to_string(i) +
                                       " does not satisfy promise '" + promise.name() + "'");
        }
        ++report.checked;
        if (!promise(pad(circuit, message))) {
            report.violations.push_back(i);
        }
    }
    return report;
}

namespace {

struct AtomParser {
    std::string_view expr;
    std::size_t offset;  // of the atom within expr, for error positions

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(1, offset + 1, what);
    }
};

std::vector<std::string> split_list(std::string_view body) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) {
            comma = body.size();
        }
        std::string_view item = body.substr(start, comma - start);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) {
            item.remove_prefix(1);
        }
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) {
            item.remove_suffix(1);
        }
        if (!item.empty()) {
            items.emplace_back(item);
        }
        start = comma + 1;
    }
    return items;
}

std::uint32_t parse_qubit_token(const AtomParser& atom, std::string_view token) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        atom.fail("expected a qubit index, got '" + std::string(token) + "'");
    }
    return value;
}

Promise parse_atom(const AtomParser& atom, const GateSet& gateset) {
    std::string_view text = atom.expr;
    if (text == "even") {
        return even_qubits();
    }
    if (text == "prime") {
        return prime_qubits();
    }

    const std::size_t open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') {
        atom.fail("unknown promise atom '" + std::string(text) + "'");
    }
    const std::string_view head = text.substr(0, open);
    const std::string_view body = text.substr(open + 1, text.size() - open - 2);
    const std::vector<std::string> items = split_list(body);

    if (head == "gates" || head == "first" || head == "last") {
        std::set<std::string> kinds;
        for (const std::string& item : items) {
            if (!gateset.index_of(item)) {
                atom.fail("unknown gate kind '" + item + "' in gateset '" + gateset.name() + "'");
            }
            kinds.insert(item);
        }
        if (head == "gates") return gateset_subset(std::move(kinds));
        if (head == "first") return initial_kinds(std::move(kinds));
        return final_kinds(std::move(kinds));
    }
    if (head == "conn") {
        std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (const std::string& item : items) {
            const std::size_t dash = item.find('-');
            if (dash == std::string::npos) {
                atom.fail("expected an edge like 0-1, got '" + item + "'");
            }
            edges.insert(normalize_edge(
                parse_qubit_token(atom, std::string_view(item).substr(0, dash)),
                parse_qubit_token(atom, std::string_view(item).substr(dash + 1))));
        }
        return connectivity(std::move(edges));
    }
    if (head == "forbid") {
        std::set<std::pair<std::string, std::string>> pairs;
        for (const std::string& item : items) {
            const std::size_t colon = item.find(':');
            if (colon == std::string::npos) {
                atom.fail("expected a pair like T:T, got '" + item + "'");
            }
            std::string a = item.substr(0, colon);
            std::string b = item.substr(colon + 1);
            if (!gateset.index_of(a) || !gateset.index_of(b)) {
                atom.fail("unknown gate kind in pair '" + item + "'");
            }
            pairs.emplace(std::move(a), std::move(b));
        }
        return forbidden_adjacent(std::move(pairs), gateset);
    }
    atom.fail("unknown promise atom '" + std::string(head) + "'");
}

}  // namespace

Promise parse_promise_expr(std::string_view expr, const GateSet& gateset) {
    std::vector<Promise> atoms;
    std::size_t start = 0;
    while (start <= expr.size()) {
        std::size_t amp = expr.find('&', start);
        if (amp == std::string_view::npos) {
            amp = expr.size();
        }
        std::size_t begin = start;
        std::size_t end = amp;
        while (begin < end && (expr[begin] == ' ' || expr[begin] == '\t')) {
            ++begin;
        }
        while (end > begin && (expr[end - 1] == ' ' || expr[end - 1] == '\t')) {
            --end;
        }
        if (begin < end) {
            atoms.push_back(parse_atom(AtomParser{expr.substr(begin, end - begin), begin}, gateset));
        } else if (amp < expr.size()) {
            throw ParseError(1, begin + 1, "empty promise atom");
        }
        start = amp + 1;
    }
    if (atoms.size() == 1) {
        return std::move(atoms.front());
    }
    return conjunction(std::move(atoms));
}

}  // namespace qpad
