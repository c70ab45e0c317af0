#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpad/circuit.hpp"
#include "qpad/message.hpp"

namespace qpad {

/// A named total predicate over circuits. Predicates are pure: equal
/// circuits always get equal verdicts.
class Promise {
  public:
    Promise(std::string name, std::function<bool(const Circuit&)> predicate)
        : name_(std::move(name)), predicate_(std::move(predicate)) {}

    bool operator()(const Circuit& circuit) const { return predicate_(circuit); }
    const std::string& name() const { return name_; }

  private:
    std::string name_;
    std::function<bool(const Circuit&)> predicate_;
};

/// Qubit-count restrictions.
Promise even_qubits();
Promise prime_qubits();

/// Every gate's kind name must be in `allowed`.
Promise gateset_subset(std::set<std::string> allowed);

/// Every multi-qubit gate must act within `edges` (unordered pairs; every
/// operand pair of the gate must be an edge). Single-qubit gates pass
/// vacuously.
Promise connectivity(std::set<std::pair<std::uint32_t, std::uint32_t>> edges);

/// No two time-consecutive gates on the same qubit may match a forbidden
/// (earlier kind, later kind) pair. Construction checks the pairs against
/// the gateset's registered identity blocks: a pair occurring inside a block
/// or at any block-to-block boundary would preclude the message encoding,
/// and throws PrecludesEncoding.
Promise forbidden_adjacent(std::set<std::pair<std::string, std::string>> pairs,
                           const GateSet& gateset);

/// Restrictions on which single-qubit kinds may start / end each qubit's
/// gate sequence. Qubit 0 is exempt: the message embedding appends to its
/// tail, so these predicates range over qubits 1..n-1 only.
Promise initial_kinds(std::set<std::string> allowed);
Promise final_kinds(std::set<std::string> allowed);

/// Logical AND. conjunction({}) is the always-true promise.
Promise conjunction(std::vector<Promise> promises);

struct ClosureReport {
    std::size_t checked = 0;
    std::vector<std::size_t> violations;  // sample indices where p(pad(x, y)) failed

    bool holds() const { return violations.empty(); }
};

/// Checks that padding keeps every sample inside the promise. Throws
/// SampleOutsidePromise if a sample circuit does not satisfy the promise to
/// begin with.
ClosureReport check_closure(const Promise& promise,
                            std::span<const std::pair<Circuit, Message>> samples);

/// Parses the promise expression language:
///   even & prime & gates(H,S,CX) & conn(0-1,1-2) & forbid(T:T) & first(H) & last(H,S)
/// An empty expression is the always-true promise. Throws ParseError.
Promise parse_promise_expr(std::string_view expr, const GateSet& gateset);

}  // namespace qpad
