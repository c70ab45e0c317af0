#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpad/complex_matrix.hpp"

namespace qpad {

/// Entrywise tolerance for the unitarity check at GateKind construction.
inline constexpr double kUnitaryTol = 1e-12;

/// A named gate with a fixed arity and unitary matrix of dimension 2^arity.
class GateKind {
  public:
    /// Throws std::invalid_argument if arity is 0, the matrix dimension is
    /// not 2^arity, or the matrix is not unitary within kUnitaryTol.
    GateKind(std::string name, std::size_t arity, ComplexMatrix matrix);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }
    const ComplexMatrix& matrix() const { return matrix_; }

    bool operator==(const GateKind& rhs) const = default;

  private:
    std::string name_;
    std::size_t arity_;
    ComplexMatrix matrix_;
};

/// An ordered set of gate kinds. The declaration order is canonical: the
/// codec pairs kinds[i] with symbol i+2, so two gatesets with the same kinds
/// in different orders encode differently.
class GateSet {
  public:
    /// Throws std::invalid_argument on empty kind list or duplicate names.
    GateSet(std::string name, std::vector<GateKind> kinds);

    const std::string& name() const { return name_; }
    const std::vector<GateKind>& kinds() const { return kinds_; }
    std::size_t size() const { return kinds_.size(); }

    const GateKind& kind(std::size_t index) const { return kinds_.at(index); }
    std::optional<std::size_t> index_of(std::string_view kind_name) const;

    bool operator==(const GateSet& rhs) const = default;

  private:
    std::string name_;
    std::vector<GateKind> kinds_;
};

using GateSetPtr = std::shared_ptr<const GateSet>;

/// The built-in "clifford_t" gateset: H, S, T, CX in that canonical order.
GateSetPtr clifford_t();

/// Process-wide gateset registry, used by the text format and the CLI to
/// resolve gatesets by name. clifford_t is pre-registered. Thread safe.
GateSetPtr find_gateset(std::string_view name);
void register_gateset(GateSetPtr gateset);

}  // namespace qpad
