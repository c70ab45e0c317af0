#include "qpad/gates.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qpad {

namespace {

std::size_t pow2(std::size_t k) {
    return std::size_t{1} << k;
}

}  // namespace

GateKind::GateKind(std::string name, std::size_t arity, ComplexMatrix matrix)
    : name_(std::move(name)), arity_(arity), matrix_(std::move(matrix)) {
    if (name_.empty()) {
        throw std::invalid_argument("gate kind name must be non-empty");
    }
    if (arity_ == 0) {
        throw std::invalid_argument("gate kind '" + name_ + "' must have arity >= 1");
    }
    if (matrix_.dim() != pow2(arity_)) {
        throw std::invalid_argument("gate kind '" + name_ + "' matrix dimension must be 2^arity");
    }
    if (!matrix_.is_unitary(kUnitaryTol)) {
        throw std::invalid_argument("gate kind '" + name_ + "' matrix is not unitary");
    }
}

GateSet::GateSet(std::string name, std::vector<GateKind> kinds)
    : name_(std::move(name)), kinds_(std::move(kinds)) {
    if (kinds_.empty()) {
        throw std::invalid_argument("gateset '" + name_ + "' must contain at least one kind");
    }
    for (std::size_t i = 0; i < kinds_.size(); ++i) {
        for (std::size_t j = i + 1; j < kinds_.size(); ++j) {
            if (kinds_[i].name() == kinds_[j].name()) {
                throw std::invalid_argument("gateset '" + name_ + "' has duplicate kind '" +
                                            kinds_[i].name() + "'");
            }
        }
    }
}

std::optional<std::size_t> GateSet::index_of(std::string_view kind_name) const {
    for (std::size_t i = 0; i < kinds_.size(); ++i) {
        if (kinds_[i].name() == kind_name) {
            return i;
        }
    }
    return std::nullopt;
}

GateSetPtr clifford_t() {
    static const GateSetPtr instance = [] {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

        ComplexMatrix h(2);
        h.at(0, 0) = inv_sqrt2;
        h.at(0, 1) = inv_sqrt2;
        h.at(1, 0) = inv_sqrt2;
        h.at(1, 1) = -inv_sqrt2;

        ComplexMatrix s(2);
        s.at(0, 0) = 1.0;
        s.at(1, 1) = Complex{0.0, 1.0};

        ComplexMatrix t(2);
        t.at(0, 0) = 1.0;
        t.at(1, 1) = std::polar(1.0, std::acos(-1.0) / 4.0);

        // Operand 0 is the control, operand 1 the target; matrix index bit j
        // corresponds to operand j (see simulator gate application).
        ComplexMatrix cx(4);
        cx.at(0, 0) = 1.0;  // |c=0,t=0> -> itself
        cx.at(2, 2) = 1.0;  // |c=0,t=1> -> itself
        cx.at(3, 1) = 1.0;  // |c=1,t=0> -> |c=1,t=1>
        cx.at(1, 3) = 1.0;  // |c=1,t=1> -> |c=1,t=0>

        return std::make_shared<const GateSet>(
            "clifford_t", std::vector<GateKind>{
                              GateKind("H", 1, h),
                              GateKind("S", 1, s),
                              GateKind("T", 1, t),
                              GateKind("CX", 2, cx),
                          });
    }();
    return instance;
}

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, GateSetPtr, std::less<>>& registry() {
    static std::map<std::string, GateSetPtr, std::less<>> r = {{"clifford_t", clifford_t()}};
    return r;
}

}  // namespace

GateSetPtr find_gateset(std::string_view name) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(name);
    return it == registry().end() ? nullptr : it->second;
}

void register_gateset(GateSetPtr gateset) {
    if (!gateset) {
        throw std::invalid_argument("cannot register a null gateset");
    }
    std::lock_guard<std::mutex> lock(registry_mutex());
    registry()[gateset->name()] = std::move(gateset);
}

}  // namespace qpad
