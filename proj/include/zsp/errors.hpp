#pragma once
// Error taxonomy shared by all modules. Every throw site names a kind so
// callers (and the CLI exit-code mapping) can react without string matching.

#include <stdexcept>
#include <string>

namespace zsp {

enum class ErrorKind {
    BadInput,           // malformed text, bad flags, arity mismatches
    NotATwoGroup,       // operation requires every modulus to be a power of two
    NoZeroSumPartition, // |I(G)| = 1: the star sums to the involution, not zero
    SizePrecondition,   // size multiset violates the documented preconditions
    UnsupportedGroup,   // rank-2 group above the exact-search cap (documented gap)
    UniqueInvolution,   // complete mapping requested for a group with |I| = 1
    HypothesisViolated, // explicit lemma hypothesis failed (reported, not a bug)
    BudgetExceeded,     // node/time budget ran out before an answer
    ConstructionBug,    // internal invariant broke; message carries a repro hint
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::BadInput: return "bad-input";
        case ErrorKind::NotATwoGroup: return "not-a-two-group";
        case ErrorKind::NoZeroSumPartition: return "no-zero-sum-partition";
        case ErrorKind::SizePrecondition: return "size-precondition";
        case ErrorKind::UnsupportedGroup: return "unsupported-group";
        case ErrorKind::UniqueInvolution: return "unique-involution";
        case ErrorKind::HypothesisViolated: return "hypothesis-violated";
        case ErrorKind::BudgetExceeded: return "budget-exceeded";
        case ErrorKind::ConstructionBug: return "construction-bug";
    }
    return "unknown";
}

}  // namespace zsp
