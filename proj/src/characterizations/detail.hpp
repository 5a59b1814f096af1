#pragma once

// Shared helpers for the statement batteries.

#include <string>
#include <utility>
#include <vector>

#include "epkit/characterizations.hpp"

namespace epkit::characterizations::detail {

/// A proof-derived witness and whether its identities re-verified.
struct Attempt {
    std::vector<NamedMatrix> witness;
    bool verified = false;
};

/// The exact criterion verdict for a statement, with a solution when the
/// criterion itself produces one.
struct Decision {
    bool truth = false;
    std::vector<NamedMatrix> witness;
};

/// Runs a witness construction; singular inverses and shape faults count as
/// failed verification.
template <class Build>
Attempt attempt(Build&& build) {
    try {
        return build();
    } catch (const ArithmeticError&) {
        return {};
    } catch (const ShapeError&) {
        return {};
    }
}

enum class Property { any, invertible, injective, surjective };

bool has_property(const MatrixQ& m, Property prop);

/// Solvability of the system (left: X·coeff = rhs, right: coeff·X = rhs)
/// with a solution that has `prop`. The coefficient must admit at most one
/// solution, so the property check on the returned solution decides the
/// existential exactly.
Decision unique_solution(const MatrixQ& coeff, const MatrixQ& rhs, Side side, Property prop, std::string name);

/// Plain solvability; any solution witnesses it.
Decision solvable(const MatrixQ& coeff, const MatrixQ& rhs, Side side, std::string name);

/// Solvability of L·Z·R = Y.
Decision sandwich_solvable(const MatrixQ& left, const MatrixQ& right, const MatrixQ& y, std::string name);

Decision both(Decision first, Decision second);

inline Decision from_bool(bool truth) { return {truth, {}}; }

StatementResult fact(const std::string& theorem, const std::string& id, bool truth, std::string note = {});

StatementResult decide(const std::string& theorem, const std::string& id, Attempt constructive, Decision criterion);

/// Identity of the right shape e with e − m.
inline MatrixQ complement(const MatrixQ& m) { return MatrixQ::identity(m.rows()) - m; }

}  // namespace epkit::characterizations::detail
