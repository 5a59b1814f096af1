#include "detail.hpp"

#include <stdexcept>

namespace epkit::characterizations {

std::string_view to_string(Truth t) {
    switch (t) {
        case Truth::yes: return "yes";
        case Truth::no: return "no";
        case Truth::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view to_string(Route r) {
    return r == Route::constructive ? "constructive" : "criterion";
}

bool is_uniform(const Battery& results) {
    std::optional<Truth> seen;
    for (const auto& r : results) {
        if (r.truth == Truth::inconclusive) continue;
        if (!seen) seen = r.truth;
        if (*seen != r.truth) return false;
    }
    return true;
}

namespace detail {

bool has_property(const MatrixQ& m, Property prop) {
    switch (prop) {
        case Property::any: return true;
        case Property::invertible: return is_invertible(m);
        case Property::injective: return has_full_column_rank(m);
        case Property::surjective: return has_full_row_rank(m);
    }
    return false;
}

Decision unique_solution(const MatrixQ& coeff, const MatrixQ& rhs, Side side, Property prop, std::string name) {
    if (!solution_is_unique(coeff, side)) {
        throw std::logic_error("existential with a non-unique solution set cannot be decided by one solve");
    }
    auto sol = solve_exists(coeff, rhs, side);
    if (!sol || !has_property(*sol, prop)) return {};
    return {true, {{std::move(name), std::move(*sol)}}};
}

Decision solvable(const MatrixQ& coeff, const MatrixQ& rhs, Side side, std::string name) {
    auto sol = solve_exists(coeff, rhs, side);
    if (!sol) return {};
    return {true, {{std::move(name), std::move(*sol)}}};
}

Decision sandwich_solvable(const MatrixQ& left, const MatrixQ& right, const MatrixQ& y, std::string name) {
    auto sol = solve_sandwich(left, right, y);
    if (!sol) return {};
    return {true, {{std::move(name), std::move(*sol)}}};
}

Decision both(Decision first, Decision second) {
    if (!first.truth || !second.truth) return {};
    for (auto& w : second.witness) first.witness.push_back(std::move(w));
    return first;
}

StatementResult fact(const std::string& theorem, const std::string& id, bool truth, std::string note) {
    StatementResult r;
    r.theorem_id = theorem;
    r.statement_id = id;
    r.truth = truth ? Truth::yes : Truth::no;
    r.route = Route::criterion;
    r.note = std::move(note);
    return r;
}

StatementResult decide(const std::string& theorem, const std::string& id, Attempt constructive, Decision criterion) {
    StatementResult r;
    r.theorem_id = theorem;
    r.statement_id = id;
    if (constructive.verified) {
        r.truth = Truth::yes;
        r.route = Route::constructive;
        r.witness = std::move(constructive.witness);
        if (!criterion.truth) {
            r.routes_disagree = true;
            r.note = "criterion route disagrees with verified witness";
        }
        return r;
    }
    r.route = Route::criterion;
    r.truth = criterion.truth ? Truth::yes : Truth::no;
    if (criterion.truth) {
        r.witness = std::move(criterion.witness);
        r.witness_failed = true;
        r.note = "proof witness did not verify";
    }
    return r;
}

}  // namespace detail

}  // namespace epkit::characterizations
