#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "epkit/characterizations.hpp"

namespace epkit::battery {

enum class Kind { ep, non_ep, arbitrary, invertible };

std::string_view to_string(Kind k);

struct GeneratorConfig {
    std::uint64_t seed = 0;
    std::size_t n = 2;
    std::optional<std::size_t> rank;  // drawn from the feasible range when absent
    long entry_bound = 3;              // |numerator| ≤ bound, 1 ≤ denominator ≤ bound
    Kind kind = Kind::arbitrary;
    bool gaussian = false;             // nonzero imaginary parts allowed
};

/// Thrown when a configuration cannot be satisfied (bad rank, sampling cap hit).
class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Deterministic in the configuration.
MatrixQ gen_matrix(const GeneratorConfig& cfg);

/// rows×cols matrix of exactly the given rank, deterministic in the seed.
MatrixQ gen_rectangular(std::uint64_t seed, std::size_t rows, std::size_t cols, std::size_t rank, long entry_bound = 3,
                        bool gaussian = false);

/// Signed permutation matrix of size n, deterministic in the seed.
MatrixQ gen_signed_permutation(std::uint64_t seed, std::size_t n);

/// Full-rank factorization plus Moore-Penrose inverses, with the instance
/// invariants re-checked. Throws std::logic_error if they fail.
characterizations::EPInstance make_instance(const MatrixQ& a);

/// The identifiers accepted by run_battery, in a fixed order.
const std::vector<std::string>& theorem_ids();
bool is_known_theorem(const std::string& id);

/// Evaluates one theorem's battery on the matrix generated from cfg.
/// For 5.2 the configuration drives (T1, J, p) instead: rank is the size of
/// T1, kind ep picks a signed permutation J at p = 1 and anything else a
/// random invertible J at p = 2.
characterizations::Battery evaluate(const std::string& theorem_id, const GeneratorConfig& cfg);

/// Alternating EP / non-EP configurations over the given sizes, real and
/// complex mixed, each with its own seed split off the master seed.
std::vector<GeneratorConfig> mixed_configs(std::uint64_t seed, std::size_t trials, const std::vector<std::size_t>& sizes,
                                           long entry_bound = 3);

struct TruthCounts {
    std::size_t yes = 0;
    std::size_t no = 0;
    std::size_t inconclusive = 0;
};

struct Violation {
    std::size_t instance = 0;
    std::string first;
    std::string second;
};

struct Flagged {
    std::size_t instance = 0;
    std::string statement;
    std::string note;
};

struct BatteryReport {
    std::string theorem_id;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::map<std::string, TruthCounts> per_statement_truth_counts;
    std::vector<std::string> statement_order;  // first-seen battery order
    std::vector<Violation> equivalence_violations;
    std::vector<Flagged> witness_failures;
    std::vector<Flagged> route_disagreements;
    std::vector<Flagged> errors;  // instances whose evaluation threw
    std::size_t inconclusive_count = 0;
    std::size_t all_true_instances = 0;
    std::size_t all_false_instances = 0;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool passed() const {
        return equivalence_violations.empty() && witness_failures.empty() && route_disagreements.empty() &&
               errors.empty();
    }
};

/// Per-instance OpenMP parallel evaluation; equals run_battery_serial apart
/// from elapsed_seconds. Throws std::invalid_argument for an unknown theorem.
BatteryReport run_battery(const std::string& theorem_id, const std::vector<GeneratorConfig>& cfgs,
                          std::uint64_t seed = 0);

BatteryReport run_battery_serial(const std::string& theorem_id, const std::vector<GeneratorConfig>& cfgs,
                                 std::uint64_t seed = 0);

nlohmann::ordered_json to_json(const BatteryReport& report, bool include_elapsed = true);

}  // namespace epkit::battery
