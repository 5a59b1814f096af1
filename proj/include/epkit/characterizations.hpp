#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epkit/banach.hpp"
#include "epkit/linalg.hpp"
#include "epkit/pinv.hpp"

namespace epkit::characterizations {

/// a = b·c with b n×r of full column rank and c r×n of full row rank, plus
/// the Moore-Penrose inverses of all three. Identities e_n, e_r are carried
/// explicitly so zero-width factors need no special casing.
struct EPInstance {
    MatrixQ a;
    MatrixQ b;
    MatrixQ c;
    MatrixQ a_dagger;
    MatrixQ b_dagger;
    MatrixQ c_dagger;
    MatrixQ e_n;
    MatrixQ e_r;
};

enum class Truth { yes, no, inconclusive };
enum class Route { constructive, criterion };

std::string_view to_string(Truth t);
std::string_view to_string(Route r);

struct NamedMatrix {
    std::string name;
    MatrixQ value;
};

/// One statement of one theorem evaluated on one instance.
///
/// A `yes` carrying a witness means the witness identities re-verified
/// exactly. `witness_failed` is set when the construction taken from the
/// proof did not verify although the statement holds by its criterion;
/// `routes_disagree` when a verified witness exists but the criterion says no.
struct StatementResult {
    std::string theorem_id;
    std::string statement_id;
    Truth truth = Truth::no;
    Route route = Route::criterion;
    std::vector<NamedMatrix> witness;
    bool witness_failed = false;
    bool routes_disagree = false;
    std::string note;
};

using Battery = std::vector<StatementResult>;

/// Truth values of a battery are uniform, ignoring inconclusive statements.
bool is_uniform(const Battery& results);

Battery thm32_battery(const EPInstance& inst);
Battery thm34_battery(const EPInstance& inst);
Battery thm35_battery(const EPInstance& inst);
Battery thm37_battery(const EPInstance& inst);
Battery thm39_battery(const EPInstance& inst);
Battery thm310_battery(const EPInstance& inst);

/// Throws ShapeError for non-square input.
Battery thm41_battery(const MatrixQ& a);
/// Throws ShapeError for non-square input.
Battery thm42_battery(const MatrixQ& a);

/// T = J (T1 ⊕ 0) J^{-1} with J = [basis R(T) | basis N(T)] and
/// Q1 = J (I ⊕ 0) J^{-1} a self-adjoint idempotent.
struct BlockDecomposition {
    MatrixQ t1;
    MatrixQ j;
    MatrixQ j_inv;
    MatrixQ q1;
};

/// Present exactly when the construction above succeeds and re-verifies,
/// which happens iff T is EP.
std::optional<BlockDecomposition> thm53_decompose(const MatrixQ& t);

Battery thm55_battery(const MatrixQ& t);
Battery thm56_battery(const MatrixQ& a);

struct Prop52Report {
    Battery statements;
    bool j_is_isometry = false;
    MatrixQ t;
    MatrixQ q1;
    MatrixQ q2;
};

/// Builds T = J (T1 ⊕ 0) J^{-1} and evaluates the four equivalent statements
/// in L(ℓ_p^n). Throws ArithmeticError when T1 or J is singular.
Prop52Report prop52_battery(const MatrixQ& t1, const MatrixQ& j, const banach::PNorm& norm,
                            const banach::HermitianCheckOptions& opts = {});

/// J maps unit balls of ℓ_p onto themselves: generalized permutation with
/// unimodular entries for p ∈ {1, ∞}, unitary for p = 2.
bool is_isometry(const MatrixQ& j, const banach::PNorm& norm);

}  // namespace epkit::characterizations
