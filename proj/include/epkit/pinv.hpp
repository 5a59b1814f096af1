#pragma once

#include <string>
#include <vector>

#include "epkit/linalg.hpp"

namespace epkit {

/// Moore-Penrose inverse with * = conjugate transpose, computed from the
/// full-rank factorization A = B·C as C*(C C*)^{-1}(B* B)^{-1}B*.
MatrixQ pinv(const MatrixQ& a);

/// Exact residuals of the four Penrose conditions for a candidate x.
struct PenroseCertificate {
    MatrixQ cond1_residual;  // a·x·a − a
    MatrixQ cond2_residual;  // x·a·x − x
    bool ax_hermitian = false;
    bool xa_hermitian = false;

    [[nodiscard]] bool cond1() const { return cond1_residual.is_zero(); }
    [[nodiscard]] bool cond2() const { return cond2_residual.is_zero(); }
    [[nodiscard]] bool valid() const { return cond1() && cond2() && ax_hermitian && xa_hermitian; }
};

/// Throws ShapeError unless x is m×n for an n×m a.
PenroseCertificate penrose_certificate(const MatrixQ& a, const MatrixQ& x);

/// a together with a†, p = a·a† and q = a†·a.
struct MPPair {
    MatrixQ a;
    MatrixQ a_dagger;
    MatrixQ p;
    MatrixQ q;
};

MPPair make_mp_pair(const MatrixQ& a);

/// a·a† = a†·a. Throws ShapeError for non-square input.
bool is_ep(const MatrixQ& a);
bool is_ep(const MPPair& pair);

/// One named identity and whether it held exactly.
struct IdentityCheck {
    std::string name;
    bool holds = false;
};

inline bool all_hold(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

/// Invertible elements v, w with a† = a*·v and a† = w·a*.
struct PolarWitnesses {
    MatrixQ v;  // e − p + (a†)* a†
    MatrixQ w;  // e − q + a† (a†)*
    std::vector<IdentityCheck> checks;
};

/// Builds v and w and verifies invertibility, a† = a* v, a a* v = v a a* = p,
/// a† = w a*, w a* a = a* a w = q. Throws ShapeError for non-square input.
PolarWitnesses lemma38_witnesses(const MPPair& pair);

/// Verifies the factor identities for a = b·c:
///   b†(b†)* invertible with inverse b* b,
///   (c†)* c† invertible with inverse c c*,
///   v b = (b†)*(c†)* c† and c w = b†(b†)*(c†)*.
/// Throws std::invalid_argument if f does not factor pair.a.
std::vector<IdentityCheck> lemma38_factor_witnesses(const FullRankFactorization& f, const MPPair& pair);

}  // namespace epkit
