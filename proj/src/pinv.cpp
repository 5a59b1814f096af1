#include "epkit/pinv.hpp"

namespace epkit {

MatrixQ pinv(const MatrixQ& a) {
    const auto f = full_rank_factorize(a);
    if (f.rank == 0) return MatrixQ::zeros(a.cols(), a.rows());
    const MatrixQ bs = f.b.adjoint();
    const MatrixQ cs = f.c.adjoint();
    // Both Gram matrices are r×r and nonsingular for full-rank factors.
    const MatrixQ gram_c_inv = inverse(f.c * cs);
    const MatrixQ gram_b_inv = inverse(bs * f.b);
    return cs * gram_c_inv * gram_b_inv * bs;
}

PenroseCertificate penrose_certificate(const MatrixQ& a, const MatrixQ& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows()) {
        throw ShapeError("candidate inverse must have the transposed shape of a");
    }
    const MatrixQ ax = a * x;
    const MatrixQ xa = x * a;
    PenroseCertificate cert;
    cert.cond1_residual = ax * a - a;
    cert.cond2_residual = x * ax - x;
    cert.ax_hermitian = ax.is_self_adjoint();
    cert.xa_hermitian = xa.is_self_adjoint();
    return cert;
}

MPPair make_mp_pair(const MatrixQ& a) {
    MatrixQ ad = pinv(a);
    MatrixQ p = a * ad;
    MatrixQ q = ad * a;
    return {a, std::move(ad), std::move(p), std::move(q)};
}

bool is_ep(const MatrixQ& a) {
    if (!a.is_square()) throw ShapeError("EP is defined for square matrices only");
    return is_ep(make_mp_pair(a));
}

bool is_ep(const MPPair& pair) {
    if (!pair.a.is_square()) throw ShapeError("EP is defined for square matrices only");
    return pair.p == pair.q;
}

PolarWitnesses lemma38_witnesses(const MPPair& pair) {
    const MatrixQ& a = pair.a;
    if (!a.is_square()) throw ShapeError("polar witnesses need a square matrix");
    const MatrixQ e = MatrixQ::identity(a.rows());
    const MatrixQ as = a.adjoint();
    const MatrixQ ads = pair.a_dagger.adjoint();

    PolarWitnesses out;
    out.v = e - pair.p + ads * pair.a_dagger;
    out.w = e - pair.q + pair.a_dagger * ads;

    const MatrixQ aas = a * as;
    const MatrixQ asa = as * a;
    out.checks = {
        {"v invertible", is_invertible(out.v)},
        {"a† = a* v", pair.a_dagger == as * out.v},
        {"a a* v = p", aas * out.v == pair.p},
        {"v a a* = p", out.v * aas == pair.p},
        {"w invertible", is_invertible(out.w)},
        {"a† = w a*", pair.a_dagger == out.w * as},
        {"w a* a = q", out.w * asa == pair.q},
        {"a* a w = q", asa * out.w == pair.q},
    };
    return out;
}

std::vector<IdentityCheck> lemma38_factor_witnesses(const FullRankFactorization& f, const MPPair& pair) {
    if (f.b.cols() != f.c.rows() || f.b * f.c != pair.a) {
        throw std::invalid_argument("factorization does not reproduce the matrix");
    }
    const auto polar = lemma38_witnesses(pair);
    const MatrixQ bd = pinv(f.b);
    const MatrixQ cd = pinv(f.c);
    const MatrixQ bds = bd.adjoint();
    const MatrixQ cds = cd.adjoint();

    const MatrixQ gb = bd * bds;   // b†(b†)*
    const MatrixQ gc = cds * cd;   // (c†)* c†
    const bool gb_inv = is_invertible(gb);
    const bool gc_inv = is_invertible(gc);

    return {
        {"b†(b†)* invertible", gb_inv},
        {"(b†(b†)*)^-1 = b* b", gb_inv && inverse(gb) == f.b.adjoint() * f.b},
        {"(c†)* c† invertible", gc_inv},
        {"((c†)* c†)^-1 = c c*", gc_inv && inverse(gc) == f.c * f.c.adjoint()},
        {"v b = (b†)*(c†)* c†", polar.v * f.b == bds * cds * cd},
        {"c w = b†(b†)*(c†)*", f.c * polar.w == bd * bds * cds},
    };
}

}  // namespace epkit
