// Block-operator characterizations: T = J (T1 ⊕ 0) J^{-1} and friends.

#include "detail.hpp"

namespace epkit::characterizations {

using detail::Attempt;
using detail::attempt;
using detail::decide;
using detail::fact;
using detail::from_bool;

namespace {

MatrixQ block_embed(const MatrixQ& top_left, std::size_t n) {
    return MatrixQ::direct_sum(top_left, MatrixQ::zeros(n - top_left.rows(), n - top_left.cols()));
}

bool injective(const MatrixQ& m) { return has_full_column_rank(m); }
bool surjective(const MatrixQ& m) { return has_full_row_rank(m); }

}  // namespace

std::optional<BlockDecomposition> thm53_decompose(const MatrixQ& t) {
    if (!t.is_square()) throw ShapeError("block decomposition needs a square matrix");
    const std::size_t n = t.rows();
    const Subspace ran = range(t);
    const Subspace ker = kernel(t);
    if (ran.dim() + ker.dim() != n) return std::nullopt;
    BlockDecomposition d;
    d.j = MatrixQ::hcat(ran.basis(), ker.basis());
    if (!is_invertible(d.j)) return std::nullopt;
    d.j_inv = inverse(d.j);
    const std::size_t k = ran.dim();
    d.t1 = (d.j_inv * t * d.j).block(0, 0, k, k);
    d.q1 = d.j * block_embed(MatrixQ::identity(k), n) * d.j_inv;
    if (!is_invertible(d.t1)) return std::nullopt;
    if (d.j * block_embed(d.t1, n) * d.j_inv != t) return std::nullopt;
    if (d.q1 * d.q1 != d.q1 || !d.q1.is_self_adjoint()) return std::nullopt;
    return d;
}

Battery thm55_battery(const MatrixQ& t) {
    if (!t.is_square()) throw ShapeError("battery needs a square matrix");
    const std::string thm = "5.5";
    const std::size_t n = t.rows();
    const MPPair m = make_mp_pair(t);
    const MatrixQ& td = m.a_dagger;
    const auto dec = thm53_decompose(t);

    // With T EP, T† = J (T1^{-1} ⊕ 0) J^{-1}, so J and J^{-1} serve as every
    // outer factor and T1, T1^{-1} as the inner blocks.
    struct Blocks {
        MatrixQ j, j_inv, t1, t1_inv;
    };
    auto blocks = [&] {
        if (!dec) throw ArithmeticError("no block decomposition");
        return Blocks{dec->j, dec->j_inv, dec->t1, inverse(dec->t1)};
    };
    auto factors = [&](const MatrixQ& outer, const MatrixQ& inner, const MatrixQ& right) {
        return outer * block_embed(inner, n) * right;
    };

    Battery out;
    out.push_back(fact(thm, "5.5.i", m.p == m.q));
    out.push_back(decide(
        thm, "5.5.ii",
        attempt([&] {
            const Blocks b = blocks();
            // (a): V1 injective, A1 injective, shared S1.
            const bool a_ok = injective(b.j) && injective(b.t1) && t == factors(b.j, b.t1, b.j_inv) &&
                              td == factors(b.j, b.t1_inv, b.j_inv);
            // (b): W2 injective, B2 injective, shared S2.
            const bool b_ok = injective(b.j) && injective(b.t1_inv) && t == factors(b.j, b.t1, b.j_inv) &&
                              td == factors(b.j, b.t1_inv, b.j_inv);
            return Attempt{{{"V1", b.j}, {"A1", b.t1}, {"W1", b.j}, {"B1", b.t1_inv}, {"S1", b.j_inv},
                            {"V2", b.j}, {"A2", b.t1}, {"W2", b.j}, {"B2", b.t1_inv}, {"S2", b.j_inv}},
                           a_ok && b_ok};
        }),
        from_bool(subspace_equal(kernel(t), kernel(td)))));
    out.push_back(decide(
        thm, "5.5.iii",
        attempt([&] {
            const Blocks b = blocks();
            // (a): A3 and S3 surjective, shared V3.
            const bool a_ok = surjective(b.t1) && surjective(b.j_inv) && t == factors(b.j, b.t1, b.j_inv) &&
                              td == factors(b.j, b.t1_inv, b.j_inv);
            // (b): B4 and S6 surjective, shared V4.
            const bool b_ok = surjective(b.t1_inv) && surjective(b.j_inv) && t == factors(b.j, b.t1, b.j_inv) &&
                              td == factors(b.j, b.t1_inv, b.j_inv);
            return Attempt{{{"V3", b.j}, {"A3", b.t1}, {"B3", b.t1_inv}, {"S3", b.j_inv}, {"S4", b.j_inv},
                            {"V4", b.j}, {"A4", b.t1}, {"B4", b.t1_inv}, {"S5", b.j_inv}, {"S6", b.j_inv}},
                           a_ok && b_ok};
        }),
        from_bool(subspace_equal(range(t), range(td)))));
    if (out.back().note.empty()) out.back().note = "clause (a) read with A3 as the inner block";
    return out;
}

Battery thm56_battery(const MatrixQ& a) {
    if (!a.is_square()) throw ShapeError("battery needs a square matrix");
    const std::string thm = "5.6";
    const MPPair m = make_mp_pair(a);
    const MatrixQ& ad = m.a_dagger;
    const MatrixQ e = MatrixQ::identity(a.rows());
    const bool trivial_kernel = kernel(e).dim() == 0;
    const bool trivial_left_kernel = left_kernel(e).dim() == 0;
    const bool full_range = range(e).dim() == a.rows();
    const bool full_row_space = row_space(e).dim() == a.rows();

    Battery out;
    out.push_back(fact(thm, "5.6.i", m.p == m.q));
    out.push_back(decide(thm, "5.6.ii",
                         attempt([&] {
                             const bool ok = a == e * a * e && ad == e * ad * e &&
                                             subspace_equal(kernel(a), kernel(ad)) && trivial_kernel;
                             return Attempt{{{"b1", e}, {"c1", a}, {"d1", ad}, {"f1", e}, {"g1", e}}, ok};
                         }),
                         from_bool(subspace_equal(kernel(a), kernel(ad)))));
    out.push_back(decide(thm, "5.6.iii",
                         attempt([&] {
                             const bool ok = a == e * a * e && ad == e * ad * e &&
                                             subspace_equal(range(a), range(ad)) && full_range;
                             return Attempt{{{"h1", e}, {"k1", a}, {"l1", e}, {"m1", ad}, {"n1", e}}, ok};
                         }),
                         from_bool(subspace_equal(range(a), range(ad)))));
    out.push_back(decide(thm, "5.6.iv",
                         attempt([&] {
                             const bool ok = a == e * a * e && ad == e * ad * e &&
                                             subspace_equal(left_kernel(a), left_kernel(ad)) && trivial_left_kernel;
                             return Attempt{{{"b2", e}, {"c2", a}, {"d2", ad}, {"g2", e}, {"g3", e}}, ok};
                         }),
                         from_bool(subspace_equal(left_kernel(a), left_kernel(ad)))));
    out.push_back(decide(thm, "5.6.v",
                         attempt([&] {
                             const bool ok = a == e * a * e && ad == e * ad * e &&
                                             subspace_equal(row_space(a), row_space(ad)) && full_row_space;
                             return Attempt{{{"h2", e}, {"h3", e}, {"k2", a}, {"l2", e}, {"m2", ad}}, ok};
                         }),
                         from_bool(subspace_equal(row_space(a), row_space(ad)))));
    return out;
}

bool is_isometry(const MatrixQ& j, const banach::PNorm& norm) {
    if (!j.is_square()) return false;
    const std::size_t n = j.rows();
    if (norm.p == banach::PNorm::Kind::two) return j.adjoint() * j == MatrixQ::identity(n);
    std::vector<int> col_hits(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row_hits = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (j(i, k).is_zero()) continue;
            if (j(i, k).norm2() != Rational(1)) return false;
            ++row_hits;
            ++col_hits[k];
        }
        if (row_hits != 1) return false;
    }
    for (int c : col_hits)
        if (c != 1) return false;
    return true;
}

namespace {

StatementResult hermitian_statement(const std::string& thm, const std::string& id, bool exact_part,
                                    const banach::HermitianIdempotentResult& h, const std::string& what) {
    StatementResult r = fact(thm, id, exact_part && h.holds());
    if (exact_part && h.inconclusive() && !h.self_adjoint.has_value()) {
        r.truth = Truth::inconclusive;
        r.note = what + ": hermitian check inconclusive, max deviation " + std::to_string(h.report.max_deviation);
    } else if (!h.cross_check_agrees) {
        r.note = what + ": grid check disagrees with exact self-adjointness";
    }
    return r;
}

}  // namespace

Prop52Report prop52_battery(const MatrixQ& t1, const MatrixQ& j, const banach::PNorm& norm,
                            const banach::HermitianCheckOptions& opts) {
    if (!t1.is_square() || !j.is_square() || t1.rows() > j.rows())
        throw ShapeError("prop 5.2 needs square T1 and J with T1 no larger than J");
    const std::string thm = "5.2";
    const std::size_t n = j.rows();
    const MatrixQ j_inv = inverse(j);
    const MatrixQ t1_inv = inverse(t1);

    Prop52Report rep;
    rep.j_is_isometry = is_isometry(j, norm);
    rep.t = j * block_embed(t1, n) * j_inv;
    const MatrixQ t_prime = j * block_embed(t1_inv, n) * j_inv;
    rep.q1 = j * block_embed(MatrixQ::identity(t1.rows()), n) * j_inv;
    rep.q2 = MatrixQ::identity(n) - rep.q1;

    const MatrixQ tt = rep.t * t_prime;
    const MatrixQ t_t = t_prime * rep.t;
    const bool normalized = rep.t * t_prime * rep.t == rep.t && t_prime * rep.t * t_prime == t_prime;

    // T' is the candidate inverse; (i) asks that T T' and T' T be hermitian
    // in the ℓ_p operator norm.
    const auto h_tt = banach::is_hermitian_idempotent(tt, norm, opts);
    const auto h_t_t = banach::is_hermitian_idempotent(t_t, norm, opts);
    const auto h_q1 = banach::is_hermitian_idempotent(rep.q1, norm, opts);
    const auto h_q2 = banach::is_hermitian_idempotent(rep.q2, norm, opts);

    auto combine = [&](const std::string& id, bool exact_part) {
        StatementResult a = hermitian_statement(thm, id, exact_part, h_tt, "T T'");
        StatementResult b = hermitian_statement(thm, id, exact_part, h_t_t, "T' T");
        if (a.truth == Truth::inconclusive) return a;
        if (b.truth == Truth::inconclusive) return b;
        a.truth = a.truth == Truth::yes && b.truth == Truth::yes ? Truth::yes : Truth::no;
        if (a.note.empty()) a.note = b.note;
        return a;
    };

    rep.statements.push_back(combine("5.2.i", normalized));
    rep.statements.back().witness = {{"T'", t_prime}};
    rep.statements.push_back(combine("5.2.ii", normalized && tt == t_t));
    rep.statements.back().witness = {{"T'", t_prime}};
    rep.statements.push_back(hermitian_statement(thm, "5.2.iii", true, h_q1, "Q1"));
    rep.statements.back().witness = {{"Q1", rep.q1}};
    rep.statements.push_back(hermitian_statement(thm, "5.2.iv", true, h_q2, "Q2"));
    rep.statements.back().witness = {{"Q2", rep.q2}};
    return rep;
}

}  // namespace epkit::characterizations
