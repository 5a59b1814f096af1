// Batteries for EP elements characterized through a† = s·a (and a* = s·a).

#include "detail.hpp"

namespace epkit::characterizations {

using detail::Attempt;
using detail::attempt;
using detail::both;
using detail::decide;
using detail::fact;
using detail::from_bool;
using detail::sandwich_solvable;
using detail::solvable;

namespace {

void require_square(const MatrixQ& a) {
    if (!a.is_square()) throw ShapeError("battery needs a square matrix");
}

bool same_kernel(const MatrixQ& x, const MatrixQ& y) { return subspace_equal(kernel(x), kernel(y)); }
bool same_range(const MatrixQ& x, const MatrixQ& y) { return subspace_equal(range(x), range(y)); }

/// Witnesses from the a† = s a construction, valid when a is EP.
struct DaggerWitnesses {
    MatrixQ s;   // (a†)² + (e − a a†):  a† = s a
    MatrixQ s2;  // a² + (e − a a†):     a = s2 a†
    MatrixQ u;   // (a†)² + (e − a† a):  a† = a u
    MatrixQ u2;  // a² + (e − a† a):     a = a† u2

    explicit DaggerWitnesses(const MPPair& m)
        : s(m.a_dagger * m.a_dagger + detail::complement(m.p)),
          s2(m.a * m.a + detail::complement(m.p)),
          u(m.a_dagger * m.a_dagger + detail::complement(m.q)),
          u2(m.a * m.a + detail::complement(m.q)) {}
};

}  // namespace

Battery thm41_battery(const MatrixQ& a) {
    require_square(a);
    const std::string thm = "4.1";
    const MPPair m = make_mp_pair(a);
    const MatrixQ& ad = m.a_dagger;
    const MatrixQ& p = m.p;
    const MatrixQ& q = m.q;
    const MatrixQ e = MatrixQ::identity(a.rows());
    const DaggerWitnesses w(m);

    // Exact criteria: for square X, Y of equal size,
    //   ∃ invertible s with Y = s X  iff  N(X) = N(Y),
    //   ∃ invertible u with Y = X u  iff  R(X) = R(Y).
    const bool ker_eq = same_kernel(a, ad);
    const bool ran_eq = same_range(a, ad);

    Battery out;
    out.push_back(fact(thm, "4.1.i", p == q));
    out.push_back(decide(thm, "4.1.ii",
                         attempt([&] { return Attempt{{{"s", w.s}}, is_invertible(w.s) && ad == w.s * a}; }),
                         from_bool(ker_eq)));
    out.push_back(decide(thm, "4.1.iii",
                         attempt([&] { return Attempt{{{"s1", w.s}, {"s2", w.s2}}, ad == w.s * a && a == w.s2 * ad}; }),
                         both(solvable(a, ad, Side::left, "s1"), solvable(ad, a, Side::left, "s2"))));
    out.push_back(decide(thm, "4.1.iv",
                         attempt([&] { return Attempt{{{"u", w.u}}, is_invertible(w.u) && ad == a * w.u}; }),
                         from_bool(ran_eq)));
    out.push_back(decide(thm, "4.1.v",
                         attempt([&] { return Attempt{{{"u1", w.u}, {"u2", w.u2}}, ad == a * w.u && a == ad * w.u2}; }),
                         both(solvable(a, ad, Side::right, "u1"), solvable(ad, a, Side::right, "u2"))));
    out.push_back(decide(thm, "4.1.vi",
                         attempt([&] {
                             const bool trivial_left_kernel = left_kernel(w.u).dim() == 0;
                             return Attempt{{{"t", w.u}}, trivial_left_kernel && ad == a * w.u};
                         }),
                         from_bool(ran_eq)));
    out.push_back(decide(thm, "4.1.vii",
                         attempt([&] {
                             const bool left_ideal_full = row_space(w.s).dim() == a.rows();
                             return Attempt{{{"x", w.s}}, left_ideal_full && ad == w.s * a};
                         }),
                         from_bool(ker_eq)));
    // When a is EP, p = q and the identity witnesses every clause below.
    out.push_back(decide(thm, "4.1.viii", attempt([&] { return Attempt{{{"v", e}}, q == e * p}; }),
                         from_bool(same_kernel(q, p))));
    out.push_back(decide(thm, "4.1.ix", attempt([&] { return Attempt{{{"v1", e}}, q == e * p}; }),
                         from_bool(same_kernel(q, p))));
    out.push_back(decide(thm, "4.1.x", attempt([&] { return Attempt{{{"v2", e}, {"v3", e}}, q == p && p == q}; }),
                         both(solvable(p, q, Side::left, "v2"), solvable(q, p, Side::left, "v3"))));
    out.push_back(decide(thm, "4.1.xi", attempt([&] { return Attempt{{{"w", e}}, q == p * e}; }),
                         from_bool(same_range(q, p))));
    out.push_back(decide(thm, "4.1.xii", attempt([&] { return Attempt{{{"w1", e}}, q == p * e}; }),
                         from_bool(same_range(q, p))));
    out.push_back(decide(thm, "4.1.xiii", attempt([&] { return Attempt{{{"w2", e}, {"w3", e}}, q == p && p == q}; }),
                         both(solvable(p, q, Side::right, "w2"), solvable(q, p, Side::right, "w3"))));
    out.push_back(decide(thm, "4.1.xiv",
                         attempt([&] { return Attempt{{{"z1", q}, {"z2", p}}, q == a * q * ad && p == ad * p * a}; }),
                         both(sandwich_solvable(a, ad, q, "z1"), sandwich_solvable(ad, a, p, "z2"))));
    return out;
}

Battery thm42_battery(const MatrixQ& a) {
    require_square(a);
    const std::string thm = "4.2";
    const MPPair m = make_mp_pair(a);
    const MatrixQ& ad = m.a_dagger;
    const MatrixQ& q = m.q;
    const MatrixQ e = MatrixQ::identity(a.rows());
    const MatrixQ as = a.adjoint();
    const MatrixQ asa = as * a;
    const MatrixQ aas = a * as;
    const DaggerWitnesses dw(m);
    const PolarWitnesses polar = lemma38_witnesses(m);  // a† = a* v = w a*

    const bool ker_eq = same_kernel(a, as);
    const bool ran_eq = same_range(a, as);
    const bool gram_ker_eq = same_kernel(asa, aas);
    const bool gram_ran_eq = same_range(asa, aas);

    // Move the a† witnesses over to a* through the invertible polar factors.
    auto s = [&] { return inverse(polar.w) * dw.s; };    // a* = s a
    auto s2 = [&] { return dw.s2 * polar.w; };           // a = s2 a*
    auto u = [&] { return dw.u * inverse(polar.v); };    // a* = a u
    auto u2 = [&] { return polar.v * dw.u2; };           // a = a* u2
    auto vv = [&] { return inverse(polar.w) * polar.v; };  // a*a = vv a a*
    auto ww = [&] { return polar.v * inverse(polar.w); };  // a*a = a a* ww
    const MatrixQ h1 = ad * as + detail::complement(q);

    Battery out;
    out.push_back(fact(thm, "4.2.i", m.p == m.q));
    out.push_back(decide(thm, "4.2.ii",
                         attempt([&] {
                             MatrixQ x = s();
                             const bool ok = is_invertible(x) && as == x * a;
                             return Attempt{{{"s", std::move(x)}}, ok};
                         }),
                         from_bool(ker_eq)));
    out.push_back(decide(thm, "4.2.iii",
                         attempt([&] {
                             MatrixQ x1 = s();
                             MatrixQ x2 = s2();
                             const bool ok = as == x1 * a && a == x2 * as;
                             return Attempt{{{"s1", std::move(x1)}, {"s2", std::move(x2)}}, ok};
                         }),
                         both(solvable(a, as, Side::left, "s1"), solvable(as, a, Side::left, "s2"))));
    out.push_back(decide(thm, "4.2.iv",
                         attempt([&] {
                             MatrixQ x = u();
                             const bool ok = is_invertible(x) && as == a * x;
                             return Attempt{{{"u", std::move(x)}}, ok};
                         }),
                         from_bool(ran_eq)));
    out.push_back(decide(thm, "4.2.v",
                         attempt([&] {
                             MatrixQ x1 = u();
                             MatrixQ x2 = u2();
                             const bool ok = as == a * x1 && a == as * x2;
                             return Attempt{{{"u1", std::move(x1)}, {"u2", std::move(x2)}}, ok};
                         }),
                         both(solvable(a, as, Side::right, "u1"), solvable(as, a, Side::right, "u2"))));
    out.push_back(decide(thm, "4.2.vi",
                         attempt([&] {
                             MatrixQ x = u();
                             const bool ok = left_kernel(x).dim() == 0 && as == a * x;
                             return Attempt{{{"t", std::move(x)}}, ok};
                         }),
                         from_bool(ran_eq)));
    out.push_back(decide(thm, "4.2.vii",
                         attempt([&] {
                             MatrixQ x = s();
                             const bool ok = row_space(x).dim() == a.rows() && as == x * a;
                             return Attempt{{{"x", std::move(x)}}, ok};
                         }),
                         from_bool(ker_eq)));
    out.push_back(decide(thm, "4.2.viii",
                         attempt([&] {
                             MatrixQ x = vv();
                             const bool ok = is_invertible(x) && asa == x * aas;
                             return Attempt{{{"v", std::move(x)}}, ok};
                         }),
                         from_bool(gram_ker_eq)));
    out.push_back(decide(thm, "4.2.ix",
                         attempt([&] {
                             MatrixQ x = vv();
                             const bool ok = has_full_column_rank(x) && asa == x * aas;
                             return Attempt{{{"v1", std::move(x)}}, ok};
                         }),
                         from_bool(gram_ker_eq)));
    out.push_back(decide(thm, "4.2.x",
                         attempt([&] {
                             MatrixQ x2 = vv();
                             MatrixQ x3 = inverse(x2);
                             const bool ok = asa == x2 * aas && aas == x3 * asa;
                             return Attempt{{{"v2", std::move(x2)}, {"v3", std::move(x3)}}, ok};
                         }),
                         both(solvable(aas, asa, Side::left, "v2"), solvable(asa, aas, Side::left, "v3"))));
    out.push_back(decide(thm, "4.2.xi",
                         attempt([&] {
                             MatrixQ x = ww();
                             const bool ok = is_invertible(x) && asa == aas * x;
                             return Attempt{{{"w", std::move(x)}}, ok};
                         }),
                         from_bool(gram_ran_eq)));
    out.push_back(decide(thm, "4.2.xii",
                         attempt([&] {
                             MatrixQ x = ww();
                             const bool ok = has_full_row_rank(x) && asa == aas * x;
                             return Attempt{{{"w1", std::move(x)}}, ok};
                         }),
                         from_bool(gram_ran_eq)));
    out.push_back(decide(thm, "4.2.xiii",
                         attempt([&] {
                             MatrixQ x2 = ww();
                             MatrixQ x3 = inverse(x2);
                             const bool ok = asa == aas * x2 && aas == asa * x3;
                             return Attempt{{{"w2", std::move(x2)}, {"w3", std::move(x3)}}, ok};
                         }),
                         both(solvable(aas, asa, Side::right, "w2"), solvable(asa, aas, Side::right, "w3"))));
    out.push_back(decide(thm, "4.2.xiv",
                         attempt([&] {
                             // a* = a u, a = s2 a*, a = a* u2, a* = s a
                             MatrixQ z1 = u() * s2();
                             MatrixQ z2 = u2() * s();
                             const bool ok = asa == a * z1 * as && aas == as * z2 * a;
                             return Attempt{{{"z1", std::move(z1)}, {"z2", std::move(z2)}}, ok};
                         }),
                         both(sandwich_solvable(a, as, asa, "z1"), sandwich_solvable(as, a, aas, "z2"))));
    out.push_back(decide(thm, "4.2.xv",
                         attempt([&] {
                             const bool ok = is_invertible(h1) && as == a * h1 && asa == a * h1 * h1.adjoint() * as;
                             return Attempt{{{"h1", h1}}, ok};
                         }),
                         from_bool(ker_eq)));
    out.push_back(decide(thm, "4.2.xvi",
                         attempt([&] {
                             const bool ok = has_full_column_rank(h1) && asa == a * h1 * h1.adjoint() * as;
                             return Attempt{{{"h2", h1}}, ok};
                         }),
                         from_bool(ker_eq)));
    out.push_back(decide(thm, "4.2.xvii",
                         attempt([&] {
                             const bool ok = has_full_row_rank(h1) && asa == a * h1 * h1.adjoint() * as;
                             return Attempt{{{"h3", h1}}, ok};
                         }),
                         from_bool(ran_eq)));
    (void)e;
    return out;
}

}  // namespace epkit::characterizations
