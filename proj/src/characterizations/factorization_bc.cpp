// Batteries for EP elements a = b·c with b injective and c surjective.
//
// Matrices are read rectangularly: b is n×r, c is r×n, and every `e` is the
// identity of whatever shape the expression demands (e_n or e_r).

#include "detail.hpp"

namespace epkit::characterizations {

using detail::Attempt;
using detail::attempt;
using detail::both;
using detail::decide;
using detail::fact;
using detail::Property;
using detail::solvable;
using detail::unique_solution;

namespace {

/// Products reused across batteries.
struct Terms {
    const EPInstance& in;
    MatrixQ p;     // a a†
    MatrixQ q;     // a† a
    MatrixQ bbd;   // b b†
    MatrixQ cdc;   // c† c
    MatrixQ u;     // c b
    MatrixQ z;     // b† c†

    explicit Terms(const EPInstance& inst)
        : in(inst),
          p(inst.a * inst.a_dagger),
          q(inst.a_dagger * inst.a),
          bbd(inst.b * inst.b_dagger),
          cdc(inst.c_dagger * inst.c),
          u(inst.c * inst.b),
          z(inst.b_dagger * inst.c_dagger) {}
};

/// The six product-vanishing conditions shared by the operator and algebra forms.
struct Vanishing {
    bool cdc_b;      // (e − c†c) b = 0
    bool c_bbd;      // c (e − bb†) = 0
    bool bd_cdc;     // b† (e − c†c) = 0
    bool bbd_cd;     // (e − bb†) c† = 0
    bool bd_cdc_b;   // b† (e − c†c) b = 0
    bool c_bbd_cd;   // c (e − bb†) c† = 0

    explicit Vanishing(const Terms& t) {
        const MatrixQ not_cdc = detail::complement(t.cdc);
        const MatrixQ not_bbd = detail::complement(t.bbd);
        const auto& in = t.in;
        cdc_b = (not_cdc * in.b).is_zero();
        c_bbd = (in.c * not_bbd).is_zero();
        bd_cdc = (in.b_dagger * not_cdc).is_zero();
        bbd_cd = (not_bbd * in.c_dagger).is_zero();
        bd_cdc_b = (in.b_dagger * not_cdc * in.b).is_zero();
        c_bbd_cd = (in.c * not_bbd * in.c_dagger).is_zero();
    }
};

void push_vanishing(Battery& out, const std::string& thm, const std::string& prefix,
                    const std::vector<std::string>& labels, const Vanishing& v) {
    out.push_back(fact(thm, prefix + labels[0], v.cdc_b && v.c_bbd));
    out.push_back(fact(thm, prefix + labels[1], v.bd_cdc && v.c_bbd));
    out.push_back(fact(thm, prefix + labels[2], v.cdc_b && v.bbd_cd));
    out.push_back(fact(thm, prefix + labels[3], v.bd_cdc && v.bbd_cd));
    out.push_back(fact(thm, prefix + labels[4], v.c_bbd && v.bd_cdc_b));
    out.push_back(fact(thm, prefix + labels[5], v.bd_cdc && v.c_bbd_cd));
}

}  // namespace

Battery thm32_battery(const EPInstance& inst) {
    const Terms t(inst);
    const std::string thm = "3.2";
    Battery out;
    out.push_back(fact(thm, "3.2.i", t.p == t.q));
    out.push_back(fact(thm, "3.2.ii", t.bbd == t.cdc));
    out.push_back(fact(thm, "3.2.iii", subspace_equal(kernel(inst.b_dagger), kernel(inst.c))));
    out.push_back(fact(thm, "3.2.iv", subspace_equal(range(inst.b), range(inst.c_dagger))));
    return out;
}

Battery thm34_battery(const EPInstance& inst) {
    const Terms t(inst);
    Battery out;
    push_vanishing(out, "3.4", "3.4.", {"i", "ii", "iii", "iv", "v", "vi"}, Vanishing(t));
    return out;
}

Battery thm35_battery(const EPInstance& inst) {
    const Terms t(inst);
    const std::string thm = "3.5";
    const MatrixQ& b = inst.b;
    const MatrixQ& c = inst.c;
    const MatrixQ& bd = inst.b_dagger;
    const MatrixQ& cd = inst.c_dagger;
    const MatrixQ& er = inst.e_r;
    const MatrixQ& U = t.u;
    const MatrixQ& Z = t.z;
    const bool uz_inverse = U * Z == er && Z * U == er;

    Battery out;
    out.push_back(fact(thm, "3.5.i", t.p == t.q));
    out.push_back(decide(thm, "3.5.ii",
                         attempt([&] { return Attempt{{{"U", U}, {"Z", Z}}, uz_inverse && c == U * bd && b == cd * U}; }),
                         unique_solution(bd, c, Side::left, Property::invertible, "U")));
    out.push_back(decide(thm, "3.5.iii",
                         attempt([&] { return Attempt{{{"U1", U}}, has_full_column_rank(U) && c == U * bd}; }),
                         unique_solution(bd, c, Side::left, Property::injective, "U1")));
    out.push_back(decide(thm, "3.5.iv",
                         attempt([&] { return Attempt{{{"U2", U}, {"U3", Z}}, c == U * bd && bd == Z * c}; }),
                         both(solvable(bd, c, Side::left, "U2"), solvable(c, bd, Side::left, "U3"))));
    out.push_back(decide(thm, "3.5.v",
                         attempt([&] { return Attempt{{{"W", U}, {"W^-1", Z}}, uz_inverse && b == cd * U}; }),
                         unique_solution(cd, b, Side::right, Property::invertible, "W")));
    out.push_back(decide(thm, "3.5.vi",
                         attempt([&] { return Attempt{{{"W1", U}}, has_full_row_rank(U) && b == cd * U}; }),
                         unique_solution(cd, b, Side::right, Property::surjective, "W1")));
    out.push_back(decide(thm, "3.5.vii",
                         attempt([&] { return Attempt{{{"W2", U}, {"W3", Z}}, b == cd * U && cd == b * Z}; }),
                         both(solvable(cd, b, Side::right, "W2"), solvable(b, cd, Side::right, "W3"))));
    out.push_back(decide(thm, "3.5.viii",
                         attempt([&] { return Attempt{{{"H1", U}, {"H2", U}}, b == cd * U && c == U * bd}; }),
                         both(solvable(bd, c, Side::left, "H1"), solvable(cd, b, Side::right, "H2"))));
    out.push_back(decide(thm, "3.5.ix",
                         attempt([&] { return Attempt{{{"K1", Z}, {"K2", Z}}, cd == b * Z && bd == Z * c}; }),
                         both(solvable(c, bd, Side::left, "K1"), solvable(b, cd, Side::right, "K2"))));
    out.push_back(decide(thm, "3.5.x",
                         attempt([&] { return Attempt{{{"S1", Z}}, has_full_column_rank(Z) && bd == Z * c}; }),
                         unique_solution(c, bd, Side::left, Property::injective, "S1")));
    out.push_back(decide(thm, "3.5.xi",
                         attempt([&] { return Attempt{{{"S2", Z}}, has_full_row_rank(Z) && cd == b * Z}; }),
                         unique_solution(b, cd, Side::right, Property::surjective, "S2")));
    return out;
}

Battery thm37_battery(const EPInstance& inst) {
    const Terms t(inst);
    const std::string thm = "3.7";
    const MatrixQ& a = inst.a;
    const MatrixQ& ad = inst.a_dagger;
    const MatrixQ& b = inst.b;
    const MatrixQ& c = inst.c;
    const MatrixQ& bd = inst.b_dagger;
    const MatrixQ& cd = inst.c_dagger;
    // Proof witness: x = u = c b, with inverse b† c†.
    const MatrixQ& x = t.u;
    const MatrixQ& xi = t.z;

    Battery out;
    out.push_back(fact(thm, "3.7.i", t.p == t.q));
    out.push_back(fact(thm, "3.7.ii", t.bbd == t.cdc));
    out.push_back(fact(thm, "3.7.iii", subspace_equal(kernel(bd), kernel(c))));
    out.push_back(fact(thm, "3.7.iv", subspace_equal(range(b), range(cd))));
    out.push_back(fact(thm, "3.7.v", subspace_equal(left_kernel(b), left_kernel(cd))));
    out.push_back(fact(thm, "3.7.vi", subspace_equal(row_space(c), row_space(bd))));
    push_vanishing(out, thm, "3.7.", {"vii", "viii", "ix", "x", "xi", "xii"}, Vanishing(t));

    out.push_back(decide(thm, "3.7.xiii",
                         attempt([&] { return Attempt{{{"x", x}}, is_invertible(x) && c == x * bd}; }),
                         unique_solution(bd, c, Side::left, Property::invertible, "x")));
    out.push_back(decide(thm, "3.7.xiv",
                         attempt([&] { return Attempt{{{"y", x}}, has_full_column_rank(x) && c == x * bd}; }),
                         unique_solution(bd, c, Side::left, Property::injective, "y")));
    out.push_back(decide(thm, "3.7.xv",
                         attempt([&] { return Attempt{{{"z1", x}, {"z2", xi}}, c == x * bd && bd == xi * c}; }),
                         both(solvable(bd, c, Side::left, "z1"), solvable(c, bd, Side::left, "z2"))));
    out.push_back(decide(thm, "3.7.xvi",
                         attempt([&] { return Attempt{{{"u", x}}, is_invertible(x) && b == cd * x}; }),
                         unique_solution(cd, b, Side::right, Property::invertible, "u")));
    out.push_back(decide(thm, "3.7.xvii",
                         attempt([&] { return Attempt{{{"v", x}}, has_full_row_rank(x) && b == cd * x}; }),
                         unique_solution(cd, b, Side::right, Property::surjective, "v")));
    out.push_back(decide(thm, "3.7.xviii",
                         attempt([&] { return Attempt{{{"w1", x}, {"w2", xi}}, b == cd * x && cd == b * xi}; }),
                         both(solvable(cd, b, Side::right, "w1"), solvable(b, cd, Side::right, "w2"))));
    out.push_back(decide(thm, "3.7.xix",
                         attempt([&] { return Attempt{{{"h1", x}, {"h2", x}}, b == cd * x && c == x * bd}; }),
                         both(solvable(bd, c, Side::left, "h1"), solvable(cd, b, Side::right, "h2"))));
    out.push_back(decide(thm, "3.7.xx",
                         attempt([&] { return Attempt{{{"k1", xi}, {"k2", xi}}, cd == b * xi && bd == xi * c}; }),
                         both(solvable(c, bd, Side::left, "k1"), solvable(b, cd, Side::right, "k2"))));
    out.push_back(decide(thm, "3.7.xxi",
                         attempt([&] { return Attempt{{{"s1", xi}}, has_full_column_rank(xi) && bd == xi * c}; }),
                         unique_solution(c, bd, Side::left, Property::injective, "s1")));
    out.push_back(decide(thm, "3.7.xxii",
                         attempt([&] { return Attempt{{{"s2", xi}}, has_full_row_rank(xi) && cd == b * xi}; }),
                         unique_solution(b, cd, Side::right, Property::surjective, "s2")));
    // Coset equalities: bA^{-1} = c†A^{-1} iff b = c†u for one invertible u,
    // and A^{-1}c = A^{-1}b† iff c = x b† for one invertible x.
    out.push_back(decide(thm, "3.7.xxiii",
                         attempt([&] { return Attempt{{{"u", x}}, is_invertible(x) && b == cd * x}; }),
                         unique_solution(cd, b, Side::right, Property::invertible, "u")));
    out.push_back(decide(thm, "3.7.xxiv-a",
                         attempt([&] { return Attempt{{{"x", x}}, is_invertible(x) && c == x * bd}; }),
                         unique_solution(bd, c, Side::left, Property::invertible, "x")));
    out.push_back(decide(thm, "3.7.xxiv-b",
                         attempt([&] {
                             MatrixQ left = c * a;   // a = c† (c a)
                             MatrixQ right = a * b;  // a = (a b) b†
                             const bool ok = a == cd * left && a == right * bd;
                             return Attempt{{{"m", std::move(left)}, {"n", std::move(right)}}, ok};
                         }),
                         both(solvable(cd, a, Side::right, "m"), solvable(bd, a, Side::left, "n"))));
    out.push_back(decide(thm, "3.7.xxvi",
                         attempt([&] {
                             MatrixQ left = bd * ad;   // a† = b (b† a†)
                             MatrixQ right = ad * cd;  // a† = (a† c†) c
                             const bool ok = ad == b * left && ad == right * c;
                             return Attempt{{{"m", std::move(left)}, {"n", std::move(right)}}, ok};
                         }),
                         both(solvable(b, ad, Side::right, "m"), solvable(c, ad, Side::left, "n"))));
    return out;
}

Battery thm39_battery(const EPInstance& inst) {
    const Terms t(inst);
    const std::string thm = "3.9";
    const MatrixQ& a = inst.a;
    const MatrixQ& b = inst.b;
    const MatrixQ& c = inst.c;
    const MatrixQ& cd = inst.c_dagger;
    const MatrixQ bs = b.adjoint();
    const MatrixQ cs = c.adjoint();
    // z = (c†)* c† u with u = c b, so that b = c* z when a is EP.
    const MatrixQ z = cd.adjoint() * cd * t.u;
    const MatrixQ zs = z.adjoint();

    Battery out;
    out.push_back(fact(thm, "3.9.i", t.p == t.q));
    out.push_back(decide(thm, "3.9.ii",
                         attempt([&] {
                             MatrixQ left = inverse(c * cs) * c * a;   // c† = c*(cc*)^{-1}
                             MatrixQ right = a * b * inverse(bs * b);  // b† = (b*b)^{-1} b*
                             const bool ok = a == cs * left && a == right * bs;
                             return Attempt{{{"m", std::move(left)}, {"n", std::move(right)}}, ok};
                         }),
                         both(solvable(cs, a, Side::right, "m"), solvable(bs, a, Side::left, "n"))));
    out.push_back(fact(thm, "3.9.iii", subspace_equal(kernel(bs), kernel(c))));
    out.push_back(fact(thm, "3.9.iv", subspace_equal(range(b), range(cs))));
    out.push_back(fact(thm, "3.9.v", subspace_equal(left_kernel(b), left_kernel(cs))));
    out.push_back(fact(thm, "3.9.vi", subspace_equal(row_space(c), row_space(bs))));
    // Coset equalities reduce to single invertible witnesses.
    out.push_back(decide(thm, "3.9.vii",
                         attempt([&] { return Attempt{{{"z", z}}, is_invertible(z) && b == cs * z}; }),
                         unique_solution(cs, b, Side::right, Property::invertible, "z")));
    out.push_back(decide(thm, "3.9.viii",
                         attempt([&] {
                             MatrixQ x = inverse(zs);
                             const bool ok = c == x * bs;
                             return Attempt{{{"x", std::move(x)}}, ok};
                         }),
                         unique_solution(bs, c, Side::left, Property::invertible, "x")));
    out.push_back(decide(thm, "3.9.ix",
                         attempt([&] {
                             MatrixQ x = inverse(zs);
                             const bool ok = c == x * bs;
                             return Attempt{{{"x", std::move(x)}}, ok};
                         }),
                         unique_solution(bs, c, Side::left, Property::invertible, "x")));
    out.push_back(decide(thm, "3.9.x",
                         attempt([&] {
                             MatrixQ y = inverse(zs);
                             const bool ok = has_full_column_rank(y) && c == y * bs;
                             return Attempt{{{"y", std::move(y)}}, ok};
                         }),
                         unique_solution(bs, c, Side::left, Property::injective, "y")));
    out.push_back(decide(thm, "3.9.xi",
                         attempt([&] {
                             MatrixQ z1 = inverse(zs);
                             const bool ok = c == z1 * bs && bs == zs * c;
                             return Attempt{{{"z1", std::move(z1)}, {"z2", zs}}, ok};
                         }),
                         both(solvable(bs, c, Side::left, "z1"), solvable(c, bs, Side::left, "z2"))));
    out.push_back(decide(thm, "3.9.xii",
                         attempt([&] { return Attempt{{{"v", z}}, has_full_row_rank(z) && b == cs * z}; }),
                         unique_solution(cs, b, Side::right, Property::surjective, "v")));
    out.push_back(decide(thm, "3.9.xiii",
                         attempt([&] { return Attempt{{{"s1", zs}}, has_full_column_rank(zs) && bs == zs * c}; }),
                         unique_solution(c, bs, Side::left, Property::injective, "s1")));
    out.push_back(decide(thm, "3.9.xiv",
                         attempt([&] {
                             MatrixQ s2 = inverse(z);
                             const bool ok = cs == b * s2;
                             return Attempt{{{"s2", std::move(s2)}}, ok};
                         }),
                         unique_solution(b, cs, Side::right, Property::surjective, "s2")));
    return out;
}

Battery thm310_battery(const EPInstance& inst) {
    const Terms t(inst);
    const std::string thm = "3.10";
    const MatrixQ& a = inst.a;
    const MatrixQ& ad = inst.a_dagger;
    const MatrixQ& b = inst.b;
    const MatrixQ& c = inst.c;
    const MatrixQ& bd = inst.b_dagger;
    const MatrixQ& cd = inst.c_dagger;
    const MatrixQ as = a.adjoint();
    const MatrixQ bs = b.adjoint();
    const MatrixQ cs = c.adjoint();
    const MatrixQ asa = as * a;
    const MatrixQ aas = a * as;

    // a*a = c*b* b c b b†
    const bool id1 = asa == cs * bs * b * c * b * bd;
    // a*a = c*b* c†c b c
    const bool id2 = asa == cs * bs * cd * c * b * c;
    // aa* = b c c*b* c* (c*)†
    const bool id3 = aas == b * c * cs * bs * cs * pinv(cs);
    // aa* = b c b b† c*b*
    const bool id4 = aas == b * c * b * bd * cs * bs;
    // aa* = c†b† b c b c c*b*
    const bool id5 = aas == cd * bd * b * c * b * c * cs * bs;
    // a*a = (bc)(c†b†)(c*b*)(bc)
    const bool id6 = asa == a * ad * as * a;

    Battery out;
    out.push_back(fact(thm, "3.10.i", t.p == t.q));
    out.push_back(fact(thm, "3.10.ii", id1 && id2));
    out.push_back(fact(thm, "3.10.iii", id3 && id4));
    out.push_back(fact(thm, "3.10.iv", id1 && id3));
    out.push_back(fact(thm, "3.10.v", id5 && id1));
    out.push_back(fact(thm, "3.10.vi", id6 && id3));
    out.push_back(fact(thm, "3.10.vii", id5 && id6));
    return out;
}

}  // namespace epkit::characterizations
