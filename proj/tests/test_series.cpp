#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vtxcalc/series.hpp"
#include "vtxcalc/errors.hpp"
#include <random>

using namespace vtx;

namespace {

Series::Atom atom(std::initializer_list<int> mono, long c = 1, int zexp = 0) {
    Series::Atom a;
    a.coef = rat(c);
    a.zexp = zexp;
    a.mono = Expo(mono);
    return a;
}

// delta(x) = sum_n x^n
Series plain_delta(const VarSet& vs) {
    return Series::delta_simple(vs, atom({0}), atom({1}), atom({0}));
}

// x^-1 delta(y/x) = sum_n y^n x^-n-1 over {x, y}
Series diag_delta(const VarSet& vs) {
    return Series::delta_simple(vs, atom({-1, 0}), atom({0, 1}), atom({1, 0}));
}

} // namespace

TEST_CASE("delta coefficient extraction") {
    VarSet x{"x"};
    Series d = plain_delta(x);
    CHECK(d.coeff(Expo{5}) == ParamScalar::one());
    CHECK(d.coeff(Expo{-7}) == ParamScalar::one());

    VarSet xy{"x", "y"};
    Series dd = diag_delta(xy);
    CHECK(dd.coeff(Expo{-2, 1}) == ParamScalar::one());
    CHECK(dd.coeff(Expo{-2, 2}) == ParamScalar::zero());

    Series zero = Series::zero(VarSet{"t"});
    CHECK(zero.coeff(Expo{3}) == ParamScalar::zero());
}

TEST_CASE("two-term delta relation") {
    VarSet vs{"x0", "x1", "x2"};
    // x2^-1 delta((x1 - x0)/x2)
    Series lhs = Series::delta_kernel(vs, atom({0, 0, -1}), atom({0, 1, 0}),
                                      atom({1, 0, 0}, -1), atom({0, 0, 1}));
    // x1^-1 delta((x2 + x0)/x1)
    Series rhs = Series::delta_kernel(vs, atom({0, -1, 0}), atom({0, 0, 1}),
                                      atom({1, 0, 0}), atom({0, 1, 0}));
    auto res = check_identity(lhs, rhs, Window::cube(3, 5));
    CHECK(res.pass);
    CHECK(res.points_checked == 11 * 11 * 11);
}

TEST_CASE("three-term delta relation") {
    VarSet vs{"x0", "x1", "x2"};
    Series a = Series::delta_kernel(vs, atom({-1, 0, 0}), atom({0, 1, 0}),
                                    atom({0, 0, 1}, -1), atom({1, 0, 0}));
    Series b = Series::delta_kernel(vs, atom({-1, 0, 0}), atom({0, 0, 1}),
                                    atom({0, 1, 0}, -1), atom({1, 0, 0}, -1));
    Series c = Series::delta_kernel(vs, atom({0, 0, -1}), atom({0, 1, 0}),
                                    atom({1, 0, 0}, -1), atom({0, 0, 1}));
    auto res = check_identity(a - b, c, Window::cube(3, 4));
    CHECK(res.pass);
}

TEST_CASE("kernel expansion coefficients") {
    VarSet vs{"x0", "x1", "x2"};
    // x0^-1 delta((x1 - x2)/x0), expanded in nonnegative powers of x2
    Series k = Series::delta_kernel(vs, atom({-1, 0, 0}), atom({0, 1, 0}),
                                    atom({0, 0, 1}, -1), atom({1, 0, 0}));
    CHECK(k.coeff(Expo{-2, 0, 1}) == ParamScalar(rat(-1)));
    CHECK(k.coeff(Expo{-1, 0, 0}) == ParamScalar::one());
    // mixed term n=2, k=1: coeff of x0^-3 x1^1 x2^1 is C(2,1)*(-1) = -2
    CHECK(k.coeff(Expo{-3, 1, 1}) == ParamScalar(rat(-2)));
}

TEST_CASE("ill-defined products are rejected") {
    VarSet xy{"x", "y"};
    // delta(y/x) * delta(y/x) would need infinite coefficient sums
    Series d = Series::delta_simple(xy, atom({0, 0}), atom({0, 1}), atom({1, 0}));
    CHECK_THROWS_AS(d * d, IllDefinedProduct);
}

TEST_CASE("delta times polynomial shifts the diagonal") {
    VarSet xy{"x", "y"};
    Series dd = diag_delta(xy);
    Series p = Series::monomial(xy, Expo{0, 2}, ParamScalar::one()); // y^2
    Series prod = dd * p;
    // x^-1 delta(y/x) y^2 = sum_n y^(n+2) x^(-n-1)
    CHECK(prod.coeff(Expo{-3, 4}) == ParamScalar::one());
    CHECK(prod.coeff(Expo{-3, 2}) == ParamScalar::zero());
    CHECK(prod.coeff(Expo{-1, 2}) == ParamScalar::one());

    // identity factor: 1 * s = s on a window
    Series one = Series::constant(xy, ParamScalar::one());
    CHECK(check_identity(one * dd, dd, Window::cube(2, 4)).pass);
}

TEST_CASE("fundamental substitution property") {
    VarSet xy{"x", "y"};
    Series dd = diag_delta(xy);
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> cd(-5, 5);
    // x^-1 delta(y/x) p(x) = x^-1 delta(y/x) p(y), and Res_x picks out p(y)
    std::map<Expo, ParamScalar> px, py;
    for (int e = -6; e <= 6; ++e) {
        int c = cd(rng);
        if (c == 0) continue;
        px[Expo{e, 0}] = ParamScalar(rat(c));
        py[Expo{e}] = ParamScalar(rat(c));
    }
    Series p = Series::finite(xy, px);
    Series res = (dd * p).residue("x");
    Series expect = Series::finite(VarSet{"y"}, py);
    CHECK(check_identity(res, expect, Window::cube(1, 10)).pass);
}

TEST_CASE("residues") {
    VarSet xy{"x", "y"};
    // Res_x x^-1 delta(y/x) = 1
    Series r = diag_delta(xy).residue("x");
    CHECK(r.coeff(Expo{0}) == ParamScalar::one());
    CHECK(r.coeff(Expo{1}) == ParamScalar::zero());
    CHECK(r.coeff(Expo{-2}) == ParamScalar::zero());

    // Res_x of a polynomial in x is 0
    Series p = Series::finite(xy, {{Expo{2, 1}, ParamScalar::one()},
                                   {Expo{0, 3}, ParamScalar(rat(5))}});
    Series rp = p.residue("x");
    for (int e = -4; e <= 4; ++e) CHECK(rp.coeff(Expo{e}) == ParamScalar::zero());

    // Res_x1 x0^-1 delta((z - x1)/(-x0)) = 0: only nonnegative x1 powers occur
    VarSet v01{"x0", "x1"};
    Series k = Series::delta_kernel(v01, atom({-1, 0}), Series::Atom{rat(1), 1, Expo{0, 0}},
                                    atom({0, 1}, -1), atom({1, 0}, -1));
    Series rk = k.residue("x1");
    for (int e = -6; e <= 6; ++e) CHECK(rk.coeff(Expo{e}) == ParamScalar::zero());
}

TEST_CASE("derivative") {
    VarSet x{"x"};
    Series s = Series::finite(x, {{Expo{3}, ParamScalar(rat(2))}, {Expo{-1}, ParamScalar::one()}});
    Series ds = s.derivative("x");
    CHECK(ds.coeff(Expo{2}) == ParamScalar(rat(6)));
    CHECK(ds.coeff(Expo{-2}) == ParamScalar(rat(-1)));
    CHECK(ds.coeff(Expo{0}) == ParamScalar::zero());
}

TEST_CASE("product commutes and associates when admissible") {
    VarSet v{"x", "y", "t"};
    Series A = diag_delta(VarSet{"x", "y"}).extended(v);
    Series B = Series::finite(v, {{Expo{0, 0, 2}, ParamScalar::one()},
                                  {Expo{0, 0, -1}, ParamScalar(rat(2))}});
    Series C = Series::binomial_ray(v, Series::Atom{rat(1), -1, Expo{0, 0, 0}}, rat(-1),
                                    rat(-1), -1, Expo{0, 0, 1});
    Window w = Window::cube(3, 4);
    CHECK(check_identity(A * B, B * A, w).pass);
    CHECK(check_identity((A * B) * C, A * (B * C), w).pass);
    CHECK(check_identity(A * C, C * A, w).pass);
}

TEST_CASE("support certificates hold outside the cones") {
    VarSet vs{"x0", "x1", "x2"};
    Series k = Series::delta_kernel(vs, atom({0, 0, -1}), atom({0, 1, 0}),
                                    atom({1, 0, 0}, -1), atom({0, 0, 1}));
    Series d = plain_delta(VarSet{"x0"}).extended(vs);
    Series prod = k * Series::monomial(vs, Expo{1, 1, 0}, ParamScalar(rat(3)));

    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> pd(-8, 8);
    int outside = 0;
    for (int i = 0; i < 600 && outside < 200; ++i) {
        Expo e{pd(rng), pd(rng), pd(rng)};
        for (const Series* s : {&k, &d, &prod}) {
            if (!support_contains(s->support(), e)) {
                ++outside;
                CHECK(s->coeff(e) == ParamScalar::zero());
            }
        }
    }
    CHECK(outside >= 200);
}

TEST_CASE("five-variable delta identity") {
    // z^-1 d((x1^-1 - y1)/z) z^-1 d((x2^-1 - y2)/z) y2^-1 d((y1 - x0)/y2)
    //   = x2 d((x1^-1 - x0)/x2^-1) z^-1 d((x2^-1 - y2)/z) y1^-1 d((y2 + x0)/y1)
    VarSet vs{"x0", "x1", "x2", "y1", "y2"};
    auto A = [&](std::initializer_list<int> m, long c = 1, int ze = 0) {
        Series::Atom a;
        a.coef = rat(c);
        a.zexp = ze;
        a.mono = Expo(m);
        return a;
    };
    Series k1 = Series::delta_kernel(vs, A({0, 0, 0, 0, 0}, 1, -1), A({0, -1, 0, 0, 0}),
                                     A({0, 0, 0, 1, 0}, -1), A({0, 0, 0, 0, 0}, 1, 1));
    Series k2 = Series::delta_kernel(vs, A({0, 0, 0, 0, 0}, 1, -1), A({0, 0, -1, 0, 0}),
                                     A({0, 0, 0, 0, 1}, -1), A({0, 0, 0, 0, 0}, 1, 1));
    Series k3 = Series::delta_kernel(vs, A({0, 0, 0, 0, -1}), A({0, 0, 0, 1, 0}),
                                     A({1, 0, 0, 0, 0}, -1), A({0, 0, 0, 0, 1}));
    Series m1 = Series::delta_kernel(vs, A({0, 0, 1, 0, 0}), A({0, -1, 0, 0, 0}),
                                     A({1, 0, 0, 0, 0}, -1), A({0, 0, -1, 0, 0}));
    Series m2 = k2;
    Series m3 = Series::delta_kernel(vs, A({0, 0, 0, -1, 0}), A({0, 0, 0, 0, 1}),
                                     A({1, 0, 0, 0, 0}), A({0, 0, 0, 1, 0}));
    Series lhs = (k1 * k2) * k3;
    Series rhs = (m1 * m2) * m3;
    auto res = check_identity(lhs, rhs, Window::cube(5, 2));
    CHECK(res.pass);
}
