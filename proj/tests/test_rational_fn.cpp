#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vtxcalc/rational_fn.hpp"
#include "vtxcalc/errors.hpp"
#include <random>

using namespace vtx;

namespace {

RationalFn over_z_plus_t(int mult = 1) {
    // 1/(z + t)^mult
    return RationalFn({{0, ParamScalar::one()}},
                      {DenFactor{ParamScalar::z(1), ParamScalar::one(), mult}});
}

RationalFn random_rf(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), pick(0, 2), m(1, 2);
    LaurentT num;
    for (int i = 0; i < 3; ++i) {
        int cc = c(rng);
        if (cc) num[e(rng)] += ParamScalar(rat(cc));
    }
    if (num.empty()) num[0] = ParamScalar::one();
    std::vector<DenFactor> den;
    for (int i = 0; i < 2; ++i) {
        switch (pick(rng)) {
        case 0: den.push_back(DenFactor{ParamScalar::z(1), ParamScalar::one(), m(rng)}); break;
        case 1: den.push_back(DenFactor{ParamScalar::z(1), ParamScalar(rat(-1)), m(rng)}); break;
        default: break; // no factor
        }
    }
    return RationalFn(std::move(num), std::move(den));
}

} // namespace

TEST_CASE("iota expansions of 1/(z+t)") {
    Series plus = iota_expand(over_z_plus_t(), IotaDir::Plus);
    CHECK(plus.coeff(Expo{2}) == ParamScalar::z(-3));
    CHECK(plus.coeff(Expo{0}) == ParamScalar::z(-1));
    CHECK(plus.coeff(Expo{1}) == ParamScalar(-2, rat(-1))); // -z^-2
    CHECK(plus.coeff(Expo{-1}) == ParamScalar::zero());

    Series minus = iota_expand(over_z_plus_t(), IotaDir::Minus);
    CHECK(minus.coeff(Expo{-3}) == ParamScalar::z(2));
    CHECK(minus.coeff(Expo{-1}) == ParamScalar::one());
    CHECK(minus.coeff(Expo{0}) == ParamScalar::zero());

    // monomials expand to themselves in either direction
    Series mono = iota_expand(RationalFn::monomial(5), IotaDir::Plus);
    CHECK(mono.coeff(Expo{5}) == ParamScalar::one());
    CHECK(mono.coeff(Expo{4}) == ParamScalar::zero());
}

TEST_CASE("iota difference reproduces a delta kernel") {
    Series diff = iota_expand(over_z_plus_t(), IotaDir::Plus) -
                  iota_expand(over_z_plus_t(), IotaDir::Minus);
    // sum_n (-1)^n z^(-n-1) t^n, i.e. z^-1 delta(-t/z)
    VarSet t{"t"};
    Series expect = Series::delta_simple(
        t, Series::Atom{rat(1), -1, Expo{0}}, Series::Atom{rat(-1), 0, Expo{1}},
        Series::Atom{rat(1), 1, Expo{0}});
    CHECK(check_identity(diff, expect, Window::cube(1, 8)).pass);
}

TEST_CASE("translation") {
    // T_{-z}(1/(z+t)) = 1/t
    RationalFn f = over_z_plus_t();
    RationalFn g = rf_translate(f, -ParamScalar::z(1));
    CHECK(g == RationalFn::monomial(-1));

    // T_{-z}(t) = t - z
    RationalFn h = rf_translate(RationalFn::monomial(1), -ParamScalar::z(1));
    LaurentT want{{0, -ParamScalar::z(1)}, {1, ParamScalar::one()}};
    CHECK(h == RationalFn(want));

    // round trip on random inputs
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 10; ++i) {
        RationalFn r = random_rf(rng);
        CHECK(rf_translate(rf_translate(r, -ParamScalar::z(1)), ParamScalar::z(1)) == r);
    }
}

TEST_CASE("t inversion") {
    // 1/(z - t) |-> t (zt - 1)^-1 = -z^-1 t (z^-1 - t)^-1
    RationalFn f({{0, ParamScalar::one()}},
                 {DenFactor{ParamScalar::z(1), ParamScalar(rat(-1)), 1}});
    RationalFn g = rf_invert_t(f);
    RationalFn expect({{1, ParamScalar(-1, rat(-1))}},
                      {DenFactor{ParamScalar::z(-1), ParamScalar(rat(-1)), 1}});
    CHECK(g == expect);
    CHECK(classify_factor(g.den().at(0)) == FactorType::ZInvMinusT);

    CHECK(rf_invert_t(RationalFn::monomial(4)) == RationalFn::monomial(-4));

    std::mt19937_64 rng(2718);
    for (int i = 0; i < 10; ++i) {
        RationalFn r = random_rf(rng);
        CHECK(rf_invert_t(rf_invert_t(r)) == r);
    }
}

TEST_CASE("degenerate factors fold into monomials") {
    // (0 + 2t)^-3 = (1/8) t^-3, no error
    RationalFn f({{0, ParamScalar::one()}},
                 {DenFactor{ParamScalar::zero(), ParamScalar(rat(2)), 3}});
    CHECK(f.is_laurent());
    CHECK(f == RationalFn::monomial(-3, ParamScalar(rat(1, 8))));
}

TEST_CASE("factor classification") {
    CHECK(classify_factor(DenFactor{ParamScalar::z(1), ParamScalar::one(), 1}) == FactorType::ZPlusT);
    CHECK(classify_factor(DenFactor{ParamScalar::z(1), ParamScalar(rat(-1)), 1}) == FactorType::ZMinusT);
    CHECK(classify_factor(DenFactor{ParamScalar::z(-1), ParamScalar(rat(-1)), 1}) == FactorType::ZInvMinusT);
    CHECK(classify_factor(DenFactor{ParamScalar::one(), ParamScalar::one(), 1}) == FactorType::Other);
}

TEST_CASE("iota commutes with products") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5; ++i) {
        RationalFn a = random_rf(rng), b = random_rf(rng);
        for (IotaDir d : {IotaDir::Plus, IotaDir::Minus}) {
            Series lhs = iota_expand(a * b, d);
            Series rhs = iota_expand(a, d) * iota_expand(b, d);
            CHECK(check_identity(lhs, rhs, Window::cube(1, 6)).pass);
        }
    }
}
