#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vtxcalc/param_scalar.hpp"
#include "vtxcalc/rational.hpp"
#include "vtxcalc/errors.hpp"
#include <random>

using namespace vtx;

namespace {

ParamScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expd(-4, 4), numd(-6, 6), dend(1, 4);
    ParamScalar p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p += ParamScalar(expd(rng), rat(numd(rng), dend(rng)));
    return p;
}

} // namespace

TEST_CASE("ring arithmetic basics") {
    ParamScalar z = ParamScalar::z();
    ParamScalar one = ParamScalar::one();
    // (z + 1)(z - 1) = z^2 - 1
    CHECK((z + one) * (z - one) == ParamScalar::z(2) - one);
    // z^-2 + 0 = z^-2
    CHECK(ParamScalar::z(-2) + ParamScalar::zero() == ParamScalar::z(-2));
    // (3/2 z) - (1/2 z) = z
    CHECK(ParamScalar(1, rat(3, 2)) - ParamScalar(1, rat(1, 2)) == z);
}

TEST_CASE("ring laws on random elements") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        ParamScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    // z^-1 + z at z0 = 2 -> 5/2
    ParamScalar p = ParamScalar::z(-1) + ParamScalar::z(1);
    CHECK(p.eval(rat(2)) == rat(5, 2));
    // 0 at any z0 -> 0
    CHECK(ParamScalar::zero().eval(rat(7)) == rat(0));
    // z^3 at z0 = -1 -> -1
    CHECK(ParamScalar::z(3).eval(rat(-1)) == rat(-1));
    CHECK_THROWS_AS(p.eval(rat(0)), ZeroParameter);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> zd(1, 9);
    for (int i = 0; i < 100; ++i) {
        ParamScalar a = random_scalar(rng), b = random_scalar(rng);
        Rational z0 = rat(zd(rng), zd(rng));
        CHECK((a * b).eval(z0) == a.eval(z0) * b.eval(z0));
        CHECK((a + b).eval(z0) == a.eval(z0) + b.eval(z0));
    }
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(gen_binom(-1, 2) == rat(1));
    CHECK(gen_binom(3, 0) == rat(1));
    CHECK(gen_binom(-2, 3) == rat(-4));
    CHECK(gen_binom(5, 2) == rat(10));
    // Pascal rule on the full stated grid
    for (long n = -10; n <= 10; ++n)
        for (long k = 1; k <= 10; ++k)
            CHECK(gen_binom(n, k) == gen_binom(n - 1, k) + gen_binom(n - 1, k - 1));
}

TEST_CASE("parse and print round-trip") {
    auto round = [](const std::string& s) { return ParamScalar::parse(s).str(); };
    CHECK(ParamScalar::parse("3/2 z^-1 + 1") == ParamScalar(-1, rat(3, 2)) + ParamScalar::one());
    CHECK(ParamScalar::parse("-z^2 + 1/3") == -ParamScalar::z(2) + ParamScalar(rat(1, 3)));
    CHECK(ParamScalar::parse("z") == ParamScalar::z());
    CHECK(round("0") == "0");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        ParamScalar p = random_scalar(rng);
        CHECK(ParamScalar::parse(p.str()) == p);
    }
}

TEST_CASE("monomial division") {
    ParamScalar p = ParamScalar(3, rat(6)) + ParamScalar(1, rat(2));
    ParamScalar q = p.div_monomial(rat(2), 1);
    CHECK(q == ParamScalar(2, rat(3)) + ParamScalar::one());
}
