#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vtxcalc/instances.hpp"
#include "vtxcalc/properties.hpp"
#include "vtxcalc/errors.hpp"

using namespace vtx;

namespace {
ParamScalar one() { return ParamScalar::one(); }
}

TEST_CASE("trivial algebra Q") {
    auto V = mk_commalg_voa(commalg_q());
    CHECK(V->dim() == 1);
    // Y(1, x)1 = 1: only the (-1)-component acts
    CHECK(V->comp(0, -1, 0) == SparseVec{{0, one()}});
    CHECK(V->comp(0, 0, 0).empty());
    CHECK(V->comp(0, -2, 0).empty());
}

TEST_CASE("A2 = Q[s]/(s^2)") {
    auto V = mk_commalg_voa(commalg_a2());
    int s = V->data.index_of("s");
    CHECK(V->comp(s, -1, s).empty());              // s.s = 0
    CHECK(V->comp(s, -1, 0) == SparseVec{{s, one()}});
    // constant in x: all other components vanish
    for (long k = -4; k <= 4; ++k)
        if (k != -1) CHECK(V->comp(s, k, s).empty());
}

TEST_CASE("group algebra Q[Z/2] is degree-additive") {
    auto data = commalg_qz2();
    CHECK_NOTHROW(data.check());
    auto V = mk_commalg_voa(data);
    int g = V->data.index_of("g");
    CHECK(V->comp(g, -1, g) == SparseVec{{0, one()}}); // g^2 = 1
    CHECK(V->degree(g) == GDeg{1});
}

TEST_CASE("algebra law violations carry witnesses") {
    // broken unit
    CommAlgebraData nu = commalg_a2();
    nu.product[0][1] = {};
    nu.product[1][0] = {};
    CHECK_THROWS_AS(mk_commalg_voa(nu), NoUnit);

    // broken commutativity needs a third element: a*b = a but b*a = b
    CommAlgebraData nc;
    nc.name = "nc";
    nc.names = {"1", "a", "b"};
    nc.product.assign(3, std::vector<SparseVec>(3));
    for (int i = 0; i < 3; ++i) {
        nc.product[0][i] = {{i, one()}};
        nc.product[i][0] = {{i, one()}};
    }
    nc.product[1][1] = {};
    nc.product[2][2] = {};
    nc.product[1][2] = {{1, one()}};
    nc.product[2][1] = {{2, one()}};
    nc.unit = {{0, one()}};
    CHECK_THROWS_AS(mk_commalg_voa(nc), NotCommutative);

    // broken associativity: commutative table with (a*a)*b != a*(a*b)
    CommAlgebraData na;
    na.name = "na";
    na.names = {"1", "a", "b"};
    na.product.assign(3, std::vector<SparseVec>(3));
    for (int i = 0; i < 3; ++i) {
        na.product[0][i] = {{i, one()}};
        na.product[i][0] = {{i, one()}};
    }
    na.product[1][1] = {{2, one()}};  // a*a = b
    na.product[1][2] = {{1, one()}};  // a*b = a
    na.product[2][1] = {{1, one()}};
    na.product[2][2] = {};
    na.unit = {{0, one()}};
    // (a*a)*b = b*b = 0 but a*(a*b) = a*a = b
    CHECK_THROWS_AS(mk_commalg_voa(na), NotAssociative);
}

TEST_CASE("comm-alg modules") {
    auto data = commalg_a2();
    auto V = mk_commalg_voa(data);
    auto reg = commalg_module(V, data, "reg");
    CHECK(reg->dim() == 2);
    auto quot = commalg_module(V, data, "quot");
    CHECK(quot->dim() == 1);
    int s = V->data.index_of("s");
    CHECK(quot->comp(s, -1, 0).empty()); // s acts by zero on A2/(s)

    auto qq = commalg_qq();
    auto Vqq = mk_commalg_voa(qq);
    auto e1m = commalg_module(Vqq, qq, "e1");
    CHECK(e1m->comp(0, -1, 0) == SparseVec{{0, one()}});
    CHECK(e1m->comp(1, -1, 0).empty()); // e2 acts by zero

    // a module-law violation is rejected with a witness
    std::vector<std::vector<SparseVec>> bad(2, std::vector<SparseVec>(1));
    bad[0][0] = {{0, one()}};
    bad[1][0] = {{0, one()}}; // s would act as identity: s^2 = 0 violated
    CHECK_THROWS_AS(mk_commalg_module(V, data, "bad", {"b"}, bad), NotAModule);
}

TEST_CASE("fock basis enumeration") {
    auto parts = fock_partitions(4);
    CHECK(parts.size() == 12); // 1+1+2+3+5
    CHECK(parts[0].empty());
}

TEST_CASE("heisenberg commutation and Virasoro facts") {
    auto V = mk_heisenberg(6);
    int vac = V->data.index_of("1");
    int a1 = V->data.index_of("a-1");
    int a2 = V->data.index_of("a-2");
    int a11 = V->data.index_of("a-1a-1");

    // component (alpha(-1)1)_1 alpha(-1)1 = 1
    CHECK(V->comp(a1, 1, a1) == SparseVec{{vac, one()}});
    // [alpha(1), alpha(-1)] = 1 on every basis vector that stays in range
    for (int w = 0; w < V->dim(); ++w) {
        if (V->weight(w) > 4) continue;
        SparseVec ab, ba;
        for (const auto& t : V->comp(a1, -1, w)) svec_add_to(ab, V->comp(a1, 1, t.first), t.second);
        for (const auto& t : V->comp(a1, 1, w)) svec_add_to(ba, V->comp(a1, -1, t.first), t.second);
        SparseVec diff = ab;
        svec_add_to(diff, ba, -one());
        CHECK(diff == SparseVec{{w, one()}});
    }
    // L(0) is the weight; L(1)alpha(-2)1 = 2 alpha(-1)1; L(-1)alpha(-1)1 = alpha(-2)1
    CHECK(V->L(0, a1) == SparseVec{{a1, one()}});
    CHECK(V->L(1, a2) == SparseVec{{a1, ParamScalar(rat(2))}});
    CHECK(V->L(-1, a1) == SparseVec{{a2, one()}});
    CHECK(V->L(1, a1).empty());
    // Y(alpha(-2)1, x) = d alpha(x): components -k alpha(k-1)
    CHECK(V->comp(a2, 0, a1).empty());
    CHECK(V->comp(a2, 1, a1).empty());
    CHECK(V->comp(a2, 2, a1) == SparseVec{{vac, ParamScalar(rat(-2))}});
    // omega = (1/2) alpha(-1)^2 1 reproduces L(j) through its components:
    // (omega)_{j+1} w = L(j) w
    for (int j = -1; j <= 1; ++j)
        for (int w = 0; w < V->dim(); ++w) {
            int wres = V->weight(w) - j;
            if (wres < 0 || wres > V->data.model_cutoff) continue;
            SparseVec lhs = svec_scale(V->comp(a11, j + 1, w), ParamScalar(rat(1, 2)));
            CHECK(lhs == V->L(j, w));
        }

    CHECK_THROWS_AS(mk_heisenberg(1), CalcError);
}

TEST_CASE("heisenberg skew symmetry (small window)") {
    CheckConfig cfg;
    cfg.instance = "heisenberg";
    cfg.cutoff = 2;
    cfg.window = 2;
    auto ctx = CheckContext::make(cfg);
    auto rep = verify_property("SKEW-SYM", ctx);
    CHECK(rep.passed());
}

TEST_CASE("weak module axiom suite on comm-alg instances") {
    for (const char* inst : {"a2", "qz2", "qq"}) {
        CheckConfig cfg;
        cfg.instance = inst;
        cfg.cutoff = 2;
        cfg.window = 2;
        auto ctx = CheckContext::make(cfg);
        for (const char* id : {"MOD-JACOBI", "MOD-VACUUM", "MOD-LDER"}) {
            auto rep = verify_property(id, ctx);
            INFO(inst, " ", id, " ", report_text(rep));
            CHECK(rep.passed());
        }
    }
}

TEST_CASE("weak module axiom suite on a small heisenberg model") {
    CheckConfig cfg;
    cfg.instance = "heisenberg";
    cfg.cutoff = 2;
    cfg.window = 2;
    auto ctx = CheckContext::make(cfg);
    for (const char* id : {"MOD-JACOBI", "MOD-VACUUM", "MOD-LDER"}) {
        auto rep = verify_property(id, ctx);
        INFO(id, " ", report_text(rep));
        CHECK(rep.passed());
    }
}
