#include "vtxcalc/dual.hpp"
#include "vtxcalc/errors.hpp"
#include <algorithm>
#include <sstream>

namespace vtx {

namespace {

Rational inv_factorial(int j) {
    Rational f(1);
    for (int i = 2; i <= j; ++i) f *= Rational(i);
    return Rational(1) / f;
}

void add_term(DualCtx::Row& row, int i, int j, const ParamScalar& c) {
    if (c.is_zero()) return;
    for (auto& t : row.terms)
        if (t.i == i && t.j == j) {
            t.c += c;
            return;
        }
    row.terms.push_back({i, j, c});
}

void prune_row(DualCtx::Row& row) {
    row.terms.erase(std::remove_if(row.terms.begin(), row.terms.end(),
                                   [](const DualCtx::PairTerm& t) { return t.c.is_zero(); }),
                    row.terms.end());
    std::sort(row.missing.begin(), row.missing.end());
    row.missing.erase(std::unique(row.missing.begin(), row.missing.end()), row.missing.end());
}

} // namespace

// (tau_P(v (x) t^m) lambda)(w1 (x) w2)
//   = lambda(w1 (x) v^o_(m) w2)
//   + sum_{j, n >= 0} (1/j!) (-1)^{h+n} C(n+m+1+j-2h, n) z^{2h-n-m-j-2}
//                     lambda((L(1)^j v)_n w1 (x) w2)
const DualCtx::Row& DualCtx::row_tauP(int v, long m, int i, int j) {
    RKey key{0, m, v, i, j};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Row row;
    const VertexAlgebra& V = *W1->alg;
    int h = V.weight(v);

    // slot 2: v^o_(m) w2, one homogeneous target weight
    long w2res = m + 1 - h + W2->weight(j);
    if (w2res > W2->data.model_cutoff) {
        if (!W2->data.complete) row.missing.push_back(W1->weight(i) + w2res);
    } else if (w2res >= W2->data.min_weight) {
        for (const auto& t : ocomp(*W2, v, m, j))
            add_term(row, i, t.first, t.second);
    }

    // slot 1
    Rational sign_h = (h % 2 == 0) ? Rational(1) : Rational(-1);
    for (int jj = 0;; ++jj) {
        SparseVec lj = V.L1_pow(jj, v);
        if (lj.empty()) break;
        Rational fj = inv_factorial(jj);
        for (const auto& tu : lj) {
            int hu = V.weight(tu.first); // = h - jj
            long nmax = static_cast<long>(hu) + W1->weight(i) - 1 - W1->data.min_weight;
            long nfirst =
                std::max<long>(0, static_cast<long>(hu) + W1->weight(i) - 1 - W1->data.model_cutoff);
            if (nfirst > 0 && !W1->data.complete)
                row.missing.push_back(W1->data.model_cutoff + 1 + W2->weight(j));
            for (long n = nfirst; n <= nmax; ++n) {
                Rational binom = gen_binom(n + m + 1 + jj - 2 * h, n);
                if (binom == 0) continue;
                Rational c = fj * binom * sign_h;
                if (n % 2 != 0) c = -c;
                int zexp = static_cast<int>(2 * h - n - m - jj - 2);
                ParamScalar coef = tu.second * ParamScalar(zexp, c);
                if (coef.is_zero()) continue;
                for (const auto& tw : W1->comp(tu.first, n, i))
                    add_term(row, tw.first, j, tw.second * coef);
            }
        }
    }
    prune_row(row);
    return cache_.emplace(key, std::move(row)).first->second;
}

// (tau_Q(v (x) t^m) lambda)(w1 (x) w2)
//   = sum_{k>=0} C(m,k) (-1)^k z^k lambda(v^o_(m-k) w1 (x) w2)
//   - (-1)^m sum_{q>=0} C(m,q) (-1)^q z^{m-q} lambda(w1 (x) v_q w2)
const DualCtx::Row& DualCtx::row_tauQ(int v, long m, int i, int j) {
    RKey key{1, m, v, i, j};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Row row;
    const VertexAlgebra& V = *W1->alg;
    int h = V.weight(v);

    // slot 1: v^o_(m-k) w1 has weight (m-k)+1-h+wt(w1)
    {
        long kmax = m + 1 - h + W1->weight(i) - W1->data.min_weight;
        long kfirst = std::max<long>(0, m + 1 - h + W1->weight(i) - W1->data.model_cutoff);
        if (kfirst > 0 && !W1->data.complete)
            row.missing.push_back(W1->data.model_cutoff + 1 + W2->weight(j));
        for (long k = kfirst; k <= kmax; ++k) {
            Rational binom = gen_binom(m, k);
            if (binom == 0) continue;
            Rational c = (k % 2 == 0) ? binom : -binom;
            ParamScalar coef(static_cast<int>(k), c);
            for (const auto& t : ocomp(*W1, v, m - k, i))
                add_term(row, t.first, j, t.second * coef);
        }
    }
    // slot 2: v_q w2 has weight h + wt(w2) - q - 1
    {
        long qmax = static_cast<long>(h) + W2->weight(j) - 1 - W2->data.min_weight;
        long qfirst = std::max<long>(0, static_cast<long>(h) + W2->weight(j) - 1 - W2->data.model_cutoff);
        if (qfirst > 0 && !W2->data.complete)
            row.missing.push_back(W1->weight(i) + W2->data.model_cutoff + 1);
        Rational sgn_m = (m % 2 == 0) ? Rational(1) : Rational(-1);
        for (long q = qfirst; q <= qmax; ++q) {
            Rational binom = gen_binom(m, q);
            if (binom == 0) continue;
            Rational c = -sgn_m * ((q % 2 == 0) ? binom : -binom);
            ParamScalar coef(static_cast<int>(m - q), c);
            for (const auto& t : W2->comp(v, q, j))
                add_term(row, i, t.first, t.second * coef);
        }
    }
    prune_row(row);
    return cache_.emplace(key, std::move(row)).first->second;
}

// (L'_P(j) lambda)(w1 (x) w2)
//   = lambda(w1 (x) L(-j) w2) + sum_{i=0}^{1-j} C(1-j,i) z^i lambda(L(-j-i) w1 (x) w2)
const DualCtx::Row& DualCtx::row_LP(int j_op, int i, int j) {
    RKey key{2, j_op, 0, i, j};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Row row;
    {
        int wres = W2->weight(j) + j_op; // L(-j_op) shifts weight by +j_op
        if (wres > W2->data.model_cutoff && !W2->data.complete)
            row.missing.push_back(W1->weight(i) + wres);
        else if (wres >= W2->data.min_weight)
            for (const auto& t : W2->L(-j_op, j))
                add_term(row, i, t.first, t.second);
    }
    for (int s = 0; s <= 1 - j_op; ++s) {
        Rational binom = gen_binom(1 - j_op, s);
        if (binom == 0) continue;
        int wres = W1->weight(i) + j_op + s; // L(-j_op-s) shifts weight by j_op+s
        if (wres > W1->data.model_cutoff) {
            if (!W1->data.complete) row.missing.push_back(wres + W2->weight(j));
            continue;
        }
        if (wres < W1->data.min_weight) continue;
        ParamScalar coef(s, binom);
        for (const auto& t : W1->L(-j_op - s, i))
            add_term(row, t.first, j, t.second * coef);
    }
    prune_row(row);
    return cache_.emplace(key, std::move(row)).first->second;
}

// (L'_Q(j) lambda)(w1 (x) w2)
//   = sum_{i=0}^{j+1} C(j+1,i) (-z)^i [ lambda(L(i-j) w1 (x) w2)
//                                      - lambda(w1 (x) L(j-i) w2) ]
const DualCtx::Row& DualCtx::row_LQ(int j_op, int i, int j) {
    RKey key{3, j_op, 0, i, j};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Row row;
    for (int s = 0; s <= j_op + 1; ++s) {
        Rational binom = gen_binom(j_op + 1, s);
        if (binom == 0) continue;
        Rational c = (s % 2 == 0) ? binom : -binom;
        ParamScalar coef(s, c);
        {
            int wres = W1->weight(i) - (s - j_op); // L(s-j_op) shifts by -(s-j_op)
            if (wres > W1->data.model_cutoff && !W1->data.complete)
                row.missing.push_back(wres + W2->weight(j));
            else if (wres >= W1->data.min_weight)
                for (const auto& t : W1->L(s - j_op, i))
                    add_term(row, t.first, j, t.second * coef);
        }
        {
            int wres = W2->weight(j) - (j_op - s);
            if (wres > W2->data.model_cutoff && !W2->data.complete)
                row.missing.push_back(W1->weight(i) + wres);
            else if (wres >= W2->data.min_weight)
                for (const auto& t : W2->L(j_op - s, j))
                    add_term(row, i, t.first, -(t.second * coef));
        }
    }
    prune_row(row);
    return cache_.emplace(key, std::move(row)).first->second;
}

// ---------------------------------------------------------------- DualFn

struct DualFn::Node {
    DualCtxPtr ctx;
    mutable std::map<std::pair<int, int>, ParamScalar> memo;
    virtual ~Node() = default;
    virtual ParamScalar eval(int i, int j) const = 0;
    virtual long bound() const { return LONG_MAX; }
};

namespace {

struct TableNode final : DualFn::Node {
    std::map<std::pair<int, int>, ParamScalar> values;
    long bnd = LONG_MIN;
    ParamScalar eval(int i, int j) const override {
        auto it = values.find({i, j});
        return it == values.end() ? ParamScalar() : it->second;
    }
    long bound() const override { return bnd; }
};

struct CanonicalNode final : DualFn::Node {
    const GradedModule* W = nullptr;
    int wp = 0;
    ParamScalar eval(int i, int j) const override {
        long k = static_cast<long>(ctx->W1->alg->weight(i)) + W->weight(j) - W->weight(wp) - 1;
        const SparseVec& c = W->comp(i, k, j);
        auto it = c.find(wp);
        if (it == c.end()) return ParamScalar();
        return it->second * ParamScalar::z(static_cast<int>(-k - 1));
    }
};

struct LinCombNode final : DualFn::Node {
    std::vector<std::pair<ParamScalar, DualFn>> parts;
    ParamScalar eval(int i, int j) const override {
        ParamScalar acc;
        for (const auto& p : parts) acc += p.first * p.second(i, j);
        return acc;
    }
    long bound() const override {
        long b = LONG_MIN;
        for (const auto& p : parts) {
            long pb = p.second.vanishes_above();
            if (pb == LONG_MAX) return LONG_MAX;
            b = std::max(b, pb);
        }
        return b;
    }
};

struct ProjBetaNode final : DualFn::Node {
    DualFn parent;
    GDeg target; // pair degree kept (= -beta reduced)
    ParamScalar eval(int i, int j) const override {
        if (ctx->pair_degree(i, j) != target) return ParamScalar();
        return parent(i, j);
    }
    long bound() const override { return parent.vanishes_above(); }
};

enum class OpKind { TauP, TauQ, LP, LQ };

struct OpNode final : DualFn::Node {
    OpKind kind;
    SparseVec v;
    long m = 0;
    int jop = 0;
    DualFn parent;

    ParamScalar eval(int i, int j) const override {
        ParamScalar acc;
        auto run = [&](const DualCtx::Row& row, const ParamScalar& scale) {
            for (long w : row.missing) {
                if (parent.vanishes_above() >= w)
                    throw TruncationOverflow(
                        "dual action needs data beyond the model (pair weight " +
                        std::to_string(w) + ")");
            }
            for (const auto& t : row.terms) acc += scale * t.c * parent(t.i, t.j);
        };
        DualCtx& c = *ctx;
        switch (kind) {
        case OpKind::TauP:
            for (const auto& tv : v) run(c.row_tauP(tv.first, m, i, j), tv.second);
            break;
        case OpKind::TauQ:
            for (const auto& tv : v) run(c.row_tauQ(tv.first, m, i, j), tv.second);
            break;
        case OpKind::LP:
            run(c.row_LP(jop, i, j), ParamScalar::one());
            break;
        case OpKind::LQ:
            run(c.row_LQ(jop, i, j), ParamScalar::one());
            break;
        }
        return acc;
    }
};

// rows for the (taudef0)/(5.1) loop-element actions
struct LoopRow {
    std::vector<DualCtx::PairTerm> terms;
    std::vector<long> missing;
};

SparseVec tau_W_bounded(const GradedModule& M, const LoopElement& xi, IotaDir dir, int w,
                        std::vector<long>& missing, long other_weight) {
    SparseVec out;
    for (const auto& term : xi) {
        if (term.f.is_zero()) continue;
        Series s = iota_expand(term.f, dir);
        if (s.support().empty()) continue;
        bool unbounded_below = false;
        long mn = 0;
        bool any = false;
        for (const auto& c : s.support()) {
            for (const auto& g : c.gens)
                if (g.e[0] < 0) unbounded_below = true;
            if (!any || c.base.e[0] < mn) mn = c.base.e[0];
            any = true;
        }
        for (const auto& t : term.vec) {
            long wt_top = static_cast<long>(M.alg->weight(t.first)) + M.weight(w);
            long nlo = wt_top - 1 - M.data.model_cutoff; // below: weight beyond model
            if ((unbounded_below || mn < nlo) && !M.data.complete)
                missing.push_back(M.data.model_cutoff + 1 + other_weight);
            long nfrom = std::max(nlo, unbounded_below ? nlo : mn);
            long nhi = wt_top - 1 - M.data.min_weight;
            for (long n = nfrom; n <= nhi; ++n) {
                ParamScalar a = s.coeff(Expo{static_cast<int>(n)});
                if (a.is_zero()) continue;
                svec_add_to(out, M.comp(t.first, n, w), a * t.second);
            }
        }
    }
    return out;
}

// (iota_+ T_z iota_-^{-1} o) xi : the slot-1 ingredient of tau_P
LoopElement chainP_slot1(const VertexAlgebra& V, const LoopElement& xi) {
    LoopElement oxi = o_involution(V, xi);
    LoopElement out;
    for (const auto& t : oxi) out.push_back({t.vec, rf_translate(t.f, ParamScalar::z(1))});
    return out;
}

struct LoopOpNode final : DualFn::Node {
    bool is_p = true;
    LoopElement xi1, xi2; // transformed per slot
    DualFn parent;
    mutable std::map<std::pair<int, int>, LoopRow> rows;

    const LoopRow& row(int i, int j) const {
        auto it = rows.find({i, j});
        if (it != rows.end()) return it->second;
        LoopRow r;
        const GradedModule& W1 = *ctx->W1;
        const GradedModule& W2 = *ctx->W2;
        {
            SparseVec s1 = tau_W_bounded(W1, xi1, IotaDir::Plus, i, r.missing, W2.weight(j));
            for (const auto& t : s1) r.terms.push_back({t.first, j, t.second});
        }
        {
            SparseVec s2 = tau_W_bounded(W2, xi2, IotaDir::Plus, j, r.missing, W1.weight(i));
            ParamScalar sgn = is_p ? ParamScalar::one() : -ParamScalar::one();
            for (const auto& t : s2) r.terms.push_back({i, t.first, t.second * sgn});
        }
        return rows.emplace(std::make_pair(i, j), std::move(r)).first->second;
    }

    ParamScalar eval(int i, int j) const override {
        const LoopRow& r = row(i, j);
        for (long w : r.missing)
            if (parent.vanishes_above() >= w)
                throw TruncationOverflow("loop action needs data beyond the model");
        ParamScalar acc;
        for (const auto& t : r.terms) acc += t.c * parent(t.i, t.j);
        return acc;
    }
};

} // namespace

ParamScalar DualFn::operator()(int i, int j) const {
    auto key = std::make_pair(i, j);
    auto it = n_->memo.find(key);
    if (it != n_->memo.end()) return it->second;
    ParamScalar v = n_->eval(i, j);
    n_->memo.emplace(key, v);
    return v;
}

const DualCtx& DualFn::ctx() const { return *n_->ctx; }
long DualFn::vanishes_above() const { return n_->bound(); }

DualFn DualFn::zero(DualCtxPtr c) {
    auto n = std::make_shared<TableNode>();
    n->ctx = std::move(c);
    return DualFn(n);
}

DualFn DualFn::table(DualCtxPtr c, std::map<std::pair<int, int>, ParamScalar> values) {
    auto n = std::make_shared<TableNode>();
    n->ctx = std::move(c);
    for (auto it = values.begin(); it != values.end();) {
        if (it->second.is_zero()) it = values.erase(it);
        else {
            n->bnd = std::max(n->bnd, n->ctx->pair_weight(it->first.first, it->first.second));
            ++it;
        }
    }
    n->values = std::move(values);
    return DualFn(n);
}

DualFn DualFn::delta(DualCtxPtr c, int i, int j) {
    std::map<std::pair<int, int>, ParamScalar> v;
    v[{i, j}] = ParamScalar::one();
    return table(std::move(c), std::move(v));
}

DualFn DualFn::canonical(DualCtxPtr c, const GradedModule& W, int wprime) {
    auto n = std::make_shared<CanonicalNode>();
    n->ctx = std::move(c);
    n->W = &W;
    n->wp = wprime;
    return DualFn(n);
}

DualFn DualFn::lincomb(std::vector<std::pair<ParamScalar, DualFn>> parts) {
    if (parts.empty()) throw CalcError("lincomb of nothing");
    auto n = std::make_shared<LinCombNode>();
    n->ctx = parts.front().second.n_->ctx;
    n->parts = std::move(parts);
    return DualFn(n);
}

DualFn DualFn::random(DualCtxPtr c, std::mt19937_64& rng, long weight_bound) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    std::map<std::pair<int, int>, ParamScalar> v;
    for (int i = 0; i < c->W1->dim(); ++i)
        for (int j = 0; j < c->W2->dim(); ++j) {
            if (c->pair_weight(i, j) > weight_bound) continue;
            Rational r = rat(num(rng), den(rng));
            if (r != 0) v[{i, j}] = ParamScalar(r);
        }
    return table(std::move(c), std::move(v));
}

DualFn DualFn::scaled(const ParamScalar& c) const {
    return lincomb({{c, *this}});
}

DualFn operator+(const DualFn& a, const DualFn& b) {
    return DualFn::lincomb({{ParamScalar::one(), a}, {ParamScalar::one(), b}});
}

DualFn operator-(const DualFn& a, const DualFn& b) {
    return DualFn::lincomb({{ParamScalar::one(), a}, {-ParamScalar::one(), b}});
}

DualFn DualFn::project_beta(const GDeg& beta) const {
    auto n = std::make_shared<ProjBetaNode>();
    n->ctx = n_->ctx;
    n->parent = *this;
    n->target = n_->ctx->W1->data.group.neg(beta);
    return DualFn(n);
}

std::map<std::pair<int, int>, ParamScalar> DualFn::materialize(long weight_bound) const {
    std::map<std::pair<int, int>, ParamScalar> out;
    const DualCtx& c = *n_->ctx;
    for (int i = 0; i < c.W1->dim(); ++i)
        for (int j = 0; j < c.W2->dim(); ++j) {
            if (c.pair_weight(i, j) > weight_bound) continue;
            ParamScalar v = (*this)(i, j);
            if (!v.is_zero()) out[{i, j}] = v;
        }
    return out;
}

namespace {

DualFn make_op(OpKind kind, DualCtxPtr c, SparseVec v, long m, int jop, const DualFn& lam) {
    auto n = std::make_shared<OpNode>();
    n->ctx = std::move(c);
    n->kind = kind;
    n->v = std::move(v);
    n->m = m;
    n->jop = jop;
    n->parent = lam;
    return DualFn(n);
}

} // namespace

DualFn tauP_comp(DualCtxPtr c, const SparseVec& v, long m, const DualFn& lam) {
    return make_op(OpKind::TauP, std::move(c), v, m, 0, lam);
}
DualFn tauQ_comp(DualCtxPtr c, const SparseVec& v, long m, const DualFn& lam) {
    return make_op(OpKind::TauQ, std::move(c), v, m, 0, lam);
}
DualFn LP_op(DualCtxPtr c, int j, const DualFn& lam) {
    return make_op(OpKind::LP, std::move(c), {}, 0, j, lam);
}
DualFn LQ_op(DualCtxPtr c, int j, const DualFn& lam) {
    return make_op(OpKind::LQ, std::move(c), {}, 0, j, lam);
}

DualFn tauP_apply(DualCtxPtr c, const LoopElement& xi, const DualFn& lam) {
    for (const auto& t : xi)
        for (const auto& d : t.f.den())
            if (classify_factor(d) != FactorType::ZInvMinusT)
                throw WrongLocalization("tau_P wants (z^-1 - t) denominators, got " + rf_str(t.f));
    auto n = std::make_shared<LoopOpNode>();
    const VertexAlgebra& V = *c->W1->alg;
    n->ctx = std::move(c);
    n->is_p = true;
    n->xi1 = chainP_slot1(V, xi);
    n->xi2 = o_involution(V, xi);
    n->parent = lam;
    return DualFn(n);
}

DualFn tauQ_apply(DualCtxPtr c, const LoopElement& xi, const DualFn& lam) {
    const VertexAlgebra& V = *c->W1->alg;
    auto n = std::make_shared<LoopOpNode>();
    n->ctx = std::move(c);
    n->is_p = false;
    n->xi1 = translate_pm(V, xi, TranslateSign::O);
    n->xi2 = translate_pm(V, xi, TranslateSign::Plus);
    n->parent = lam;
    return DualFn(n);
}

std::map<std::pair<int, int>, ParamScalar> sigmaP_apply(DualCtxPtr c, const LoopElement& xi,
                                                        int w1, int w2) {
    for (const auto& t : xi)
        for (const auto& d : t.f.den())
            if (classify_factor(d) != FactorType::ZInvMinusT)
                throw WrongLocalization("sigma_P wants (z^-1 - t) denominators");
    const VertexAlgebra& V = *c->W1->alg;
    std::map<std::pair<int, int>, ParamScalar> out;
    SparseVec s1 = tau_W(*c->W1, chainP_slot1(V, xi), IotaDir::Plus, w1);
    for (const auto& t : s1) {
        auto& slot = out[{t.first, w2}];
        slot += t.second;
    }
    SparseVec s2 = tau_W(*c->W2, o_involution(V, xi), IotaDir::Plus, w2);
    for (const auto& t : s2) {
        auto& slot = out[{w1, t.first}];
        slot += t.second;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::pair<LoopElement, LoopElement> deltaP_coproduct(const VertexAlgebra& V, const SparseVec& v,
                                                     int n) {
    (void)V;
    RationalFn zptn;
    if (n >= 0) {
        LaurentT num;
        for (int k = 0; k <= n; ++k) {
            Rational c = gen_binom(n, k);
            num[k] = ParamScalar(n - k, c);
        }
        zptn = RationalFn(std::move(num));
    } else {
        zptn = RationalFn({{0, ParamScalar::one()}},
                          {DenFactor{ParamScalar::z(1), ParamScalar::one(), -n}});
    }
    LoopElement first{{v, zptn}};
    LoopElement second{{v, RationalFn::monomial(n)}};
    return {first, second};
}

namespace {

ParamScalar eval_op_at(DualCtxPtr c, OpKind kind, const SparseVec& v, long m, const DualFn& lam,
                       int i, int j) {
    ParamScalar acc;
    auto run = [&](const DualCtx::Row& row, const ParamScalar& scale) {
        for (long w : row.missing)
            if (lam.vanishes_above() >= w)
                throw TruncationOverflow("dual action needs data beyond the model");
        for (const auto& t : row.terms) acc += scale * t.c * lam(t.i, t.j);
    };
    for (const auto& tv : v) {
        if (kind == OpKind::TauP) run(c->row_tauP(tv.first, m, i, j), tv.second);
        else run(c->row_tauQ(tv.first, m, i, j), tv.second);
    }
    return acc;
}

} // namespace

Series yP_series(DualCtxPtr c, const SparseVec& v, const DualFn& lam, int w1, int w2) {
    VarSet xs{"x"};
    std::vector<Cone> sup{Cone{Expo{0}, {Expo{1}}}, Cone{Expo{-1}, {Expo{-1}}}};
    auto cc = c;
    SparseVec vv = v;
    DualFn ll = lam;
    int i = w1, j = w2;
    return Series::from_function(xs, sup, [cc, vv, ll, i, j](const Expo& e) {
        long m = -static_cast<long>(e.e[0]) - 1;
        return eval_op_at(cc, OpKind::TauP, vv, m, ll, i, j);
    });
}

Series yQ_series(DualCtxPtr c, const SparseVec& v, const DualFn& lam, int w1, int w2) {
    VarSet xs{"x"};
    std::vector<Cone> sup{Cone{Expo{0}, {Expo{1}}}, Cone{Expo{-1}, {Expo{-1}}}};
    auto cc = c;
    SparseVec vv = v;
    DualFn ll = lam;
    int i = w1, j = w2;
    return Series::from_function(xs, sup, [cc, vv, ll, i, j](const Expo& e) {
        long m = -static_cast<long>(e.e[0]) - 1;
        return eval_op_at(cc, OpKind::TauQ, vv, m, ll, i, j);
    });
}

std::map<int, ParamScalar> yP_prime(DualCtxPtr c, const SparseVec& v, const DualFn& lam,
                                    int w1, int w2, int xlo, int xhi) {
    std::map<int, ParamScalar> out;
    for (int x = xlo; x <= xhi; ++x) {
        ParamScalar val = eval_op_at(c, OpKind::TauP, v, -static_cast<long>(x) - 1, lam, w1, w2);
        if (!val.is_zero()) out[x] = val;
    }
    return out;
}

std::map<int, ParamScalar> yQ_prime(DualCtxPtr c, const SparseVec& v, const DualFn& lam,
                                    int w1, int w2, int xlo, int xhi) {
    std::map<int, ParamScalar> out;
    for (int x = xlo; x <= xhi; ++x) {
        ParamScalar val = eval_op_at(c, OpKind::TauQ, v, -static_cast<long>(x) - 1, lam, w1, w2);
        if (!val.is_zero()) out[x] = val;
    }
    return out;
}

} // namespace vtx
