#include "vtxcalc/instances.hpp"
#include "vtxcalc/errors.hpp"
#include <algorithm>
#include <functional>
#include <sstream>

namespace vtx {

// ---------------------------------------------------------------- comm-alg

SparseVec CommAlgebraData::mul(const SparseVec& a, const SparseVec& b) const {
    SparseVec r;
    for (const auto& ta : a)
        for (const auto& tb : b)
            svec_add_to(r, product[ta.first][tb.first], ta.second * tb.second);
    return r;
}

void CommAlgebraData::check() const {
    const int n = dim();
    if (static_cast<int>(product.size()) != n)
        throw CalcError("commalg: product table size mismatch");
    for (int i = 0; i < n; ++i) {
        SparseVec ei{{i, ParamScalar::one()}};
        if (mul(unit, ei) != ei || mul(ei, unit) != ei)
            throw NoUnit("declared unit fails on " + names[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (product[i][j] != product[j][i])
                throw NotCommutative(names[i] + "*" + names[j]);
            for (int k = 0; k < n; ++k) {
                SparseVec ek{{k, ParamScalar::one()}};
                SparseVec lhs = mul(product[i][j], ek);
                SparseVec rhs = mul(SparseVec{{i, ParamScalar::one()}}, product[j][k]);
                if (lhs != rhs)
                    throw NotAssociative("(" + names[i] + "*" + names[j] + ")*" + names[k]);
            }
        }
    if (!degrees.empty()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                GDeg want = group.add(degrees[i], degrees[j]);
                for (const auto& t : product[i][j])
                    if (degrees[t.first] != want)
                        throw CalcError("commalg: product not degree-additive at " + names[i] +
                                        "*" + names[j]);
            }
    }
}

std::shared_ptr<VertexAlgebra> mk_commalg_voa(const CommAlgebraData& data) {
    data.check();
    auto V = std::make_shared<VertexAlgebra>();
    V->data.name = data.name;
    V->data.group = data.group;
    for (int i = 0; i < data.dim(); ++i)
        V->data.basis.push_back(
            {data.names[i], 0, data.degrees.empty() ? data.group.zero() : data.degrees[i]});
    V->data.model_cutoff = 0;
    V->data.complete = true;
    V->data.finish();
    V->vacuum_vec = data.unit;
    V->central_charge = ParamScalar::zero();
    CommAlgebraData table = data;
    V->compfn = [table](int u, long k, int v) -> SparseVec {
        if (k != -1) return {};
        return table.product[u][v];
    };
    V->lfn = [](int, int) -> SparseVec { return {}; };
    return V;
}

std::shared_ptr<GradedModule> mk_commalg_module(const std::shared_ptr<VertexAlgebra>& V,
                                                const CommAlgebraData& data,
                                                const std::string& name,
                                                const std::vector<std::string>& basis_names,
                                                const std::vector<std::vector<SparseVec>>& act,
                                                const std::vector<GDeg>& degrees) {
    const int n = data.dim();
    const int d = static_cast<int>(basis_names.size());
    // module law: act(u) act(v) = act(u*v) and act(1) = id
    auto apply = [&](int v, const SparseVec& w) {
        SparseVec r;
        for (const auto& t : w) svec_add_to(r, act[v][t.first], t.second);
        return r;
    };
    auto apply_vec = [&](const SparseVec& a, const SparseVec& w) {
        SparseVec r;
        for (const auto& t : a) svec_add_to(r, apply(t.first, w), t.second);
        return r;
    };
    for (int w = 0; w < d; ++w) {
        SparseVec ew{{w, ParamScalar::one()}};
        if (apply_vec(data.unit, ew) != ew)
            throw NotAModule(name + ": unit acts nontrivially on " + basis_names[w]);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < d; ++w) {
                SparseVec lhs = apply(u, act[v][w]);
                SparseVec rhs;
                for (const auto& t : data.product[u][v])
                    svec_add_to(rhs, act[t.first][w], t.second);
                if (lhs != rhs)
                    throw NotAModule(name + ": (" + data.names[u] + "*" + data.names[v] +
                                     ") vs composed action on " + basis_names[w]);
            }
    auto M = std::make_shared<GradedModule>();
    M->alg = V;
    M->data.name = name;
    M->data.group = data.group;
    for (int i = 0; i < d; ++i)
        M->data.basis.push_back(
            {basis_names[i], 0, degrees.empty() ? data.group.zero() : degrees[i]});
    M->data.model_cutoff = 0;
    M->data.complete = true;
    M->data.finish();
    auto table = act;
    M->compfn = [table](int u, long k, int w) -> SparseVec {
        if (k != -1) return {};
        return table[u][w];
    };
    M->lfn = [](int, int) -> SparseVec { return {}; };
    return M;
}

CommAlgebraData commalg_q() {
    CommAlgebraData d;
    d.name = "q";
    d.names = {"1"};
    d.product = {{SparseVec{{0, ParamScalar::one()}}}};
    d.unit = {{0, ParamScalar::one()}};
    return d;
}

CommAlgebraData commalg_a2() {
    CommAlgebraData d;
    d.name = "a2";
    d.names = {"1", "s"};
    d.product.assign(2, std::vector<SparseVec>(2));
    d.product[0][0] = {{0, ParamScalar::one()}};
    d.product[0][1] = {{1, ParamScalar::one()}};
    d.product[1][0] = {{1, ParamScalar::one()}};
    d.product[1][1] = {}; // s^2 = 0
    d.unit = {{0, ParamScalar::one()}};
    return d;
}

CommAlgebraData commalg_qz2() {
    CommAlgebraData d;
    d.name = "qz2";
    d.group = AbelianGroup::z2();
    d.names = {"1", "g"};
    d.degrees = {{0}, {1}};
    d.product.assign(2, std::vector<SparseVec>(2));
    d.product[0][0] = {{0, ParamScalar::one()}};
    d.product[0][1] = {{1, ParamScalar::one()}};
    d.product[1][0] = {{1, ParamScalar::one()}};
    d.product[1][1] = {{0, ParamScalar::one()}}; // g^2 = 1
    d.unit = {{0, ParamScalar::one()}};
    return d;
}

CommAlgebraData commalg_qq() {
    CommAlgebraData d;
    d.name = "qq";
    d.names = {"e1", "e2"};
    d.product.assign(2, std::vector<SparseVec>(2));
    d.product[0][0] = {{0, ParamScalar::one()}};
    d.product[1][1] = {{1, ParamScalar::one()}};
    d.unit = {{0, ParamScalar::one()}, {1, ParamScalar::one()}}; // 1 = e1 + e2
    return d;
}

std::shared_ptr<GradedModule> commalg_module(const std::shared_ptr<VertexAlgebra>& V,
                                             const CommAlgebraData& data,
                                             const std::string& which) {
    const int n = data.dim();
    if (which == "reg") {
        std::vector<std::vector<SparseVec>> act(n, std::vector<SparseVec>(n));
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) act[u][w] = data.product[u][w];
        std::vector<GDeg> degs = data.degrees;
        return mk_commalg_module(V, data, data.name + ".reg",
                                 [&] {
                                     std::vector<std::string> bn;
                                     for (auto& s : data.names) bn.push_back("m_" + s);
                                     return bn;
                                 }(),
                                 act, degs);
    }
    if (data.name == "a2" && which == "quot") {
        // A2/(s): one-dimensional, s acts by zero
        std::vector<std::vector<SparseVec>> act(2, std::vector<SparseVec>(1));
        act[0][0] = {{0, ParamScalar::one()}};
        act[1][0] = {};
        return mk_commalg_module(V, data, "a2.quot", {"q1"}, act);
    }
    if (data.name == "qq" && (which == "e1" || which == "e2")) {
        int idx = which == "e1" ? 0 : 1;
        std::vector<std::vector<SparseVec>> act(2, std::vector<SparseVec>(1));
        act[idx][0] = {{0, ParamScalar::one()}};
        act[1 - idx][0] = {};
        return mk_commalg_module(V, data, "qq." + which, {"w_" + which}, act);
    }
    throw UnsupportedInstance("module " + which + " over " + data.name);
}

// --------------------------------------------------------------- Heisenberg

std::vector<std::vector<int>> fock_partitions(int cutoff) {
    std::vector<std::vector<int>> out;
    std::function<void(int, int, std::vector<int>&)> rec = [&](int left, int maxpart,
                                                               std::vector<int>& cur) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p, cur);
            cur.pop_back();
        }
    };
    for (int w = 0; w <= cutoff; ++w) {
        std::vector<int> cur;
        rec(w, w == 0 ? 1 : w, cur);
    }
    return out;
}

namespace {

std::string partition_name(const std::vector<int>& p) {
    if (p.empty()) return "1";
    std::string s;
    for (int part : p) s += "a" + std::to_string(-part);
    return s;
}

struct Fock {
    int cutoff;
    std::vector<std::vector<int>> parts;
    std::map<std::vector<int>, int> index;

    explicit Fock(int n) : cutoff(n), parts(fock_partitions(n)) {
        for (size_t i = 0; i < parts.size(); ++i) index[parts[i]] = static_cast<int>(i);
    }

    int weight(int i) const {
        int w = 0;
        for (int p : parts[i]) w += p;
        return w;
    }

    // alpha(m) on a basis vector
    SparseVec alpha(long m, int w) const {
        if (m == 0) return {};
        if (m < 0) {
            std::vector<int> q = parts[w];
            q.push_back(static_cast<int>(-m));
            std::sort(q.rbegin(), q.rend());
            auto it = index.find(q);
            if (it == index.end())
                throw TruncationOverflow("fock: creation leaves the model");
            return {{it->second, ParamScalar::one()}};
        }
        const auto& p = parts[w];
        long mult = std::count(p.begin(), p.end(), static_cast<int>(m));
        if (mult == 0) return {};
        std::vector<int> q;
        bool removed = false;
        for (int part : p) {
            if (!removed && part == m) { removed = true; continue; }
            q.push_back(part);
        }
        return {{index.at(q), ParamScalar(rat(m * mult))}};
    }

    SparseVec alpha(long m, const SparseVec& v) const {
        SparseVec r;
        for (const auto& t : v) svec_add_to(r, alpha(m, t.first), t.second);
        return r;
    }
};

} // namespace

std::shared_ptr<VertexAlgebra> mk_heisenberg(int model_cutoff) {
    if (model_cutoff < 2) throw CalcError("heisenberg: cutoff must be at least 2");
    auto fock = std::make_shared<Fock>(model_cutoff);
    auto V = std::make_shared<VertexAlgebra>();
    V->data.name = "heisenberg";
    for (size_t i = 0; i < fock->parts.size(); ++i)
        V->data.basis.push_back({partition_name(fock->parts[i]),
                                 fock->weight(static_cast<int>(i)),
                                 {}});
    V->data.model_cutoff = model_cutoff;
    V->data.finish();
    V->vacuum_vec = {{V->data.index_of("1"), ParamScalar::one()}};
    V->central_charge = ParamScalar::one();

    // Y(a(-n) u', x) = :(1/(n-1)! d^{n-1} alpha)(x) Y(u', x): with
    // annihilators to the right; components by recursion on the partition.
    // memo lives in GradedModule::comp, so the recursion below can stay
    // straightforward.
    std::weak_ptr<VertexAlgebra> weak = V;
    auto fockp = fock;
    V->compfn = [weak, fockp](int u, long k, int v) -> SparseVec {
        auto V = weak.lock();
        const Fock& F = *fockp;
        const auto& up = F.parts[u];
        if (up.empty()) // vacuum
            return k == -1 ? SparseVec{{v, ParamScalar::one()}} : SparseVec{};
        int n = up[0];
        std::vector<int> rest(up.begin() + 1, up.end());
        int uprime = F.index.at(rest);
        int wt_uprime = F.weight(uprime), wt_v = F.weight(v);
        SparseVec out;
        // creation part: j <= n-2, component of u' at k-1-j applied first;
        // the inner component weight wt(u')+wt(v)-k+j must lie in [0, cutoff]
        {
            long jlo = k - wt_uprime - wt_v;
            long jhi = std::min<long>(n - 2, jlo + F.cutoff);
            for (long j = jlo; j <= jhi; ++j) {
                Rational c = gen_binom(n - j - 2, n - 1);
                if (c == 0) continue;
                const SparseVec& inner = V->adjoint().comp(uprime, k - 1 - j, v);
                if (inner.empty()) continue;
                SparseVec created = F.alpha(j + 1 - n, inner);
                svec_add_to(out, created, ParamScalar(c));
            }
        }
        // annihilation part: j >= n-1, alpha(j+1-n) hits v first
        {
            std::vector<int> seen;
            for (int part : F.parts[v]) {
                if (std::find(seen.begin(), seen.end(), part) != seen.end()) continue;
                seen.push_back(part);
                long j = static_cast<long>(part) + n - 1;
                Rational c = gen_binom(n - j - 2, n - 1);
                if (c == 0) continue;
                SparseVec hit = F.alpha(part, v);
                SparseVec acc;
                for (const auto& t : hit)
                    svec_add_to(acc, V->adjoint().comp(uprime, k - 1 - j, t.first), t.second);
                svec_add_to(out, acc, ParamScalar(c));
            }
        }
        return out;
    };
    V->lfn = [fockp](int j, int w) -> SparseVec {
        const Fock& F = *fockp;
        if (j == 0) {
            int wt = F.weight(w);
            if (wt == 0) return {};
            return {{w, ParamScalar(rat(wt))}};
        }
        SparseVec out;
        if (j == -1) {
            // L(-1) = sum_{m>=1} alpha(-1-m) alpha(m); alpha(m) already
            // carries the multiplicity factor, so visit distinct parts once
            std::vector<int> seen;
            for (int part : F.parts[w]) {
                if (std::find(seen.begin(), seen.end(), part) != seen.end()) continue;
                seen.push_back(part);
                SparseVec inner = F.alpha(part, w);
                svec_add_to(out, F.alpha(-1 - part, inner));
            }
            return out;
        }
        // j == 1: L(1) = sum_{m>=1} alpha(-m) alpha(m+1)
        std::vector<int> seen;
        for (int part : F.parts[w]) {
            if (part < 2) continue;
            if (std::find(seen.begin(), seen.end(), part) != seen.end()) continue;
            seen.push_back(part);
            SparseVec inner = F.alpha(part, w);
            svec_add_to(out, F.alpha(-(part - 1), inner));
        }
        return out;
    };
    return V;
}

} // namespace vtx
