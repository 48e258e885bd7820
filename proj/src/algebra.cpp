#include "vtxcalc/algebra.hpp"
#include "vtxcalc/errors.hpp"
#include <sstream>

namespace vtx {

namespace {
const SparseVec kEmpty;

Rational inv_factorial(int j) {
    Rational f(1);
    for (int i = 2; i <= j; ++i) f *= Rational(i);
    return Rational(1) / f;
}
} // namespace

SparseVec svec_scale(const SparseVec& v, const ParamScalar& c) {
    SparseVec r;
    if (c.is_zero()) return r;
    for (const auto& t : v) {
        ParamScalar x = t.second * c;
        if (!x.is_zero()) r[t.first] = x;
    }
    return r;
}

SparseVec& svec_add_to(SparseVec& dst, const SparseVec& src, const ParamScalar& c) {
    if (c.is_zero()) return dst;
    for (const auto& t : src) {
        auto it = dst.find(t.first);
        if (it == dst.end()) {
            ParamScalar x = t.second * c;
            if (!x.is_zero()) dst.emplace(t.first, std::move(x));
        } else {
            it->second += t.second * c;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
    return dst;
}

bool svec_is_zero(const SparseVec& v) { return v.empty(); }

std::string svec_str(const SparseVec& v, const std::vector<std::string>& names) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : v) {
        if (!first) os << " + ";
        os << "(" << t.second.str() << ")*" << names[t.first];
        first = false;
    }
    return os.str();
}

void SpaceData::finish() {
    index.clear();
    by_weight.clear();
    for (int i = 0; i < dim(); ++i) {
        if (index.count(basis[i].name))
            throw CalcError("duplicate basis name " + basis[i].name);
        index[basis[i].name] = i;
        by_weight[basis[i].weight].push_back(i);
    }
    min_weight = 0;
    if (!basis.empty()) {
        min_weight = basis[0].weight;
        for (const auto& b : basis) min_weight = std::min(min_weight, b.weight);
    }
}

int SpaceData::index_of(const std::string& n) const {
    auto it = index.find(n);
    if (it == index.end()) throw CalcError("unknown basis vector " + n + " in " + name);
    return it->second;
}

long GradedModule::comp_weight(int u, long k, int w) const {
    return static_cast<long>(alg->weight(u)) + weight(w) - k - 1;
}

const SparseVec& GradedModule::comp(int u, long k, int w) const {
    long wres = comp_weight(u, k, w);
    if (wres < data.min_weight) return kEmpty;
    if (wres > data.model_cutoff && data.complete) return kEmpty;
    if (wres > data.model_cutoff)
        throw TruncationOverflow("component (" + alg->name_of(u) + ")_" + std::to_string(k) +
                                 " " + name_of(w) + " has weight " + std::to_string(wres) +
                                 " > cutoff " + std::to_string(data.model_cutoff) + " in " + data.name);
    Key key{u, k, w};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    SparseVec r = compfn(u, k, w);
    return memo_.emplace(key, std::move(r)).first->second;
}

const SparseVec& GradedModule::L(int j, int w) const {
    if (j < -1 || j > 1) throw CalcError("L(j) only for j = -1, 0, 1");
    // L(j) maps weight p to weight p - j
    int wres = weight(w) - j;
    if (wres < data.min_weight) return kEmpty;
    if (wres > data.model_cutoff && data.complete) return kEmpty;
    if (wres > data.model_cutoff)
        throw TruncationOverflow("L(" + std::to_string(j) + ") " + name_of(w) +
                                 " exceeds cutoff in " + data.name);
    long key = static_cast<long>(w) * 4 + (j + 1);
    auto it = lmemo_.find(key);
    if (it != lmemo_.end()) return it->second;
    SparseVec r = lfn(j, w);
    return lmemo_.emplace(key, std::move(r)).first->second;
}

SparseVec GradedModule::apply_L(int j, const SparseVec& v) const {
    SparseVec r;
    for (const auto& t : v) svec_add_to(r, L(j, t.first), t.second);
    return r;
}

SparseVec VertexAlgebra::L1_pow(int j, int u) const {
    SparseVec r{{u, ParamScalar::one()}};
    for (int i = 0; i < j && !r.empty(); ++i) r = adjoint().apply_L(1, r);
    return r;
}

const GradedModule& VertexAlgebra::adjoint() const {
    if (!adjoint_) {
        auto m = std::make_shared<GradedModule>();
        m->alg = shared_from_this();
        m->data = data;
        m->compfn = compfn;
        m->lfn = lfn;
        adjoint_ = std::move(m);
    }
    return *adjoint_;
}

std::map<int, SparseVec> conjugate_vo(const VertexAlgebra& V, const SparseVec& u) {
    std::map<int, SparseVec> out;
    for (const auto& t : u) {
        int h = V.weight(t.first);
        Rational sign = (h % 2 == 0) ? Rational(1) : Rational(-1);
        for (int j = 0;; ++j) {
            SparseVec lj = V.L1_pow(j, t.first);
            if (lj.empty()) break;
            ParamScalar c = t.second.scaled(sign * inv_factorial(j));
            SparseVec piece = svec_scale(lj, c);
            if (!piece.empty()) svec_add_to(out[j - 2 * h], piece);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

long ocomp_weight(const GradedModule& M, int u, long n, int w) {
    return n + 1 - M.alg->weight(u) + M.weight(w);
}

SparseVec ocomp(const GradedModule& M, int u, long n, int w) {
    const VertexAlgebra& V = *M.alg;
    int h = V.weight(u);
    long wres = ocomp_weight(M, u, n, w);
    if (wres < M.data.min_weight) return {};
    if (wres > M.data.model_cutoff && M.data.complete) return {};
    if (wres > M.data.model_cutoff)
        throw TruncationOverflow("opposite component weight " + std::to_string(wres) +
                                 " > cutoff in " + M.data.name);
    Rational sign = (h % 2 == 0) ? Rational(1) : Rational(-1);
    SparseVec out;
    for (int j = 0;; ++j) {
        SparseVec lj = V.L1_pow(j, u);
        if (lj.empty()) break;
        ParamScalar c = ParamScalar(sign * inv_factorial(j));
        for (const auto& t : lj)
            svec_add_to(out, M.comp(t.first, -n - j - 2 + 2 * h, w), t.second * c);
    }
    return out;
}

SparseVec ocomp(const GradedModule& M, const SparseVec& u, long n, int w) {
    SparseVec out;
    for (const auto& t : u)
        svec_add_to(out, ocomp(M, t.first, n, w), t.second);
    return out;
}

std::map<int, SparseVec> y_opposite(const GradedModule& M, const SparseVec& u, int w,
                                    int max_weight) {
    if (max_weight < 0) max_weight = M.data.model_cutoff;
    if (max_weight > M.data.model_cutoff)
        throw TruncationOverflow("y_opposite asked beyond the model cutoff");
    std::map<int, SparseVec> out;
    for (const auto& t : u) {
        int h = M.alg->weight(t.first);
        // the n-component has weight n + 1 - h + wt(w)
        long nlo = static_cast<long>(M.data.min_weight) + h - 1 - M.weight(w);
        long nhi = static_cast<long>(max_weight) + h - 1 - M.weight(w);
        for (long n = nlo; n <= nhi; ++n) {
            SparseVec piece = svec_scale(ocomp(M, t.first, n, w), t.second);
            if (!piece.empty()) svec_add_to(out[static_cast<int>(-n - 1)], piece);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

std::shared_ptr<GradedModule> contragredient(const GradedModule& M) {
    auto Mp = std::make_shared<GradedModule>();
    Mp->alg = M.alg;
    Mp->data = M.data;
    Mp->data.name = M.data.name + "'";
    for (auto& b : Mp->data.basis) {
        b.name += "'";
        b.degree = M.data.group.neg(b.degree);
    }
    Mp->data.finish();
    const GradedModule* base = &M;
    Mp->compfn = [base](int v, long k, int a) {
        // <(Y'(v))_k a', b> = <a', v^o_(k) b>, and the contributing b sit
        // at weight(a) + wt(v) - k - 1
        long wb = static_cast<long>(base->weight(a)) + base->alg->weight(v) - k - 1;
        SparseVec out;
        auto it = base->data.by_weight.find(static_cast<int>(wb));
        if (it == base->data.by_weight.end()) return out;
        for (int b : it->second) {
            SparseVec ov = ocomp(*base, v, k, b);
            auto f = ov.find(a);
            if (f != ov.end() && !f->second.is_zero()) out[b] = f->second;
        }
        return out;
    };
    Mp->lfn = [base](int j, int a) {
        // <L'(j) a', b> = <a', L(-j) b>
        long wb = static_cast<long>(base->weight(a)) - j;
        SparseVec out;
        auto it = base->data.by_weight.find(static_cast<int>(wb));
        if (it == base->data.by_weight.end()) return out;
        for (int b : it->second) {
            const SparseVec& lv = base->L(-j, b);
            auto f = lv.find(a);
            if (f != lv.end() && !f->second.is_zero()) out[b] = f->second;
        }
        return out;
    };
    return Mp;
}

LoopElement loop_scaled(const LoopElement& xi, const ParamScalar& c) {
    LoopElement out;
    for (const auto& t : xi) out.push_back({t.vec, t.f.scaled(c)});
    return out;
}

LoopElement o_involution(const VertexAlgebra& V, const LoopElement& xi) {
    LoopElement out;
    for (const auto& term : xi) {
        RationalFn finv = rf_invert_t(term.f);
        for (const auto& t : term.vec) {
            int h = V.weight(t.first);
            Rational sign = (h % 2 == 0) ? Rational(1) : Rational(-1);
            for (int j = 0;; ++j) {
                SparseVec lj = V.L1_pow(j, t.first);
                if (lj.empty()) break;
                ParamScalar c = t.second.scaled(sign * inv_factorial(j));
                SparseVec piece = svec_scale(lj, c);
                if (!piece.empty())
                    out.push_back({std::move(piece), finv.shifted_t(-j - 2 + 2 * h)});
            }
        }
    }
    return out;
}

LoopElement translate_pm(const VertexAlgebra& V, const LoopElement& xi, TranslateSign sign) {
    for (const auto& term : xi)
        for (const auto& d : term.f.den())
            if (classify_factor(d) != FactorType::ZPlusT)
                throw WrongLocalization("translate_pm wants (z + t) denominators only, got " +
                                        rf_str(term.f));
    LoopElement out;
    for (const auto& term : xi)
        out.push_back({term.vec, rf_translate(term.f, -ParamScalar::z(1))});
    if (sign == TranslateSign::O) return o_involution(V, out);
    return out;
}

SparseVec tau_W(const GradedModule& M, const LoopElement& xi, IotaDir dir, int w) {
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
            if (unbounded_below && !M.data.complete)
                throw TruncationOverflow("tau_W: expansion reaches arbitrarily low t-powers");
            if (wt_top - mn - 1 > M.data.model_cutoff && !M.data.complete)
                throw TruncationOverflow("tau_W: components below the weight cutoff reach of " +
                                         M.data.name);
            long nlo = std::max(mn, wt_top - 1 - M.data.model_cutoff);
            long nhi = wt_top - 1 - M.data.min_weight;
            for (long n = nlo; n <= nhi; ++n) {
                ParamScalar a = s.coeff(Expo{static_cast<int>(n)});
                if (a.is_zero()) continue;
                svec_add_to(out, M.comp(t.first, n, w), a * t.second);
            }
        }
    }
    return out;
}

ZMap z_opposite(const VertexAlgebra& V, const ZMap& Z) {
    ZMap out;
    out.weight_of = Z.weight_of;
    out.max_weight = Z.max_weight;
    const VertexAlgebra* vp = &V;
    auto inner = Z.comp;
    out.comp = [vp, inner](int v, long n) {
        int h = vp->weight(v);
        Rational sign = (h % 2 == 0) ? Rational(1) : Rational(-1);
        SparseVec acc;
        for (int j = 0;; ++j) {
            SparseVec lj = vp->L1_pow(j, v);
            if (lj.empty()) break;
            ParamScalar c = ParamScalar(sign * inv_factorial(j));
            for (const auto& t : lj)
                svec_add_to(acc, inner(t.first, -n - j - 2 + 2 * h), t.second * c);
        }
        return acc;
    };
    return out;
}

} // namespace vtx
