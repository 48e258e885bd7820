#include "vtxcalc/series.hpp"
#include "vtxcalc/errors.hpp"
#include <algorithm>
#include <set>
#include <sstream>

namespace vtx {

namespace {

Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) throw CalcError("0 raised to nonpositive power in kernel");
    Rational b = e > 0 ? base : Rational(1) / base;
    Rational r(1);
    for (long i = 0; i < std::abs(e); ++i) r *= b;
    r.canonicalize();
    return r;
}

Rational gen_binom_rat(const Rational& alpha, long k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= (alpha - Rational(i));
    Rational kf(1);
    for (long i = 2; i <= k; ++i) kf *= Rational(i);
    Rational r = num / kf;
    r.canonicalize();
    return r;
}

// Solve n*u + k*v = rhs for a unique rational (n, k); returns false when
// inconsistent. Requires u, v linearly independent (checked by caller).
bool solve_2(const Expo& u, const Expo& v, const Expo& rhs, Rational& n, Rational& k) {
    int dim = rhs.dim;
    int r0 = -1, r1 = -1;
    long det = 0;
    for (int i = 0; i < dim && r1 < 0; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            long d = static_cast<long>(u.e[i]) * v.e[j] - static_cast<long>(u.e[j]) * v.e[i];
            if (d != 0) { r0 = i; r1 = j; det = d; break; }
        }
    }
    if (r1 < 0) return false;
    n = Rational(static_cast<long>(rhs.e[r0]) * v.e[r1] - static_cast<long>(rhs.e[r1]) * v.e[r0], det);
    k = Rational(static_cast<long>(u.e[r0]) * rhs.e[r1] - static_cast<long>(u.e[r1]) * rhs.e[r0], det);
    n.canonicalize();
    k.canonicalize();
    // verify remaining rows
    for (int i = 0; i < dim; ++i) {
        if (Rational(u.e[i]) * n + Rational(v.e[i]) * k != Rational(rhs.e[i])) return false;
    }
    return true;
}

bool rational_is_integer(const Rational& r, long& out) {
    if (r.get_den() != 1) return false;
    out = static_cast<long>(r.get_num().get_si());
    return true;
}

bool solve_1(const Expo& u, const Expo& rhs, long& n) {
    int dim = rhs.dim;
    int piv = -1;
    for (int i = 0; i < dim; ++i)
        if (u.e[i] != 0) { piv = i; break; }
    if (piv < 0) return false;
    if (rhs.e[piv] % u.e[piv] != 0) return false;
    n = rhs.e[piv] / u.e[piv];
    for (int i = 0; i < dim; ++i)
        if (static_cast<long>(u.e[i]) * n != rhs.e[i]) return false;
    return true;
}

void require_relation_free(const Cone& c, const char* who) {
    if (c.gens.empty()) return;
    if (!gordan_separator(c.base.dim, c.gens))
        throw CalcError(std::string(who) + ": support atom has an internal relation");
}

} // namespace

struct Series::Node {
    VarSet vars;
    std::vector<Cone> support;
    std::function<ParamScalar(const Expo&)> raw;
    mutable std::unordered_map<Expo, ParamScalar, ExpoHash> memo;
};

const VarSet& Series::vars() const { return n_->vars; }
const std::vector<Cone>& Series::support() const { return n_->support; }

ParamScalar Series::coeff(const Expo& e) const {
    auto it = n_->memo.find(e);
    if (it != n_->memo.end()) return it->second;
    ParamScalar c = n_->raw(e);
    // cap keeps window scans over throwaway top-level nodes from hoarding
    if (n_->memo.size() < (1u << 18)) n_->memo.emplace(e, c);
    return c;
}

Series Series::make(VarSet vars, std::vector<Cone> support,
                    std::function<ParamScalar(const Expo&)> raw) {
    auto node = std::make_shared<Node>();
    node->vars = std::move(vars);
    for (auto& c : support) c.drop_zero_gens();
    node->support = std::move(support);
    node->raw = std::move(raw);
    return Series(std::move(node));
}

Series Series::from_function(const VarSet& vars, std::vector<Cone> support,
                             std::function<ParamScalar(const Expo&)> fn) {
    return make(vars, std::move(support), std::move(fn));
}

Series Series::zero(const VarSet& vars) {
    return make(vars, {}, [](const Expo&) { return ParamScalar(); });
}

Series Series::constant(const VarSet& vars, const ParamScalar& c) {
    if (c.is_zero()) return zero(vars);
    Expo m(static_cast<std::uint8_t>(vars.size()));
    return monomial(vars, m, c);
}

Series Series::monomial(const VarSet& vars, const Expo& m, const ParamScalar& c) {
    if (c.is_zero()) return zero(vars);
    return make(vars, {Cone::point(m)}, [m, c](const Expo& e) {
        return e == m ? c : ParamScalar();
    });
}

Series Series::finite(const VarSet& vars, const std::map<Expo, ParamScalar>& terms) {
    std::vector<Cone> sup;
    auto tbl = std::make_shared<std::map<Expo, ParamScalar>>();
    for (const auto& kv : terms) {
        if (kv.second.is_zero()) continue;
        sup.push_back(Cone::point(kv.first));
        (*tbl)[kv.first] = kv.second;
    }
    return make(vars, std::move(sup), [tbl](const Expo& e) {
        auto it = tbl->find(e);
        return it == tbl->end() ? ParamScalar() : it->second;
    });
}

Series Series::delta_kernel(const VarSet& vars, const Atom& pref,
                            const Atom& a1, const Atom& a2, const Atom& den) {
    Expo u = a1.mono - den.mono;
    Expo v = a2.mono - a1.mono;
    {
        Rational tn, tk;
        Expo probe = u; // u = 1*u + 0*v must be the unique representation
        if (!solve_2(u, v, probe, tn, tk) || tn != 1 || tk != 0)
            throw CalcError("delta_kernel: numerator/denominator directions are dependent");
    }
    Cone upper{pref.mono, {u, v}};
    Cone lower{pref.mono - u, {-u, v}};
    require_relation_free(upper, "delta_kernel");
    require_relation_free(lower, "delta_kernel");

    Atom P = pref, A1 = a1, A2 = a2, D = den;
    auto fn = [P, A1, A2, D, u, v](const Expo& e) -> ParamScalar {
        Rational rn, rk;
        if (!solve_2(u, v, e - P.mono, rn, rk)) return ParamScalar();
        long n, k;
        if (!rational_is_integer(rn, n) || !rational_is_integer(rk, k)) return ParamScalar();
        if (k < 0) return ParamScalar();
        Rational c = P.coef * gen_binom(n, k) * rat_pow(A1.coef, n - k) * rat_pow(A2.coef, k)
                     * rat_pow(D.coef, -n);
        int zz = P.zexp + A1.zexp * static_cast<int>(n - k) + A2.zexp * static_cast<int>(k)
                 - D.zexp * static_cast<int>(n);
        return ParamScalar(zz, c);
    };
    return make(vars, {upper, lower}, fn);
}

Series Series::delta_simple(const VarSet& vars, const Atom& pref,
                            const Atom& a1, const Atom& den) {
    Expo u = a1.mono - den.mono;
    if (u.is_zero()) throw CalcError("delta_simple: degenerate direction");
    Cone upper{pref.mono, {u}};
    Cone lower{pref.mono - u, {-u}};
    Atom P = pref, A1 = a1, D = den;
    auto fn = [P, A1, D, u](const Expo& e) -> ParamScalar {
        long n;
        if (!solve_1(u, e - P.mono, n)) return ParamScalar();
        Rational c = P.coef * rat_pow(A1.coef, n) * rat_pow(D.coef, -n);
        int zz = P.zexp + A1.zexp * static_cast<int>(n) - D.zexp * static_cast<int>(n);
        return ParamScalar(zz, c);
    };
    return make(vars, {upper, lower}, fn);
}

Series Series::binomial_ray(const VarSet& vars, const Atom& head,
                            const Rational& expo, const Rational& ratio,
                            int ratio_zexp, const Expo& step) {
    if (step.is_zero()) throw CalcError("binomial_ray: zero step");
    Cone ray{head.mono, {step}};
    Atom H = head;
    Rational E = expo, R = ratio;
    int rz = ratio_zexp;
    auto fn = [H, E, R, rz, step](const Expo& e) -> ParamScalar {
        long j;
        if (!solve_1(step, e - H.mono, j)) return ParamScalar();
        if (j < 0) return ParamScalar();
        Rational c = H.coef * gen_binom_rat(E, j) * rat_pow(R, j);
        return ParamScalar(H.zexp + rz * static_cast<int>(j), c);
    };
    return make(vars, {ray}, fn);
}

Series operator+(const Series& a, const Series& b) {
    if (!(a.vars() == b.vars())) throw CalcError("series addition: variable sets differ");
    std::vector<Cone> sup = a.support();
    sup.insert(sup.end(), b.support().begin(), b.support().end());
    Series A = a, B = b;
    return Series::make(a.vars(), std::move(sup),
                        [A, B](const Expo& e) { return A.coeff(e) + B.coeff(e); });
}

Series Series::operator-() const {
    Series A = *this;
    return make(vars(), support(), [A](const Expo& e) { return -A.coeff(e); });
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::scaled(const ParamScalar& c) const {
    if (c.is_zero()) return zero(vars());
    Series A = *this;
    ParamScalar cc = c;
    return make(vars(), support(), [A, cc](const Expo& e) { return A.coeff(e) * cc; });
}

Series Series::shifted(const Expo& m) const {
    Series A = *this;
    std::vector<Cone> sup;
    for (const auto& c : support()) sup.push_back(c.shifted(m));
    Expo mm = m;
    return make(vars(), std::move(sup), [A, mm](const Expo& e) { return A.coeff(e - mm); });
}

Series operator*(const Series& a, const Series& b) {
    if (!(a.vars() == b.vars())) throw CalcError("series product: variable sets differ");
    if (a.support().empty() || b.support().empty()) return Series::zero(a.vars());
    int dim = a.vars().size();

    struct Pair {
        Expo base_a, base_b;
        std::vector<Expo> gens_a;
        NonnegSolver solver;
    };
    auto pairs = std::make_shared<std::vector<Pair>>();
    std::vector<Cone> sup;
    for (const auto& ca : a.support()) {
        for (const auto& cb : b.support()) {
            std::vector<Expo> cols = ca.gens;
            cols.insert(cols.end(), cb.gens.begin(), cb.gens.end());
            if (!gordan_separator(dim, cols))
                throw IllDefinedProduct("recession cones of factor supports overlap");
            pairs->push_back(Pair{ca.base, cb.base, ca.gens, NonnegSolver(dim, std::move(cols))});
            sup.push_back(ca.minkowski(cb));
        }
    }

    Series A = a, B = b;
    auto fn = [A, B, pairs, dim](const Expo& e) -> ParamScalar {
        std::vector<Expo> cands;
        for (const auto& p : *pairs) {
            Expo rhs = e - p.base_a - p.base_b;
            size_t na = p.gens_a.size();
            p.solver.solve(rhs, [&](const std::vector<long>& x) {
                Expo e1 = p.base_a;
                for (size_t i = 0; i < na; ++i)
                    for (int d = 0; d < dim; ++d)
                        e1.e[d] += static_cast<int>(x[i]) * p.gens_a[i].e[d];
                cands.push_back(e1);
                return true;
            });
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        ParamScalar acc;
        for (const auto& e1 : cands) acc += A.coeff(e1) * B.coeff(e - e1);
        return acc;
    };
    return Series::make(a.vars(), std::move(sup), fn);
}

Series Series::residue(const std::string& var) const {
    int vi = vars().index(var);
    if (vi < 0) throw CalcError("residue: unknown variable " + var);
    VarSet rest;
    for (int i = 0; i < vars().size(); ++i)
        if (i != vi) rest.names.push_back(vars().names[i]);
    auto embed = [vi](const Expo& e) {
        Expo full(static_cast<std::uint8_t>(e.dim + 1));
        int j = 0;
        for (int i = 0; i < full.dim; ++i) full.e[i] = (i == vi) ? -1 : e.e[j++];
        return full;
    };
    std::vector<Cone> sup;
    for (const auto& c : support()) {
        Cone pc;
        pc.base = Expo(static_cast<std::uint8_t>(c.base.dim - 1));
        int j = 0;
        for (int i = 0; i < c.base.dim; ++i)
            if (i != vi) pc.base.e[j++] = c.base.e[i];
        for (const auto& g : c.gens) {
            Expo pg(static_cast<std::uint8_t>(g.dim - 1));
            j = 0;
            for (int i = 0; i < g.dim; ++i)
                if (i != vi) pg.e[j++] = g.e[i];
            pc.gens.push_back(pg);
        }
        pc.drop_zero_gens();
        sup.push_back(std::move(pc));
    }
    Series A = *this;
    return make(rest, std::move(sup), [A, embed](const Expo& e) { return A.coeff(embed(e)); });
}

Series Series::derivative(const std::string& var) const {
    int vi = vars().index(var);
    if (vi < 0) throw CalcError("derivative: unknown variable " + var);
    std::vector<Cone> sup;
    Expo down(static_cast<std::uint8_t>(vars().size()));
    down.e[vi] = -1;
    for (const auto& c : support()) sup.push_back(c.shifted(down));
    Series A = *this;
    return make(vars(), std::move(sup), [A, vi](const Expo& e) {
        Expo up = e;
        up.e[vi] += 1;
        return A.coeff(up).scaled(Rational(e.e[vi] + 1));
    });
}

Series Series::extended(const VarSet& bigger) const {
    std::vector<int> where(vars().size());
    for (int i = 0; i < vars().size(); ++i) {
        where[i] = bigger.index(vars().names[i]);
        if (where[i] < 0) throw CalcError("extend: variable " + vars().names[i] + " missing");
    }
    std::vector<bool> used(bigger.size(), false);
    for (int w : where) used[w] = true;
    auto project = [where, used, nd = vars().size()](const Expo& e, bool& ok) {
        Expo small(static_cast<std::uint8_t>(nd));
        ok = true;
        for (size_t i = 0; i < used.size(); ++i)
            if (!used[i] && e.e[static_cast<int>(i)] != 0) { ok = false; return small; }
        for (int i = 0; i < nd; ++i) small.e[i] = e.e[where[i]];
        return small;
    };
    auto lift = [where, bd = bigger.size()](const Expo& e) {
        Expo big(static_cast<std::uint8_t>(bd));
        for (size_t i = 0; i < where.size(); ++i) big.e[where[i]] = e.e[static_cast<int>(i)];
        return big;
    };
    std::vector<Cone> sup;
    for (const auto& c : support()) {
        Cone bc;
        bc.base = lift(c.base);
        for (const auto& g : c.gens) bc.gens.push_back(lift(g));
        sup.push_back(std::move(bc));
    }
    Series A = *this;
    return make(bigger, std::move(sup), [A, project](const Expo& e) {
        bool ok;
        Expo small = project(e, ok);
        return ok ? A.coeff(small) : ParamScalar();
    });
}

Series Series::transformed_var(const std::string& var, int sign, int shift) const {
    if (sign != 1 && sign != -1) throw CalcError("transformed_var: sign must be +-1");
    int vi = vars().index(var);
    if (vi < 0) throw CalcError("transformed_var: unknown variable " + var);
    std::vector<Cone> sup;
    for (const auto& c : support()) {
        Cone tc = c;
        // solve sign*x + shift = old base coordinate
        tc.base.e[vi] = sign * (c.base.e[vi] - shift);
        for (auto& g : tc.gens) g.e[vi] = sign * g.e[vi];
        sup.push_back(std::move(tc));
    }
    Series A = *this;
    return make(vars(), std::move(sup), [A, vi, sign, shift](const Expo& e) {
        Expo pre = e;
        pre.e[vi] = sign * e.e[vi] + shift;
        return A.coeff(pre);
    });
}

std::map<Expo, ParamScalar> Series::materialize(const Window& w) const {
    std::map<Expo, ParamScalar> out;
    w.for_each([&](const Expo& e) {
        ParamScalar c = coeff(e);
        if (!c.is_zero()) out[e] = c;
    });
    return out;
}

IdentityResult check_identity(const Series& lhs, const Series& rhs, const Window& w,
                              size_t witness_cap) {
    if (!(lhs.vars() == rhs.vars()))
        throw CalcError("check_identity: variable sets differ");
    IdentityResult r;
    w.for_each([&](const Expo& e) {
        ++r.points_checked;
        ParamScalar a = lhs.coeff(e), b = rhs.coeff(e);
        if (a != b) {
            r.pass = false;
            if (r.mismatches.size() < witness_cap) r.mismatches.push_back({e, a, b});
        }
    });
    return r;
}

} // namespace vtx
