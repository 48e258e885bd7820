#ifndef VTXCALC_DUAL_HPP
#define VTXCALC_DUAL_HPP

#include "vtxcalc/algebra.hpp"
#include "vtxcalc/series.hpp"
#include <climits>
#include <map>
#include <memory>
#include <random>
#include <vector>

namespace vtx {

/// Shared context for actions on (W1 (x) W2)*: the module pair plus row
/// caches. A "row" unfolds one action component at one basis pair p into
/// the finite list of pairs q and coefficients with
///     (op lambda)(p) = sum c * lambda(q).
/// Rows are independent of lambda, so every functional and every matrix
/// check reuses them.
class DualCtx {
public:
    const GradedModule* W1;
    const GradedModule* W2;

    DualCtx(const GradedModule* w1, const GradedModule* w2) : W1(w1), W2(w2) {}

    struct PairTerm {
        int i, j;
        ParamScalar c;
    };
    struct Row {
        std::vector<PairTerm> terms;
        // total pair weights of contributions that fell outside the model;
        // an evaluation is exact only if lambda provably vanishes there
        std::vector<long> missing;
    };

    const Row& row_tauP(int v, long m, int i, int j);
    const Row& row_tauQ(int v, long m, int i, int j);
    const Row& row_LP(int j_op, int i, int j);
    const Row& row_LQ(int j_op, int i, int j);

    long pair_weight(int i, int j) const {
        return static_cast<long>(W1->weight(i)) + W2->weight(j);
    }
    GDeg pair_degree(int i, int j) const {
        return W1->data.group.add(W1->degree(i), W2->degree(j));
    }

private:
    struct RKey {
        int op; long a; int b, i, j;
        bool operator<(const RKey& o) const {
            if (op != o.op) return op < o.op;
            if (a != o.a) return a < o.a;
            if (b != o.b) return b < o.b;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::map<RKey, Row> cache_;
};

using DualCtxPtr = std::shared_ptr<DualCtx>;

/// Exact functional on the pair space: a lazy evaluation DAG with
/// memoization. Values beyond the stored region are certified zero for
/// finitely supported functionals and computed from the defining formula
/// for canonical ones; anything else raises TruncationOverflow.
class DualFn {
public:
    DualFn() = default;

    ParamScalar operator()(int i, int j) const;
    const DualCtx& ctx() const;
    /// total pair weight above which the functional provably vanishes
    /// (LONG_MAX = no certificate)
    long vanishes_above() const;
    bool valid() const { return static_cast<bool>(n_); }

    static DualFn zero(DualCtxPtr c);
    static DualFn table(DualCtxPtr c, std::map<std::pair<int, int>, ParamScalar> values);
    static DualFn delta(DualCtxPtr c, int i, int j);
    /// lambda(v (x) w) = <w', Y_W(v, z) w>: the canonical intertwining-map
    /// functional; W1 must be the algebra acting on itself
    static DualFn canonical(DualCtxPtr c, const GradedModule& W, int wprime);
    static DualFn lincomb(std::vector<std::pair<ParamScalar, DualFn>> parts);
    /// small random rationals on pairs of total weight <= bound
    static DualFn random(DualCtxPtr c, std::mt19937_64& rng, long weight_bound);

    DualFn scaled(const ParamScalar& c) const;
    friend DualFn operator+(const DualFn& a, const DualFn& b);
    friend DualFn operator-(const DualFn& a, const DualFn& b);

    /// restriction to the A~-degree -beta component of the pair space
    DualFn project_beta(const GDeg& beta) const;

    /// materialize on all stored pairs with total weight <= bound
    std::map<std::pair<int, int>, ParamScalar> materialize(long weight_bound) const;

    struct Node;
    explicit DualFn(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

// ---- component actions ----

/// tau_P(v (x) t^m) lambda
DualFn tauP_comp(DualCtxPtr c, const SparseVec& v, long m, const DualFn& lam);
/// tau_Q(v (x) t^m) lambda
DualFn tauQ_comp(DualCtxPtr c, const SparseVec& v, long m, const DualFn& lam);
/// L'_P(j), L'_Q(j) for j = -1, 0, 1
DualFn LP_op(DualCtxPtr c, int j, const DualFn& lam);
DualFn LQ_op(DualCtxPtr c, int j, const DualFn& lam);

/// tau_P(xi) lambda for xi in V (x) iota_+ C[t,t^-1,(z^-1 - t)^-1]
DualFn tauP_apply(DualCtxPtr c, const LoopElement& xi, const DualFn& lam);
/// tau_Q(xi) lambda for xi in V (x) iota_+ C[t,t^-1,(z + t)^-1]
DualFn tauQ_apply(DualCtxPtr c, const LoopElement& xi, const DualFn& lam);

/// adjoint action on W1 (x) W2 (completed): sigma_P(xi)(w1 (x) w2)
std::map<std::pair<int, int>, ParamScalar> sigmaP_apply(DualCtxPtr c, const LoopElement& xi,
                                                        int w1, int w2);

/// Delta_P(v (x) t^n) = (v (x) (z+t)^n, v (x) t^n) acting on the two slots
std::pair<LoopElement, LoopElement> deltaP_coproduct(const VertexAlgebra& V, const SparseVec& v,
                                                     int n);

/// (Y'_P(v, x) lambda)(w1 (x) w2) as a series in x (components by rows)
Series yP_series(DualCtxPtr c, const SparseVec& v, const DualFn& lam, int w1, int w2);
/// (Y'_Q(v, x0) lambda)(w1 (x) w2)
Series yQ_series(DualCtxPtr c, const SparseVec& v, const DualFn& lam, int w1, int w2);

/// exact Laurent polynomial on a window of x-exponents
std::map<int, ParamScalar> yP_prime(DualCtxPtr c, const SparseVec& v, const DualFn& lam,
                                    int w1, int w2, int xlo, int xhi);
std::map<int, ParamScalar> yQ_prime(DualCtxPtr c, const SparseVec& v, const DualFn& lam,
                                    int w1, int w2, int xlo, int xhi);

} // namespace vtx

#endif
