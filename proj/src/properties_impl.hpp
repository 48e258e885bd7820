// internal helpers shared by the property checkers
#ifndef VTXCALC_PROPERTIES_IMPL_HPP
#define VTXCALC_PROPERTIES_IMPL_HPP

#include "vtxcalc/properties.hpp"
#include "vtxcalc/series.hpp"
#include <functional>

namespace vtx {
namespace detail {

inline Series::Atom katom(std::initializer_list<int> mono, long c = 1, int ze = 0) {
    Series::Atom a;
    a.coef = rat(c);
    a.zexp = ze;
    a.mono = Expo(mono);
    return a;
}

// standard two-variable kernels over (x0, x1)
Series kernel_A(const VarSet& v); // x0^-1 d((x1^-1 - z)/x0)
Series kernel_B(const VarSet& v); // z^-1  d((x1^-1 - x0)/z)
Series kernel_C(const VarSet& v); // x0^-1 d((z - x1^-1)/(-x0))
Series kernel_D(const VarSet& v); // z^-1  d((x1 - x0)/z)
Series kernel_E(const VarSet& v); // x0^-1 d((x1 - z)/x0)
Series kernel_F(const VarSet& v); // x0^-1 d((z - x1)/(-x0))

std::string ps_str(const ParamScalar& p);
std::string wexp(const Expo& e, const VarSet& v);

PropertyReport make_report(const std::string& id, const std::string& context,
                           const std::string& window);

// compare two series on a window into an existing report
void compare_series(PropertyReport& rep, const Series& lhs, const Series& rhs, const Window& w,
                    const std::string& tag);

// compare vector-valued finite windows
using VecWindow = std::map<Expo, SparseVec>;
void compare_vec_windows(PropertyReport& rep, const VecWindow& lhs, const VecWindow& rhs,
                         const Window& w, const VarSet& vars, const std::vector<std::string>& names,
                         const std::string& tag);

// coefficient of a kernel-times-finite product at a point
ParamScalar kernel_times_finite(const Series& kernel, const std::map<Expo, ParamScalar>& finite,
                                const Expo& at);
SparseVec kernel_times_finite_vec(const Series& kernel, const VecWindow& finite, const Expo& at);

// (tau_flavor(v (x) t^m) lam)(pair), composed variants memoized by caller
ParamScalar eval_tau(CheckContext& ctx, Flavor f, const SparseVec& v, long m, const DualFn& lam,
                     int i, int j);

// row vector of an action component as a functional-space map
using RowVec = std::map<std::pair<int, int>, ParamScalar>;
struct RowInfo {
    RowVec vec;
    long min_missing = LONG_MAX;
};
struct OpSpec {
    Flavor flavor = Flavor::P;
    bool is_L = false;
    SparseVec v;
    long m = 0;
    int jop = 0;
};
RowInfo op_rowvec(CheckContext& ctx, const OpSpec& op, int i, int j);
RowInfo compose_rowvec(CheckContext& ctx, const OpSpec& outer, const OpSpec& inner, int i, int j);

std::string pair_name(const CheckContext& ctx, int i, int j);

// scan max x-support bound of Y'(v, x)lambda over given pairs; returns the
// largest m with a nonzero coefficient, or LONG_MIN
long scan_supmax(CheckContext& ctx, Flavor f, const SparseVec& v, const DualFn& lam,
                 const std::vector<std::pair<int, int>>& pairs, long m_lo, long m_hi);

} // namespace detail
} // namespace vtx

#endif
