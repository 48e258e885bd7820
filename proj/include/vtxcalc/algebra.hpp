#ifndef VTXCALC_ALGEBRA_HPP
#define VTXCALC_ALGEBRA_HPP

#include "vtxcalc/group.hpp"
#include "vtxcalc/param_scalar.hpp"
#include "vtxcalc/rational_fn.hpp"
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vtx {

/// Sparse vector over a space basis: index -> coefficient.
using SparseVec = std::map<int, ParamScalar>;

SparseVec svec_scale(const SparseVec& v, const ParamScalar& c);
SparseVec& svec_add_to(SparseVec& dst, const SparseVec& src, const ParamScalar& c = ParamScalar::one());
bool svec_is_zero(const SparseVec& v);
std::string svec_str(const SparseVec& v, const std::vector<std::string>& names);

struct BasisVec {
    std::string name;
    int weight = 0;
    GDeg degree;
};

struct SpaceData {
    std::string name;
    AbelianGroup group;
    std::vector<BasisVec> basis;
    int min_weight = 0;
    int model_cutoff = 0; // internal table bound; exact results up to here
    bool complete = false; // true when nothing exists beyond the cutoff
    std::map<std::string, int> index;
    std::map<int, std::vector<int>> by_weight;

    void finish(); // builds index/by_weight/min_weight
    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(const std::string& n) const;
};

/// Component backends: exact within the model cutoff. Queried only at
/// weights inside [min_weight, model_cutoff]; everything else is resolved
/// by the wrapper (zero below, TruncationOverflow above).
using CompFn = std::function<SparseVec(int, long, int)>;
using LFn = std::function<SparseVec(int, int)>; // (j in -1..1, index)

class VertexAlgebra;

/// A graded module with rank-finite doubly homogeneous pieces, truncated
/// at a weight cutoff. The algebra acting on it is shared; "V as a module
/// over itself" is such a module too.
class GradedModule {
public:
    std::shared_ptr<const VertexAlgebra> alg;
    SpaceData data;
    CompFn compfn;
    LFn lfn;

    int dim() const { return data.dim(); }
    int weight(int i) const { return data.basis[i].weight; }
    const GDeg& degree(int i) const { return data.basis[i].degree; }
    const std::string& name_of(int i) const { return data.basis[i].name; }
    int cutoff() const { return data.model_cutoff; }

    /// weight of (u)_k w
    long comp_weight(int u, long k, int w) const;
    /// Y_W(u, x)w component at x^{-k-1}; exact or TruncationOverflow
    const SparseVec& comp(int u, long k, int w) const;
    /// L(j) w for j = -1, 0, 1
    const SparseVec& L(int j, int w) const;
    SparseVec apply_L(int j, const SparseVec& v) const;

private:
    struct Key {
        int u; long k; int w;
        bool operator==(const Key& o) const { return u == o.u && k == o.k && w == o.w; }
    };
    struct KeyHash {
        size_t operator()(const Key& x) const {
            return ((static_cast<size_t>(x.u) * 1315423911u) ^ (static_cast<size_t>(x.k + 4096) << 20)
                    ^ static_cast<size_t>(x.w)) * 2654435761u;
        }
    };
    mutable std::unordered_map<Key, SparseVec, KeyHash> memo_;
    mutable std::unordered_map<long, SparseVec> lmemo_;
};

/// Mobius vertex algebra data: basis, vacuum, sparse Y-components, the
/// sl(2) operators, optional central charge. Also owns the adjoint-module
/// view of itself.
class VertexAlgebra : public std::enable_shared_from_this<VertexAlgebra> {
public:
    SpaceData data;
    SparseVec vacuum_vec;
    std::optional<ParamScalar> central_charge;
    CompFn compfn; // Y(u, x)v on V itself
    LFn lfn;

    int dim() const { return data.dim(); }
    int weight(int i) const { return data.basis[i].weight; }
    const GDeg& degree(int i) const { return data.basis[i].degree; }
    const std::string& name_of(int i) const { return data.basis[i].name; }

    const SparseVec& comp(int u, long k, int v) const { return adjoint().comp(u, k, v); }
    const SparseVec& L(int j, int v) const { return adjoint().L(j, v); }
    SparseVec apply_L(int j, const SparseVec& v) const { return adjoint().apply_L(j, v); }
    /// L(1)^j u, zero once nilpotency kicks in
    SparseVec L1_pow(int j, int u) const;

    /// V acting on itself
    const GradedModule& adjoint() const;

private:
    mutable std::shared_ptr<GradedModule> adjoint_;
};

// ---- derived operations ----

/// e^{xL(1)} (-x^-2)^{L(0)} u as a map x-exponent -> algebra vector
std::map<int, SparseVec> conjugate_vo(const VertexAlgebra& V, const SparseVec& u);

/// component (Y^o_W(u, x))_n w = u^o_(n) w; exact or TruncationOverflow
SparseVec ocomp(const GradedModule& M, int u, long n, int w);
SparseVec ocomp(const GradedModule& M, const SparseVec& u, long n, int w);
/// weight the result of ocomp would have (u homogeneous)
long ocomp_weight(const GradedModule& M, int u, long n, int w);

/// Y^o_W(u, x)w restricted to components of weight <= max_weight
/// (max_weight = -1 means the module cutoff): x-exponent -> vector
std::map<int, SparseVec> y_opposite(const GradedModule& M, const SparseVec& u, int w,
                                    int max_weight = -1);

/// contragredient module W' on the graded dual basis
std::shared_ptr<GradedModule> contragredient(const GradedModule& M);

// ---- loop elements: finite sums of v (x) f(t) ----

struct LoopTerm {
    SparseVec vec;
    RationalFn f;
};
using LoopElement = std::vector<LoopTerm>;

LoopElement loop_scaled(const LoopElement& xi, const ParamScalar& c);

/// (v (x) f(t))^o = v^o f(t^-1), with v^o = (-1)^h sum_m (1/m!) L(1)^m v
/// (x) t^{-m-2+2h} on homogeneous v of weight h
LoopElement o_involution(const VertexAlgebra& V, const LoopElement& xi);

/// translation t -> t - z on every term (the two iota-tagged variants
/// agree as rational functions); Sign::O composes with the o-involution
enum class TranslateSign { Plus, Minus, O };
LoopElement translate_pm(const VertexAlgebra& V, const LoopElement& xi, TranslateSign sign);

/// sum_n a_n v_n w for the iota_dir expansion of each f; exact or
/// TruncationOverflow
SparseVec tau_W(const GradedModule& M, const LoopElement& xi, IotaDir dir, int w);

/// generic opposite-map machinery: a linear map Z(.,x): V -> U[[x,x^-1]]
/// given by its components; target weights come from `weight_of`
struct ZMap {
    std::function<SparseVec(int, long)> comp; // component of Z(v, x) at x^{-n-1}
    std::function<long(int)> weight_of;       // weight of a target basis index
    int max_weight = 0;                       // representable bound of the target
};
ZMap z_opposite(const VertexAlgebra& V, const ZMap& Z);

} // namespace vtx

#endif
