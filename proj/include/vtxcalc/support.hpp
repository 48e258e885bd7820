#ifndef VTXCALC_SUPPORT_HPP
#define VTXCALC_SUPPORT_HPP

#include "vtxcalc/exponent.hpp"
#include "vtxcalc/rational.hpp"
#include <optional>
#include <vector>
#include <functional>

namespace vtx {

/// One support atom: { base + sum n_i * gens[i] : n_i >= 0 }. An empty
/// generator list is a single lattice point. Lines are encoded by listing
/// a generator together with its negative.
struct Cone {
    Expo base;
    std::vector<Expo> gens;

    static Cone point(const Expo& b) { return Cone{b, {}}; }

    Cone shifted(const Expo& d) const { return Cone{base + d, gens}; }
    Cone minkowski(const Cone& o) const {
        Cone r{base + o.base, gens};
        r.gens.insert(r.gens.end(), o.gens.begin(), o.gens.end());
        return r;
    }
    void drop_zero_gens();
};

/// Searches for a rational functional phi with phi . c >= 1 for every
/// column (Fourier-Motzkin elimination). By Gordan's theorem such a phi
/// exists iff the columns admit no nonzero nonnegative combination equal
/// to zero, which is exactly the recession-cone admissibility test for
/// series products.
std::optional<std::vector<Rational>> gordan_separator(int dim, const std::vector<Expo>& columns);

/// Precomputed integer solver for A x = rhs, x >= 0, with A's columns
/// fixed and rhs varying per query. Smith reduction is done once; each
/// query enumerates the (finitely many, by the separator condition)
/// nonnegative lattice solutions.
class NonnegSolver {
public:
    /// requires a separator to exist (checked; throws CalcError otherwise)
    NonnegSolver(int dim, std::vector<Expo> columns);

    int num_columns() const { return static_cast<int>(cols_.size()); }

    /// visit(x) for every solution; return value of visit = keep going?
    void solve(const Expo& rhs, const std::function<bool(const std::vector<long>&)>& visit) const;

private:
    int dim_;
    std::vector<Expo> cols_;
    int m_ = 0;                     // number of unknowns
    int rank_ = 0;
    std::vector<long> diag_;        // Smith diagonal, size rank_
    std::vector<std::vector<long>> U_; // dim x dim
    std::vector<std::vector<long>> V_; // m x m
};

/// Lattice membership test for a cone atom.
bool cone_contains(const Cone& c, const Expo& x);

/// True if x lies in some atom of the union.
bool support_contains(const std::vector<Cone>& cones, const Expo& x);

} // namespace vtx

#endif
