#ifndef VTXCALC_INSTANCES_HPP
#define VTXCALC_INSTANCES_HPP

#include "vtxcalc/algebra.hpp"
#include <memory>

namespace vtx {

/// Finite-dimensional unital commutative associative algebra over Q with
/// optional group degrees. Laws are checked at construction, with witness
/// triples in the exceptions.
struct CommAlgebraData {
    std::string name;
    AbelianGroup group;
    std::vector<std::string> names;
    std::vector<GDeg> degrees; // empty = all zero
    // product[i][j] = coefficients of e_i * e_j
    std::vector<std::vector<SparseVec>> product;
    SparseVec unit;

    int dim() const { return static_cast<int>(names.size()); }
    void check() const; // NotCommutative / NotAssociative / NoUnit
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
};

/// Y(u, x)v = u.v x^0...: only the (-1)-component acts, all weights 0,
/// omega = 0, L(j) = 0.
std::shared_ptr<VertexAlgebra> mk_commalg_voa(const CommAlgebraData& data);

/// A-module from action matrices (act[v] = matrix of e_v, column w ->
/// SparseVec); checked against the algebra laws.
std::shared_ptr<GradedModule> mk_commalg_module(const std::shared_ptr<VertexAlgebra>& V,
                                                const CommAlgebraData& data,
                                                const std::string& name,
                                                const std::vector<std::string>& basis_names,
                                                const std::vector<std::vector<SparseVec>>& act,
                                                const std::vector<GDeg>& degrees = {});

// canned commutative algebras
CommAlgebraData commalg_q();        // Q
CommAlgebraData commalg_a2();       // Q[s]/(s^2)
CommAlgebraData commalg_qz2();      // group algebra Q[Z/2], Z/2-graded
CommAlgebraData commalg_qq();       // Q x Q

/// named modules over a canned algebra: "reg", and per algebra extras
/// ("quot" for a2, "e1"/"e2" for qq)
std::shared_ptr<GradedModule> commalg_module(const std::shared_ptr<VertexAlgebra>& V,
                                             const CommAlgebraData& data,
                                             const std::string& which);

/// Rank-1 Heisenberg (free boson) with the momentum-zero Fock space,
/// tabulated lazily up to model_cutoff. Returns the algebra; F0 is its
/// adjoint module.
std::shared_ptr<VertexAlgebra> mk_heisenberg(int model_cutoff);

/// partitions of weight <= cutoff in the canonical basis order
std::vector<std::vector<int>> fock_partitions(int cutoff);

} // namespace vtx

#endif
