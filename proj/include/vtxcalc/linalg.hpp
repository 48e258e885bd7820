#ifndef VTXCALC_LINALG_HPP
#define VTXCALC_LINALG_HPP

#include "vtxcalc/param_scalar.hpp"
#include <optional>
#include <vector>

namespace vtx {

// polynomial helpers on Q[z, z^-1] (viewed as Q[z] after clearing z-powers)
ParamScalar ps_gcd(const ParamScalar& a, const ParamScalar& b);
// exact division; throws CalcError if not divisible
ParamScalar ps_divexact(const ParamScalar& a, const ParamScalar& b);

/// Element of the fraction field of Q[z, z^-1], kept gcd-reduced with a
/// z-power-free monic-leading denominator.
struct FracPS {
    ParamScalar num = ParamScalar::zero();
    ParamScalar den = ParamScalar::one();

    FracPS() = default;
    FracPS(ParamScalar n) : num(std::move(n)) {}
    FracPS(ParamScalar n, ParamScalar d);

    bool is_zero() const { return num.is_zero(); }
    FracPS operator+(const FracPS& o) const;
    FracPS operator-(const FracPS& o) const;
    FracPS operator*(const FracPS& o) const;
    FracPS operator/(const FracPS& o) const;
    FracPS operator-() const;
    bool operator==(const FracPS& o) const;

private:
    void reduce();
};

template <typename F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form in place; returns pivot columns.
template <typename F>
std::vector<int> rref(Matrix<F>& A);

int rank_q(Matrix<Rational> A);
int rank_frac(Matrix<FracPS> A);

/// Basis of { x : A x = 0 } over Q.
std::vector<std::vector<Rational>> nullspace_q(Matrix<Rational> A);

/// One solution of A x = b over Q, if consistent.
std::optional<std::vector<Rational>> solve_q(Matrix<Rational> A, std::vector<Rational> b);

/// Solution space of A x = b: particular + homogeneous basis.
struct AffineSolutions {
    bool consistent = false;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> homogeneous;
};
AffineSolutions solve_affine_q(Matrix<Rational> A, std::vector<Rational> b);

} // namespace vtx

#endif
