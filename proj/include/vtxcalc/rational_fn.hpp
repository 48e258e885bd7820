#ifndef VTXCALC_RATIONAL_FN_HPP
#define VTXCALC_RATIONAL_FN_HPP

#include "vtxcalc/param_scalar.hpp"
#include "vtxcalc/series.hpp"
#include <map>
#include <vector>

namespace vtx {

/// Laurent polynomial in t over Q[z, z^-1].
using LaurentT = std::map<int, ParamScalar>;

/// One denominator factor (a + b t)^(-mult), (a, b) != (0, 0).
struct DenFactor {
    ParamScalar a, b;
    int mult = 1;
};

/// Element of the localization Q[z,z^-1][t, t^-1, (z+t)^-1, (z-t)^-1,
/// (z^-1 - t)^-1, ...]: a Laurent numerator over a multiset of linear
/// factors. Kept symbolic; expansion direction is chosen only when an
/// iota map is applied.
class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(LaurentT num) : num_(std::move(num)) { normalize(); }
    RationalFn(LaurentT num, std::vector<DenFactor> den)
        : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFn monomial(int texp, const ParamScalar& c = ParamScalar::one());
    static RationalFn zero() { return RationalFn(); }

    const LaurentT& num() const { return num_; }
    const std::vector<DenFactor>& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    bool is_laurent() const { return den_.empty(); }

    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator+(const RationalFn& o) const; // requires common denominator computation
    RationalFn scaled(const ParamScalar& c) const;
    RationalFn shifted_t(int k) const; // multiply by t^k

    bool operator==(const RationalFn& o) const; // exact, via cross-multiplication

private:
    LaurentT num_;
    std::vector<DenFactor> den_;
    void normalize();
    friend RationalFn rf_translate(const RationalFn&, const ParamScalar&);
    friend RationalFn rf_invert_t(const RationalFn&);
};

/// t -> t + a (exact; negative numerator powers become (a + t) factors).
RationalFn rf_translate(const RationalFn& f, const ParamScalar& a);

/// t -> t^-1, renormalized back into RationalFn form.
RationalFn rf_invert_t(const RationalFn& f);

enum class IotaDir { Plus, Minus };

/// Expansion of f as a series in the single variable "t": iota_plus has
/// finitely many negative powers of t, iota_minus finitely many positive.
/// Factors with a = 0 (or b = 0) degrade to plain monomials.
Series iota_expand(const RationalFn& f, IotaDir dir, const VarSet& tvar = VarSet{"t"});

/// Classification of a denominator factor up to scalar multiple.
enum class FactorType { TOnly, ZPlusT, ZMinusT, ZInvMinusT, Other };
FactorType classify_factor(const DenFactor& f);

std::string rf_str(const RationalFn& f);

} // namespace vtx

#endif
