#ifndef VTXCALC_SERIES_HPP
#define VTXCALC_SERIES_HPP

#include "vtxcalc/exponent.hpp"
#include "vtxcalc/param_scalar.hpp"
#include "vtxcalc/support.hpp"
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace vtx {

/// Multivariate formal series given by an exact coefficient function plus
/// a polyhedral support certificate: the coefficient vanishes outside the
/// union of the cone atoms. Products check the recession-cone condition
/// up front and fail fast instead of diverging.
///
/// Nodes are immutable; Series is a cheap shared handle. Coefficients are
/// memoized per node.
class Series {
public:
    Series() = default;

    const VarSet& vars() const;
    const std::vector<Cone>& support() const;
    ParamScalar coeff(const Expo& e) const;
    bool valid() const { return static_cast<bool>(n_); }

    // ---- constructors ----
    static Series zero(const VarSet& vars);
    static Series constant(const VarSet& vars, const ParamScalar& c);
    static Series monomial(const VarSet& vars, const Expo& m, const ParamScalar& c);
    static Series finite(const VarSet& vars, const std::map<Expo, ParamScalar>& terms);

    /// One monomial factor of a delta kernel: coef * z^zexp * x^mono.
    struct Atom {
        Rational coef;
        int zexp = 0;
        Expo mono;
    };

    /// pref * sum_{n in Z} (a1 + a2)^n * den^{-n}, with (a1 + a2)^n
    /// expanded in nonnegative powers of the second-written term a2.
    /// Covers every displayed kernel shape: plain x0^{-1} delta((x1-x2)/x0),
    /// scalar-denominator z^{-1} delta((x1^{-1}-x0)/z), inverse-variable
    /// denominators x2 delta(../x2^{-1}), and sign-carrying denominators.
    static Series delta_kernel(const VarSet& vars, const Atom& pref,
                               const Atom& a1, const Atom& a2, const Atom& den);

    /// pref * sum_{n in Z} a1^n * den^{-n} (single-term numerator,
    /// e.g. delta(t x) or x^{-1} delta(y/x)).
    static Series delta_simple(const VarSet& vars, const Atom& pref,
                               const Atom& a1, const Atom& den);

    /// Geometric/binomial ray series c * sum_{j>=0} C(expo, j) r^j * step^j
    /// placed along step (used by the iota expansions).
    static Series binomial_ray(const VarSet& vars, const Atom& head,
                               const Rational& expo, const Rational& ratio,
                               int ratio_zexp, const Expo& step);

    /// Escape hatch for layers that compute coefficients by their own
    /// finite formulas (dual-action generating functions): the caller
    /// vouches for the certificate.
    static Series from_function(const VarSet& vars, std::vector<Cone> support,
                                std::function<ParamScalar(const Expo&)> fn);

    // ---- combinators ----
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    Series operator-() const;
    /// product; throws IllDefinedProduct when some cone pair fails the
    /// recession test
    friend Series operator*(const Series& a, const Series& b);

    Series scaled(const ParamScalar& c) const;
    Series shifted(const Expo& m) const; // multiply by x^m
    /// coefficient of var^-1, a series in the remaining variables
    Series residue(const std::string& var) const;
    /// formal d/d var
    Series derivative(const std::string& var) const;
    /// embed into a larger variable set (missing vars get exponent 0)
    Series extended(const VarSet& bigger) const;
    /// substitute var -> var^sign shifted: new coeff(e) = old coeff(e')
    /// with e'_var = sign * e_var + shift  (sign = +-1)
    Series transformed_var(const std::string& var, int sign, int shift) const;

    /// exact truncation to a window (drops the tail certificate)
    std::map<Expo, ParamScalar> materialize(const Window& w) const;

private:
    struct Node;
    std::shared_ptr<Node> n_;
    explicit Series(std::shared_ptr<Node> n) : n_(std::move(n)) {}
    static Series make(VarSet vars, std::vector<Cone> support,
                       std::function<ParamScalar(const Expo&)> raw);
};

struct Mismatch {
    Expo where;
    ParamScalar lhs, rhs;
};

struct IdentityResult {
    bool pass = true;
    std::vector<Mismatch> mismatches; // capped
    long points_checked = 0;
};

/// Coefficientwise comparison over a window. Both sides must share a
/// variable set. A pass is a claim about the window only.
IdentityResult check_identity(const Series& lhs, const Series& rhs, const Window& w,
                              size_t witness_cap = 8);

} // namespace vtx

#endif
