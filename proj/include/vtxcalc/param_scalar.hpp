#ifndef VTXCALC_PARAM_SCALAR_HPP
#define VTXCALC_PARAM_SCALAR_HPP

#include "vtxcalc/rational.hpp"
#include <vector>
#include <utility>
#include <string>
#include <iosfwd>

namespace vtx {

/// Element of Q[z, z^-1]: the coefficient ring of everything in this
/// project. z is the distinguished invertible parameter, kept formal so
/// identities hold for every nonzero value at once. Terms are stored
/// sorted by exponent with no zero coefficients.
class ParamScalar {
public:
    using Term = std::pair<int, Rational>; // (z-exponent, coefficient)

    ParamScalar() = default;
    explicit ParamScalar(const Rational& c) { if (c != 0) terms_.push_back({0, c}); }
    ParamScalar(int zexp, const Rational& c) { if (c != 0) terms_.push_back({zexp, c}); }

    static ParamScalar zero() { return ParamScalar(); }
    static ParamScalar one() { return ParamScalar(Rational(1)); }
    static ParamScalar z(int exp = 1) { return ParamScalar(exp, Rational(1)); }
    static ParamScalar from_long(long v) { return ParamScalar(Rational(v)); }

    bool is_zero() const { return terms_.empty(); }
    // true when the value is c*z^e for a single term (or zero)
    bool is_monomial() const { return terms_.size() <= 1; }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    Rational rational_value() const; // requires is_rational()

    const std::vector<Term>& terms() const { return terms_; }
    Rational coeff(int zexp) const;

    ParamScalar operator-() const;
    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { a += b; return a; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { a -= b; return a; }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
    ParamScalar& operator*=(const ParamScalar& o) { *this = *this * o; return *this; }

    bool operator==(const ParamScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamScalar& o) const { return !(*this == o); }

    // multiply by c*z^e without building a temporary
    ParamScalar scaled(const Rational& c, int zshift = 0) const;

    // substitution homomorphism z -> z0; throws ZeroParameter when z0 = 0
    Rational eval(const Rational& z0) const;

    // exact division by a monomial c*z^e (c != 0)
    ParamScalar div_monomial(const Rational& c, int zexp) const;

    int min_exp() const; // requires !is_zero()
    int max_exp() const;

    std::string str() const;
    static ParamScalar parse(const std::string& text);

private:
    std::vector<Term> terms_;
    void prune();
    friend struct ParamScalarBuilder;
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& p);

} // namespace vtx

#endif
