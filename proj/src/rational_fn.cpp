#include "vtxcalc/rational_fn.hpp"
#include "vtxcalc/errors.hpp"
#include <algorithm>
#include <sstream>

namespace vtx {

namespace {

Rational rat_pow_l(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) throw CalcError("rational_fn: 0^nonpositive");
    Rational b = e > 0 ? base : Rational(1) / base;
    Rational r(1);
    for (long i = 0; i < std::abs(e); ++i) r *= b;
    r.canonicalize();
    return r;
}

void mono_parts(const ParamScalar& p, Rational& c, int& ze, const char* who) {
    if (p.is_zero() || !p.is_monomial())
        throw CalcError(std::string(who) + ": coefficient must be a nonzero z-monomial, got " + p.str());
    c = p.terms()[0].second;
    ze = p.terms()[0].first;
}

LaurentT laurent_mul(const LaurentT& a, const LaurentT& b) {
    LaurentT r;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            ParamScalar c = ta.second * tb.second;
            if (!c.is_zero()) {
                auto& slot = r[ta.first + tb.first];
                slot += c;
            }
        }
    for (auto it = r.begin(); it != r.end();) {
        if (it->second.is_zero()) it = r.erase(it);
        else ++it;
    }
    return r;
}

LaurentT laurent_add(LaurentT a, const LaurentT& b) {
    for (const auto& tb : b) {
        auto& slot = a[tb.first];
        slot += tb.second;
    }
    for (auto it = a.begin(); it != a.end();) {
        if (it->second.is_zero()) it = a.erase(it);
        else ++it;
    }
    return a;
}

LaurentT den_poly(const std::vector<DenFactor>& den) {
    LaurentT acc{{0, ParamScalar::one()}};
    for (const auto& f : den) {
        LaurentT lin;
        if (!f.a.is_zero()) lin[0] = f.a;
        if (!f.b.is_zero()) lin[1] = f.b;
        for (int i = 0; i < f.mult; ++i) acc = laurent_mul(acc, lin);
    }
    return acc;
}

} // namespace

RationalFn RationalFn::monomial(int texp, const ParamScalar& c) {
    LaurentT n;
    if (!c.is_zero()) n[texp] = c;
    return RationalFn(std::move(n));
}

void RationalFn::normalize() {
    for (auto it = num_.begin(); it != num_.end();) {
        if (it->second.is_zero()) it = num_.erase(it);
        else ++it;
    }
    std::vector<DenFactor> keep;
    int tshift = 0;
    ParamScalar scale = ParamScalar::one();
    for (auto& f : den_) {
        if (f.mult == 0) continue;
        if (f.mult < 0) throw CalcError("rational_fn: negative factor multiplicity");
        if (f.a.is_zero() && f.b.is_zero()) throw CalcError("rational_fn: zero factor");
        if (f.a.is_zero()) {
            // (b t)^-m: plain monomial, not an error
            Rational c; int ze;
            mono_parts(f.b, c, ze, "rational_fn");
            tshift -= f.mult;
            scale = scale * ParamScalar(-ze * f.mult, rat_pow_l(c, -f.mult));
            continue;
        }
        if (f.b.is_zero()) {
            Rational c; int ze;
            mono_parts(f.a, c, ze, "rational_fn");
            scale = scale * ParamScalar(-ze * f.mult, rat_pow_l(c, -f.mult));
            continue;
        }
        // scale so b = 1 when b is a monomial: (a+bt) = b (a/b + t)
        if (f.b.is_monomial()) {
            Rational cb; int zb;
            mono_parts(f.b, cb, zb, "rational_fn");
            scale = scale * ParamScalar(-zb * f.mult, rat_pow_l(cb, -f.mult));
            f.a = f.a.div_monomial(cb, zb);
            f.b = ParamScalar::one();
        }
        keep.push_back(f);
    }
    if (num_.empty()) { den_.clear(); return; }
    if (tshift != 0 || !(scale == ParamScalar::one())) {
        LaurentT moved;
        for (const auto& t : num_) {
            ParamScalar c = t.second * scale;
            if (!c.is_zero()) moved[t.first + tshift] = c;
        }
        num_ = std::move(moved);
    }
    // merge equal factors
    std::sort(keep.begin(), keep.end(), [](const DenFactor& x, const DenFactor& y) {
        return x.a.str() < y.a.str();
    });
    std::vector<DenFactor> merged;
    for (auto& f : keep) {
        if (!merged.empty() && merged.back().a == f.a && merged.back().b == f.b)
            merged.back().mult += f.mult;
        else
            merged.push_back(f);
    }
    den_ = std::move(merged);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    std::vector<DenFactor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return RationalFn(laurent_mul(num_, o.num_), std::move(den));
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // p/D1 + q/D2 = (p * D2 + q * D1) / (D1 D2); no cancellation attempted,
    // equality goes through cross-multiplication anyway
    LaurentT p = laurent_mul(num_, den_poly(o.den_));
    LaurentT q = laurent_mul(o.num_, den_poly(den_));
    std::vector<DenFactor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return RationalFn(laurent_add(std::move(p), q), std::move(den));
}

RationalFn RationalFn::scaled(const ParamScalar& c) const {
    if (c.is_zero()) return RationalFn();
    LaurentT n;
    for (const auto& t : num_) n[t.first] = t.second * c;
    return RationalFn(std::move(n), den_);
}

RationalFn RationalFn::shifted_t(int k) const {
    LaurentT n;
    for (const auto& t : num_) n[t.first + k] = t.second;
    return RationalFn(std::move(n), den_);
}

bool RationalFn::operator==(const RationalFn& o) const {
    LaurentT lhs = laurent_mul(num_, den_poly(o.den_));
    LaurentT rhs = laurent_mul(o.num_, den_poly(den_));
    return lhs == rhs;
}

namespace {

// (t + a)^e as a RationalFn
RationalFn pow_t_plus_a(const ParamScalar& a, int e) {
    if (e >= 0) {
        LaurentT n;
        for (int k = 0; k <= e; ++k) {
            ParamScalar c = ParamScalar(Rational(gen_binom(e, k)));
            ParamScalar apow = ParamScalar::one();
            for (int i = 0; i < e - k; ++i) apow = apow * a;
            c = c * apow;
            if (!c.is_zero()) n[k] = c;
        }
        return RationalFn(std::move(n));
    }
    LaurentT n{{0, ParamScalar::one()}};
    return RationalFn(std::move(n), {DenFactor{a, ParamScalar::one(), -e}});
}

} // namespace

RationalFn rf_translate(const RationalFn& f, const ParamScalar& a) {
    if (f.is_zero() || a.is_zero()) return f;
    RationalFn acc;
    for (const auto& t : f.num())
        acc = acc + pow_t_plus_a(a, t.first).scaled(t.second);
    std::vector<DenFactor> den;
    for (const auto& d : f.den())
        den.push_back(DenFactor{d.a + d.b * a, d.b, d.mult});
    RationalFn shifted(acc.num(), den.empty() ? acc.den() : [&] {
        auto v = acc.den();
        v.insert(v.end(), den.begin(), den.end());
        return v;
    }());
    return shifted;
}

RationalFn rf_invert_t(const RationalFn& f) {
    if (f.is_zero()) return f;
    LaurentT n;
    int tshift = 0;
    std::vector<DenFactor> den;
    for (const auto& d : f.den()) {
        den.push_back(DenFactor{d.b, d.a, d.mult});
        tshift += d.mult;
    }
    for (const auto& t : f.num()) n[-t.first + tshift] = t.second;
    return RationalFn(std::move(n), std::move(den));
}

Series iota_expand(const RationalFn& f, IotaDir dir, const VarSet& tvar) {
    if (tvar.size() != 1) throw CalcError("iota_expand: expansion is in one variable");
    if (f.is_zero()) return Series::zero(tvar);
    std::map<Expo, ParamScalar> numterms;
    for (const auto& t : f.num()) {
        Expo e{t.first};
        numterms[e] = t.second;
    }
    Series acc = Series::finite(tvar, numterms);
    for (const auto& d : f.den()) {
        Rational ca, cb;
        int za = 0, zb = 0;
        Series::Atom head;
        Rational expo(-d.mult);
        if (dir == IotaDir::Plus) {
            mono_parts(d.a, ca, za, "iota_plus");
            if (d.b.is_zero()) throw CalcError("iota: degenerate factor survived normalize");
            mono_parts(d.b, cb, zb, "iota_plus");
            head.coef = rat_pow_l(ca, -d.mult);
            head.zexp = -za * d.mult;
            head.mono = Expo{0};
            acc = acc * Series::binomial_ray(tvar, head, expo, cb / ca, zb - za, Expo{1});
        } else {
            mono_parts(d.b, cb, zb, "iota_minus");
            mono_parts(d.a, ca, za, "iota_minus");
            head.coef = rat_pow_l(cb, -d.mult);
            head.zexp = -zb * d.mult;
            head.mono = Expo{-d.mult};
            acc = acc * Series::binomial_ray(tvar, head, expo, ca / cb, za - zb, Expo{-1});
        }
    }
    return acc;
}

FactorType classify_factor(const DenFactor& f) {
    if (f.a.is_zero()) return FactorType::TOnly;
    if (f.b.is_zero()) return FactorType::Other;
    if (f.a - f.b * ParamScalar::z(1) == ParamScalar::zero()) return FactorType::ZPlusT;
    if (f.a + f.b * ParamScalar::z(1) == ParamScalar::zero()) return FactorType::ZMinusT;
    if (f.a + f.b * ParamScalar::z(-1) == ParamScalar::zero()) return FactorType::ZInvMinusT;
    return FactorType::Other;
}

std::string rf_str(const RationalFn& f) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& t : f.num()) {
        if (!first) os << " + ";
        os << "(" << t.second.str() << ")";
        if (t.first != 0) os << " t^" << t.first;
        first = false;
    }
    if (first) os << "0";
    os << ")";
    for (const auto& d : f.den())
        os << " ((" << d.a.str() << ") + (" << d.b.str() << ") t)^-" << d.mult;
    return os.str();
}

} // namespace vtx
