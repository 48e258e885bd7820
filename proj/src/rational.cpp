#include "vtxcalc/rational.hpp"
#include "vtxcalc/errors.hpp"

namespace vtx {

Rational gen_binom(long n, long k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long i = 0; i < k; ++i) {
        num *= Rational(n - i);
    }
    Rational kfact(1);
    for (long i = 2; i <= k; ++i) kfact *= Rational(i);
    Rational r = num / kfact;
    r.canonicalize();
    return r;
}

Rational rat_parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    try {
        Rational r(text);
        r.canonicalize();
        if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + text + "'");
    }
}

std::string rat_str(const Rational& r) {
    return r.get_str();
}

} // namespace vtx
