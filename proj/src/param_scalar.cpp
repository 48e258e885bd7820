#include "vtxcalc/param_scalar.hpp"
#include "vtxcalc/errors.hpp"
#include <algorithm>
#include <map>
#include <sstream>
#include <ostream>
#include <cctype>

namespace vtx {

void ParamScalar::prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second == 0; }),
                 terms_.end());
}

Rational ParamScalar::rational_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_[0].second;
}

Rational ParamScalar::coeff(int zexp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), zexp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == zexp) return it->second;
    return Rational(0);
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) merged.push_back(*a++);
        else if (b->first < a->first) merged.push_back(*b++);
        else {
            Rational c = a->second + b->second;
            if (c != 0) merged.push_back({a->first, c});
            ++a; ++b;
        }
    }
    merged.insert(merged.end(), a, ae);
    merged.insert(merged.end(), b, be);
    terms_ = std::move(merged);
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
    return *this += -o;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero() || b.is_zero()) return ParamScalar();
    if (b.terms().size() == 1)
        return a.scaled(b.terms()[0].second, b.terms()[0].first);
    if (a.terms().size() == 1)
        return b.scaled(a.terms()[0].second, a.terms()[0].first);
    std::map<int, Rational> acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            acc[ta.first + tb.first] += ta.second * tb.second;
    ParamScalar r;
    for (auto& kv : acc)
        if (kv.second != 0) r.terms_.push_back({kv.first, kv.second});
    return r;
}

ParamScalar ParamScalar::scaled(const Rational& c, int zshift) const {
    if (c == 0) return ParamScalar();
    ParamScalar r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.first + zshift, t.second * c});
    return r;
}

Rational ParamScalar::eval(const Rational& z0) const {
    if (z0 == 0) throw ZeroParameter();
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational p(1);
        int e = t.first;
        Rational base = e >= 0 ? z0 : Rational(1) / z0;
        for (int i = 0; i < std::abs(e); ++i) p *= base;
        acc += t.second * p;
    }
    acc.canonicalize();
    return acc;
}

ParamScalar ParamScalar::div_monomial(const Rational& c, int zexp) const {
    if (c == 0) throw CalcError("division by zero monomial");
    return scaled(Rational(1) / c, -zexp);
}

int ParamScalar::min_exp() const { return terms_.front().first; }
int ParamScalar::max_exp() const { return terms_.back().first; }

std::string ParamScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest power first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        int e = it->first;
        if (e == 0) {
            os << rat_str(c);
        } else {
            if (c != 1) os << rat_str(c) << " ";
            os << "z";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

// one term: [rational] [z[^int]]
ParamScalar parse_term(const std::string& tok) {
    std::string s = tok;
    // locate 'z'
    auto zpos = s.find('z');
    Rational coef(1);
    int zexp = 0;
    if (zpos == std::string::npos) {
        std::string compact;
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
        coef = rat_parse(compact);
    } else {
        std::string cpart;
        for (char ch : s.substr(0, zpos))
            if (!std::isspace(static_cast<unsigned char>(ch))) cpart.push_back(ch);
        if (cpart.empty() || cpart == "+") coef = Rational(1);
        else if (cpart == "-") coef = Rational(-1);
        else coef = rat_parse(cpart);
        std::string epart = s.substr(zpos + 1);
        size_t i = 0;
        while (i < epart.size() && std::isspace(static_cast<unsigned char>(epart[i]))) ++i;
        if (i < epart.size()) {
            if (epart[i] != '^') throw ParseError("bad z term '" + tok + "'");
            zexp = std::stoi(epart.substr(i + 1));
        } else {
            zexp = 1;
        }
    }
    return ParamScalar(zexp, coef);
}

} // namespace

ParamScalar ParamScalar::parse(const std::string& text) {
    // split on top-level + and - (the - stays attached to the term)
    ParamScalar acc;
    std::string cur;
    bool any = false;
    auto flush = [&]() {
        std::string t = cur;
        size_t b = t.find_first_not_of(" \t");
        if (b == std::string::npos) { cur.clear(); return; }
        size_t e = t.find_last_not_of(" \t");
        t = t.substr(b, e - b + 1);
        if (!t.empty()) { acc += parse_term(t); any = true; }
        cur.clear();
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if ((ch == '+' || ch == '-') && i > 0) {
            // not an exponent sign ("^-2") and not inside "p/q" (never contains +/-)
            char prev = text[i - 1];
            if (prev != '^' && prev != '/') {
                flush();
                if (ch == '-') cur.push_back('-');
                continue;
            }
        }
        cur.push_back(ch);
    }
    flush();
    if (!any) throw ParseError("empty scalar '" + text + "'");
    return acc;
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& p) {
    return os << p.str();
}

} // namespace vtx
