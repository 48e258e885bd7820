#include "vtxcalc/linalg.hpp"
#include "vtxcalc/errors.hpp"
#include <algorithm>

namespace vtx {

namespace {

// view a Laurent polynomial as an ordinary polynomial (clearing the
// z-power) as a dense coefficient vector
std::vector<Rational> to_poly(const ParamScalar& p, int& shift) {
    if (p.is_zero()) { shift = 0; return {}; }
    shift = p.min_exp();
    std::vector<Rational> c(p.max_exp() - shift + 1, Rational(0));
    for (const auto& t : p.terms()) c[t.first - shift] = t.second;
    return c;
}

ParamScalar from_poly(const std::vector<Rational>& c, int shift) {
    ParamScalar p;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p += ParamScalar(static_cast<int>(i) + shift, c[i]);
    return p;
}

// monic polynomial gcd over Q
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    auto deg = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (deg(a) >= deg(b) && !a.empty()) {
            Rational f = a.back() / b.back();
            int off = deg(a) - deg(b);
            for (int i = 0; i <= deg(b); ++i) a[i + off] -= f * b[i];
            trim(a);
        }
        std::swap(a, b);
        trim(b);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

std::vector<Rational> poly_divexact(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (b.empty()) throw CalcError("polynomial division by zero");
    auto deg = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
    std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) &&
           !(a.size() == 1 && a[0] == 0)) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (static_cast<int>(a.size()) < static_cast<int>(b.size())) break;
        Rational f = a.back() / b.back();
        int off = deg(a) - deg(b);
        q[off] = f;
        for (int i = 0; i <= deg(b); ++i) a[i + off] -= f * b[i];
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (!a.empty()) throw CalcError("polynomial division not exact");
    return q;
}

} // namespace

ParamScalar ps_gcd(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int sa, sb;
    auto pa = to_poly(a, sa), pb = to_poly(b, sb);
    auto g = poly_gcd(pa, pb);
    return from_poly(g, 0);
}

ParamScalar ps_divexact(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) throw CalcError("division by zero scalar");
    int sa, sb;
    auto pa = to_poly(a, sa), pb = to_poly(b, sb);
    auto q = poly_divexact(pa, pb);
    return from_poly(q, sa - sb);
}

FracPS::FracPS(ParamScalar n, ParamScalar d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw CalcError("fraction with zero denominator");
    reduce();
}

void FracPS::reduce() {
    if (num.is_zero()) {
        den = ParamScalar::one();
        return;
    }
    ParamScalar g = ps_gcd(num, den);
    if (!(g == ParamScalar::one())) {
        num = ps_divexact(num, g);
        den = ps_divexact(den, g);
    }
    // normalize: denominator z-power-free with leading coefficient 1
    int dmin = den.min_exp();
    Rational lead = den.terms().back().second;
    num = num.div_monomial(lead, dmin);
    den = den.div_monomial(lead, dmin);
}

FracPS FracPS::operator+(const FracPS& o) const {
    return FracPS(num * o.den + o.num * den, den * o.den);
}
FracPS FracPS::operator-(const FracPS& o) const {
    return FracPS(num * o.den - o.num * den, den * o.den);
}
FracPS FracPS::operator*(const FracPS& o) const { return FracPS(num * o.num, den * o.den); }
FracPS FracPS::operator/(const FracPS& o) const {
    if (o.is_zero()) throw CalcError("fraction division by zero");
    return FracPS(num * o.den, den * o.num);
}
FracPS FracPS::operator-() const {
    FracPS r = *this;
    r.num = -r.num;
    return r;
}
bool FracPS::operator==(const FracPS& o) const { return num * o.den == o.num * den; }

namespace {

template <typename F>
bool is_zero_f(const F& x) { return x.is_zero(); }
template <>
bool is_zero_f<Rational>(const Rational& x) { return x == 0; }

template <typename F>
F div_f(const F& a, const F& b) { return a / b; }

} // namespace

template <typename F>
std::vector<int> rref(Matrix<F>& A) {
    std::vector<int> pivots;
    if (A.empty()) return pivots;
    int rows = static_cast<int>(A.size());
    int cols = static_cast<int>(A[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero_f(A[i][c])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(A[r], A[piv]);
        F inv = A[r][c];
        for (int j = c; j < cols; ++j) A[r][j] = div_f(A[r][j], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero_f(A[i][c])) continue;
            F f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template std::vector<int> rref<Rational>(Matrix<Rational>&);
template std::vector<int> rref<FracPS>(Matrix<FracPS>&);

int rank_q(Matrix<Rational> A) { return static_cast<int>(rref(A).size()); }
int rank_frac(Matrix<FracPS> A) { return static_cast<int>(rref(A).size()); }

std::vector<std::vector<Rational>> nullspace_q(Matrix<Rational> A) {
    if (A.empty()) return {};
    int cols = static_cast<int>(A[0].size());
    auto pivots = rref(A);
    std::vector<bool> is_piv(cols, false);
    for (int c : pivots) is_piv[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (static_cast<size_t>(pivots[r]) < A.size() || true)
                v[pivots[r]] = -A[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolutions solve_affine_q(Matrix<Rational> A, std::vector<Rational> b) {
    AffineSolutions out;
    if (A.empty()) {
        out.consistent = std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == 0; });
        return out;
    }
    int cols = static_cast<int>(A[0].size());
    for (size_t i = 0; i < A.size(); ++i) A[i].push_back(b[i]);
    auto pivots = rref(A);
    // inconsistent if the augmented column is a pivot
    if (!pivots.empty() && pivots.back() == cols) {
        out.consistent = false;
        return out;
    }
    out.consistent = true;
    std::vector<bool> is_piv(cols, false);
    for (int c : pivots) is_piv[c] = true;
    out.particular.assign(cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = A[r][cols];
    for (int free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][free];
        out.homogeneous.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rational>> solve_q(Matrix<Rational> A, std::vector<Rational> b) {
    auto s = solve_affine_q(std::move(A), std::move(b));
    if (!s.consistent) return std::nullopt;
    return s.particular;
}

} // namespace vtx
