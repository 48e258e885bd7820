#include "vtxcalc/support.hpp"
#include "vtxcalc/errors.hpp"
#include <algorithm>

namespace vtx {

void Cone::drop_zero_gens() {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Expo& g) { return g.is_zero(); }),
               gens.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

namespace {

// A linear constraint sum a_i phi_i >= c.
struct Constraint {
    std::vector<Rational> a;
    Rational c;
};

} // namespace

std::optional<std::vector<Rational>> gordan_separator(int dim, const std::vector<Expo>& columns) {
    std::vector<Constraint> cons;
    for (const auto& col : columns) {
        Constraint k;
        k.a.resize(dim);
        for (int i = 0; i < dim; ++i) k.a[i] = Rational(col.e[i]);
        k.c = Rational(1);
        cons.push_back(std::move(k));
    }
    std::vector<std::vector<Constraint>> stages;
    for (int v = dim - 1; v >= 0; --v) {
        stages.push_back(cons);
        std::vector<Constraint> pos, neg, zero;
        for (auto& k : cons) {
            if (k.a[v] > 0) pos.push_back(k);
            else if (k.a[v] < 0) neg.push_back(k);
            else zero.push_back(k);
        }
        std::vector<Constraint> next = zero;
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                Constraint k;
                k.a.resize(dim);
                Rational ap = p.a[v], an = -n.a[v]; // both > 0
                for (int i = 0; i < dim; ++i) k.a[i] = p.a[i] * an + n.a[i] * ap;
                k.c = p.c * an + n.c * ap;
                k.a[v] = 0;
                next.push_back(std::move(k));
            }
        }
        cons = std::move(next);
    }
    for (const auto& k : cons)
        if (k.c > 0) return std::nullopt;
    std::vector<Rational> phi(dim, Rational(0));
    for (int v = 0; v < dim; ++v) {
        const auto& stage = stages[dim - 1 - v];
        bool has_lo = false, has_hi = false;
        Rational lo(0), hi(0);
        for (const auto& k : stage) {
            if (k.a[v] == 0) continue;
            Rational rest = k.c;
            for (int i = 0; i < dim; ++i)
                if (i != v) rest -= k.a[i] * phi[i];
            Rational bound = rest / k.a[v];
            bound.canonicalize();
            if (k.a[v] > 0) {
                if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
            } else {
                if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
            }
        }
        if (has_lo && has_hi) phi[v] = (lo + hi) / 2;
        else if (has_lo) phi[v] = lo;
        else if (has_hi) phi[v] = hi;
        phi[v].canonicalize();
    }
    return phi;
}

namespace {

// ---- Smith normal form over Z for small matrices ----
// Reduces A (rows x cols) to diagonal via unimodular U (rows), V (cols):
// U * A_orig * V = S.
struct Smith {
    std::vector<std::vector<long>> S, U, V;
    int rank = 0;
};

Smith smith_form(std::vector<std::vector<long>> A, int rows, int cols) {
    Smith sm;
    sm.S = std::move(A);
    sm.U.assign(rows, std::vector<long>(rows, 0));
    sm.V.assign(cols, std::vector<long>(cols, 0));
    for (int i = 0; i < rows; ++i) sm.U[i][i] = 1;
    for (int j = 0; j < cols; ++j) sm.V[j][j] = 1;
    auto& S = sm.S;
    auto& U = sm.U;
    auto& V = sm.V;

    auto swap_rows = [&](int a, int b) { std::swap(S[a], S[b]); std::swap(U[a], U[b]); };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(S[i][a], S[i][b]);
        for (int j = 0; j < cols; ++j) std::swap(V[j][a], V[j][b]);
    };
    auto add_row = [&](int dst, int src, long f) { // row dst += f * row src
        for (int j = 0; j < cols; ++j) S[dst][j] += f * S[src][j];
        for (int j = 0; j < rows; ++j) U[dst][j] += f * U[src][j];
    };
    auto add_col = [&](int dst, int src, long f) {
        for (int i = 0; i < rows; ++i) S[i][dst] += f * S[i][src];
        for (int j = 0; j < cols; ++j) V[j][dst] += f * V[j][src];
    };

    int t = 0;
    while (t < rows && t < cols) {
        // find pivot of smallest absolute value
        int pi = -1, pj = -1;
        long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (S[i][j] != 0 && (pi < 0 || std::abs(S[i][j]) < best)) {
                    pi = i; pj = j; best = std::abs(S[i][j]);
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        do {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (S[i][t] == 0) continue;
                long q = S[i][t] / S[t][t];
                add_row(i, t, -q);
                if (S[i][t] != 0) { swap_rows(t, i); clean = false; }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (S[t][j] == 0) continue;
                long q = S[t][j] / S[t][t];
                add_col(j, t, -q);
                if (S[t][j] != 0) { swap_cols(t, j); clean = false; }
            }
        } while (!clean);
        ++t;
    }
    sm.rank = 0;
    while (sm.rank < std::min(rows, cols) && S[sm.rank][sm.rank] != 0) ++sm.rank;
    return sm;
}

// Enumerate integer points of { t in Z^r : for each row, c0 + sum c_i t_i >= 0 }.
// Rows are (c0, c1..cr). Bounded regions only (guaranteed by the caller's
// separator condition); throws if a direction is unbounded.
bool enum_polytope(std::vector<std::vector<long>>& rows, int r, std::vector<long>& t,
                   const std::function<bool(const std::vector<long>&)>& visit) {
    if (r == 0) {
        for (const auto& row : rows)
            if (row[0] < 0) return true;
        return visit(t);
    }
    // project out t_r .. t_2 by Fourier-Motzkin on a copy to bound t_1
    std::vector<std::vector<long>> proj = rows;
    for (int v = r; v >= 2; --v) {
        std::vector<std::vector<long>> pos, neg, zero;
        for (auto& row : proj) {
            if (row[v] > 0) pos.push_back(row);
            else if (row[v] < 0) neg.push_back(row);
            else { row.resize(v); zero.push_back(row); }
        }
        std::vector<std::vector<long>> next = std::move(zero);
        for (const auto& p : pos)
            for (const auto& n : neg) {
                std::vector<long> row(v);
                long a = p[v], b = -n[v];
                for (int i = 0; i < v; ++i) row[i] = p[i] * b + n[i] * a;
                next.push_back(std::move(row));
            }
        proj = std::move(next);
    }
    auto ceil_div = [](long n, long d) { // d > 0
        long q = n / d;
        if (n % d != 0 && n > 0) ++q;
        return q;
    };
    auto floor_div = [](long n, long d) { // d > 0
        long q = n / d;
        if (n % d != 0 && n < 0) --q;
        return q;
    };
    bool has_lo = false, has_hi = false;
    long lo = 0, hi = 0;
    for (const auto& row : proj) {
        long c = row[0], a = row[1]; // c + a t1 >= 0
        if (a == 0) {
            if (c < 0) return true; // infeasible at this level
            continue;
        }
        if (a > 0) {
            long q = ceil_div(-c, a);
            if (!has_lo || q > lo) { lo = q; has_lo = true; }
        } else {
            long q = floor_div(c, -a);
            if (!has_hi || q < hi) { hi = q; has_hi = true; }
        }
    }
    if (!has_lo || !has_hi)
        throw CalcError("unbounded decomposition region (missing separator?)");
    for (long v1 = lo; v1 <= hi; ++v1) {
        std::vector<std::vector<long>> sub;
        sub.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<long> nr(row.size() - 1);
            nr[0] = row[0] + row[1] * v1;
            for (size_t i = 2; i < row.size(); ++i) nr[i - 1] = row[i];
            sub.push_back(std::move(nr));
        }
        t.push_back(v1);
        bool keep = enum_polytope(sub, r - 1, t, visit);
        t.pop_back();
        if (!keep) return false;
    }
    return true;
}

} // namespace

NonnegSolver::NonnegSolver(int dim, std::vector<Expo> columns)
    : dim_(dim), cols_(std::move(columns)), m_(static_cast<int>(cols_.size())) {
    if (!gordan_separator(dim_, cols_))
        throw CalcError("NonnegSolver: columns admit a nonnegative relation");
    if (m_ == 0) return;
    std::vector<std::vector<long>> A(dim_, std::vector<long>(m_, 0));
    for (int j = 0; j < m_; ++j)
        for (int i = 0; i < dim_; ++i) A[i][j] = cols_[j].e[i];
    Smith sm = smith_form(std::move(A), dim_, m_);
    rank_ = sm.rank;
    diag_.resize(rank_);
    for (int i = 0; i < rank_; ++i) diag_[i] = sm.S[i][i];
    U_ = std::move(sm.U);
    V_ = std::move(sm.V);
}

void NonnegSolver::solve(const Expo& rhs,
                         const std::function<bool(const std::vector<long>&)>& visit) const {
    if (m_ == 0) {
        if (rhs.is_zero()) visit({});
        return;
    }
    // y = U * rhs on the first rank_ coords must be divisible by diag;
    // remaining coords of U * rhs must vanish.
    std::vector<long> urhs(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        long acc = 0;
        for (int j = 0; j < dim_; ++j) acc += U_[i][j] * rhs.e[j];
        urhs[i] = acc;
    }
    std::vector<long> y(m_, 0);
    for (int i = 0; i < rank_; ++i) {
        if (urhs[i] % diag_[i] != 0) return;
        y[i] = urhs[i] / diag_[i];
    }
    for (int i = rank_; i < dim_; ++i)
        if (urhs[i] != 0) return;
    int r = m_ - rank_;
    // x = V y with free params t = y[rank_..m): x_i = part_i + sum_k N[i][k] t_k
    std::vector<long> part(m_, 0);
    for (int i = 0; i < m_; ++i) {
        long acc = 0;
        for (int j = 0; j < rank_; ++j) acc += V_[i][j] * y[j];
        part[i] = acc;
    }
    if (r == 0) {
        for (int i = 0; i < m_; ++i)
            if (part[i] < 0) return;
        visit(part);
        return;
    }
    std::vector<std::vector<long>> rows;
    rows.reserve(m_);
    for (int i = 0; i < m_; ++i) {
        std::vector<long> row(r + 1);
        row[0] = part[i];
        for (int k = 0; k < r; ++k) row[k + 1] = V_[i][rank_ + k];
        rows.push_back(std::move(row));
    }
    std::vector<long> t;
    std::vector<long> x(m_);
    enum_polytope(rows, r, t, [&](const std::vector<long>& tv) {
        for (int i = 0; i < m_; ++i) {
            long acc = part[i];
            for (int k = 0; k < r; ++k) acc += V_[i][rank_ + k] * tv[k];
            x[i] = acc;
        }
        return visit(x);
    });
}

bool cone_contains(const Cone& c, const Expo& x) {
    Expo rhs = x - c.base;
    if (c.gens.empty()) return rhs.is_zero();
    if (!gordan_separator(rhs.dim, c.gens))
        throw CalcError("cone membership undecidable: atom has an internal relation");
    NonnegSolver solver(rhs.dim, c.gens);
    bool found = false;
    solver.solve(rhs, [&](const std::vector<long>&) {
        found = true;
        return false;
    });
    return found;
}

bool support_contains(const std::vector<Cone>& cones, const Expo& x) {
    for (const auto& c : cones)
        if (cone_contains(c, x)) return true;
    return false;
}

std::string Expo::str(const std::vector<std::string>& names) const {
    std::string s = "(";
    for (int i = 0; i < dim; ++i) {
        if (i) s += ", ";
        if (i < static_cast<int>(names.size())) s += names[i] + "^";
        s += std::to_string(e[i]);
    }
    s += ")";
    return s;
}

std::string Window::str() const {
    std::string s = "[";
    for (int i = 0; i < dim; ++i) {
        if (i) s += " x ";
        s += "[" + std::to_string(lo[i]) + "," + std::to_string(hi[i]) + "]";
    }
    s += "]";
    return s;
}

} // namespace vtx
