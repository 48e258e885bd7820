#ifndef VTXCALC_EXPONENT_HPP
#define VTXCALC_EXPONENT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>
#include <functional>
#include <stdexcept>

namespace vtx {

constexpr int kMaxVars = 6;

/// Integer exponent vector over a declared ordered variable set (<= 4 vars).
struct Expo {
    std::array<int, kMaxVars> e{};
    std::uint8_t dim = 0;

    Expo() = default;
    explicit Expo(std::uint8_t d) : dim(d) { e.fill(0); }
    Expo(std::initializer_list<int> xs) {
        dim = 0;
        e.fill(0);
        for (int x : xs) e[dim++] = x;
    }

    int operator[](int i) const { return e[i]; }
    int& operator[](int i) { return e[i]; }

    bool operator==(const Expo& o) const { return dim == o.dim && e == o.e; }
    bool operator!=(const Expo& o) const { return !(*this == o); }
    bool operator<(const Expo& o) const {
        if (dim != o.dim) return dim < o.dim;
        return e < o.e;
    }

    Expo operator+(const Expo& o) const {
        Expo r(dim);
        for (int i = 0; i < dim; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Expo operator-(const Expo& o) const {
        Expo r(dim);
        for (int i = 0; i < dim; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    Expo operator-() const {
        Expo r(dim);
        for (int i = 0; i < dim; ++i) r.e[i] = -e[i];
        return r;
    }
    bool is_zero() const {
        for (int i = 0; i < dim; ++i)
            if (e[i] != 0) return false;
        return true;
    }
    std::string str(const std::vector<std::string>& names) const;
};

struct ExpoHash {
    size_t operator()(const Expo& x) const {
        size_t h = x.dim;
        for (int i = 0; i < x.dim; ++i)
            h = h * 1000003u + static_cast<size_t>(static_cast<unsigned>(x.e[i] + 512));
        return h;
    }
};

/// Ordered variable set shared by the series of one computation.
struct VarSet {
    std::vector<std::string> names;

    VarSet() = default;
    VarSet(std::initializer_list<std::string> ns) : names(ns) {
        if (names.size() > kMaxVars) throw std::invalid_argument("too many variables");
    }
    int size() const { return static_cast<int>(names.size()); }
    int index(const std::string& n) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const VarSet& o) const { return names == o.names; }
};

/// Closed integer box, one [lo, hi] range per variable.
struct Window {
    std::array<int, kMaxVars> lo{};
    std::array<int, kMaxVars> hi{};
    std::uint8_t dim = 0;

    static Window cube(int dim_, int radius) {
        Window w;
        w.dim = static_cast<std::uint8_t>(dim_);
        for (int i = 0; i < dim_; ++i) { w.lo[i] = -radius; w.hi[i] = radius; }
        return w;
    }
    static Window box(std::initializer_list<std::pair<int, int>> ranges) {
        Window w;
        for (auto& r : ranges) { w.lo[w.dim] = r.first; w.hi[w.dim] = r.second; ++w.dim; }
        return w;
    }
    bool contains(const Expo& x) const {
        for (int i = 0; i < dim; ++i)
            if (x.e[i] < lo[i] || x.e[i] > hi[i]) return false;
        return true;
    }
    // visit all lattice points
    template <typename F>
    void for_each(F&& f) const {
        Expo x(dim);
        for (int i = 0; i < dim; ++i) x.e[i] = lo[i];
        while (true) {
            f(static_cast<const Expo&>(x));
            int i = 0;
            for (; i < dim; ++i) {
                if (++x.e[i] <= hi[i]) break;
                x.e[i] = lo[i];
            }
            if (i == dim) break;
        }
    }
    std::string str() const;
};

} // namespace vtx

#endif
