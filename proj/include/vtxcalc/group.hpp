#ifndef VTXCALC_GROUP_HPP
#define VTXCALC_GROUP_HPP

#include <string>
#include <vector>
#include <stdexcept>

namespace vtx {

/// Degree in a finitely generated abelian group prod Z/m_i (m_i = 0 for a
/// free component). Shipped instances use the trivial group and Z/2, but
/// nothing here depends on that.
struct AbelianGroup {
    std::vector<int> moduli;

    static AbelianGroup trivial() { return AbelianGroup{}; }
    static AbelianGroup z2() { return AbelianGroup{{2}}; }

    int rank() const { return static_cast<int>(moduli.size()); }
    bool operator==(const AbelianGroup& o) const { return moduli == o.moduli; }

    std::vector<int> reduce(std::vector<int> v) const {
        v.resize(moduli.size(), 0);
        for (size_t i = 0; i < moduli.size(); ++i) {
            if (moduli[i] > 0) {
                v[i] %= moduli[i];
                if (v[i] < 0) v[i] += moduli[i];
            }
        }
        return v;
    }
    std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> r(moduli.size(), 0);
        for (size_t i = 0; i < moduli.size(); ++i) {
            int x = i < a.size() ? a[i] : 0;
            int y = i < b.size() ? b[i] : 0;
            r[i] = x + y;
        }
        return reduce(r);
    }
    std::vector<int> neg(const std::vector<int>& a) const {
        std::vector<int> r(moduli.size(), 0);
        for (size_t i = 0; i < moduli.size(); ++i) r[i] = -(i < a.size() ? a[i] : 0);
        return reduce(r);
    }
    std::vector<int> zero() const { return std::vector<int>(moduli.size(), 0); }

    std::string deg_str(const std::vector<int>& a) const {
        if (moduli.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < moduli.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(i < a.size() ? a[i] : 0);
        }
        return s;
    }
    std::vector<int> deg_parse(const std::string& s) const {
        std::vector<int> v;
        std::string cur;
        for (char c : s + ",") {
            if (c == ',') {
                if (!cur.empty()) v.push_back(std::stoi(cur));
                cur.clear();
            } else cur.push_back(c);
        }
        return reduce(std::move(v));
    }
};

using GDeg = std::vector<int>;

} // namespace vtx

#endif
