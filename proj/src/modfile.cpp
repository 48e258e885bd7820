#include "vtxcalc/modfile.hpp"
#include "vtxcalc/errors.hpp"
#include <fstream>
#include <map>
#include <sstream>

namespace vtx {

std::string scalar_list_str(const ParamScalar& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& t : p.terms())
        s += "(" + std::to_string(t.first) + "," + rat_str(t.second) + ")";
    return s;
}

ParamScalar scalar_list_parse(const std::string& s) {
    if (s == "0") return ParamScalar::zero();
    ParamScalar acc;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw ParseError("bad scalar list '" + s + "'");
        size_t comma = s.find(',', i);
        size_t close = s.find(')', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw ParseError("bad scalar list '" + s + "'");
        int e = std::stoi(s.substr(i + 1, comma - i - 1));
        Rational c = rat_parse(s.substr(comma + 1, close - comma - 1));
        acc += ParamScalar(e, c);
        i = close + 1;
    }
    return acc;
}

namespace {

struct CompKey {
    int u, v;
    long k;
    bool operator<(const CompKey& o) const {
        if (u != o.u) return u < o.u;
        if (v != o.v) return v < o.v;
        return k < o.k;
    }
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

SparseVec parse_lincomb(const std::string& text, const SpaceData& space) {
    SparseVec out;
    if (text == "0") return out;
    std::string cur;
    auto flush = [&](const std::string& term) {
        auto star = term.find('*');
        if (star == std::string::npos) throw ParseError("bad term '" + term + "'");
        std::string coefs = term.substr(0, star);
        if (coefs.size() < 2 || coefs.front() != '[' || coefs.back() != ']')
            throw ParseError("bad scalar '" + coefs + "'");
        ParamScalar c = scalar_list_parse(coefs.substr(1, coefs.size() - 2));
        int idx = space.index_of(term.substr(star + 1));
        auto it = out.find(idx);
        if (it == out.end()) out[idx] = c;
        else it->second += c;
        return;
    };
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == '+' && (i == 0 || text[i - 1] != '('))) {
            std::string term;
            for (char ch : cur)
                if (!std::isspace(static_cast<unsigned char>(ch))) term.push_back(ch);
            if (!term.empty()) flush(term);
            cur.clear();
        } else {
            cur.push_back(text[i]);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::string lincomb_str(const SparseVec& v, const SpaceData& space) {
    if (v.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : v) {
        if (!first) s += " + ";
        s += "[" + scalar_list_str(t.second) + "]*" + space.basis[t.first].name;
        first = false;
    }
    return s;
}

struct RawSpace {
    SpaceData data;
    std::map<CompKey, SparseVec> comps;
    std::map<std::pair<int, int>, SparseVec> lops; // (j, v)
};

void install_tables(GradedModule& M, std::shared_ptr<RawSpace> raw,
                    std::shared_ptr<RawSpace> domain) {
    (void)domain;
    M.compfn = [raw](int u, long k, int w) -> SparseVec {
        auto it = raw->comps.find(CompKey{u, w, k});
        return it == raw->comps.end() ? SparseVec{} : it->second;
    };
    M.lfn = [raw](int j, int w) -> SparseVec {
        auto it = raw->lops.find({j, w});
        return it == raw->lops.end() ? SparseVec{} : it->second;
    };
}

} // namespace

std::shared_ptr<GradedModule> ModFile::module(const std::string& name) const {
    for (const auto& m : modules)
        if (m->data.name == name) return m;
    throw CalcError("no module '" + name + "' in file");
}

ModFile load_modfile(std::istream& in) {
    ModFile out;
    std::string line;
    int lineno = 0;

    auto algraw = std::make_shared<RawSpace>();
    std::shared_ptr<RawSpace> modraw;
    SparseVec vacuum;
    std::optional<ParamScalar> charge;
    bool saw_header = false, in_module = false, basis_closed = false;
    std::string modname;
    std::vector<std::pair<std::shared_ptr<RawSpace>, std::string>> modlist;

    auto current = [&]() -> RawSpace& { return in_module ? *modraw : *algraw; };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        auto err = [&](const std::string& m) {
            throw ParseError("line " + std::to_string(lineno) + ": " + m);
        };
        if (key == "vtxmod") {
            saw_header = true;
        } else if (!saw_header) {
            err("missing vtxmod header");
        } else if (key == "algebra") {
            if (toks.size() != 2) err("algebra <name>");
            algraw->data.name = toks[1];
        } else if (key == "group") {
            if (toks.size() != 2) err("group trivial|z2");
            if (toks[1] == "trivial") algraw->data.group = AbelianGroup::trivial();
            else if (toks[1] == "z2") algraw->data.group = AbelianGroup::z2();
            else err("unknown group " + toks[1]);
        } else if (key == "charge") {
            if (toks.size() != 2) err("charge <scalar>");
            charge = scalar_list_parse(toks[1]);
        } else if (key == "basis") {
            if (toks.size() < 3) err("basis <name> <weight> [degree]");
            if (basis_closed && !in_module) err("basis after components");
            BasisVec b;
            b.name = toks[1];
            b.weight = std::stoi(toks[2]);
            b.degree = toks.size() > 3 ? algraw->data.group.deg_parse(toks[3])
                                       : algraw->data.group.zero();
            current().data.basis.push_back(std::move(b));
        } else if (key == "vacuum" || key == "y" || key == "L") {
            RawSpace& space = current();
            if (space.data.index.empty()) {
                space.data.group = algraw->data.group;
                space.data.finish();
                space.data.model_cutoff = 0;
                for (const auto& b : space.data.basis)
                    space.data.model_cutoff = std::max(space.data.model_cutoff, b.weight);
                space.data.complete = true;
                if (!in_module) basis_closed = true;
            }
            std::string rest;
            {
                auto colon = line.find(':');
                if (key != "vacuum" && colon == std::string::npos) err("missing ':'");
                if (colon != std::string::npos) rest = line.substr(colon + 1);
            }
            if (key == "vacuum") {
                std::string body = line.substr(line.find("vacuum") + 6);
                vacuum = parse_lincomb([&] {
                    std::string t = body;
                    size_t b = t.find_first_not_of(" \t");
                    return b == std::string::npos ? std::string("0") : t.substr(b);
                }(), algraw->data);
            } else if (key == "y") {
                if (toks.size() < 5) err("y <u> <k> <v> : <lincomb>");
                int u = algraw->data.index_of(toks[1]);
                long k = std::stol(toks[2]);
                int v = space.data.index_of(toks[3]);
                space.comps[CompKey{u, v, k}] = parse_lincomb(rest.empty() ? "0" : rest, space.data);
            } else {
                if (toks.size() < 4) err("L <j> <v> : <lincomb>");
                int j = std::stoi(toks[1]);
                int v = space.data.index_of(toks[2]);
                space.lops[{j, v}] = parse_lincomb(rest.empty() ? "0" : rest, space.data);
            }
        } else if (key == "module") {
            if (toks.size() != 2) err("module <name>");
            if (in_module) err("nested module");
            in_module = true;
            modraw = std::make_shared<RawSpace>();
            modname = toks[1];
            modraw->data.name = toks[1];
        } else if (key == "endmodule") {
            if (!in_module) err("stray endmodule");
            if (modraw->data.index.empty()) {
                modraw->data.group = algraw->data.group;
                modraw->data.finish();
                for (const auto& b : modraw->data.basis)
                    modraw->data.model_cutoff = std::max(modraw->data.model_cutoff, b.weight);
                modraw->data.complete = true;
            }
            modlist.push_back({modraw, modname});
            in_module = false;
        } else {
            err("unknown directive " + key);
        }
    }
    if (in_module) throw ParseError("unterminated module");
    if (algraw->data.index.empty()) {
        algraw->data.finish();
        for (const auto& b : algraw->data.basis)
            algraw->data.model_cutoff = std::max(algraw->data.model_cutoff, b.weight);
        algraw->data.complete = true;
    }
    auto V = std::make_shared<VertexAlgebra>();
    V->data = algraw->data;
    V->vacuum_vec = vacuum;
    V->central_charge = charge;
    V->compfn = [algraw](int u, long k, int v) -> SparseVec {
        auto it = algraw->comps.find(CompKey{u, v, k});
        return it == algraw->comps.end() ? SparseVec{} : it->second;
    };
    V->lfn = [algraw](int j, int v) -> SparseVec {
        auto it = algraw->lops.find({j, v});
        return it == algraw->lops.end() ? SparseVec{} : it->second;
    };
    out.algebra = V;
    for (auto& [raw, name] : modlist) {
        auto M = std::make_shared<GradedModule>();
        M->alg = V;
        M->data = raw->data;
        install_tables(*M, raw, algraw);
        out.modules.push_back(std::move(M));
    }
    return out;
}

ModFile load_modfile_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_modfile(in);
}

void save_modfile(std::ostream& out, const VertexAlgebra& V,
                  const std::vector<const GradedModule*>& modules) {
    out << "vtxmod 1\n";
    out << "algebra " << V.data.name << "\n";
    out << "group " << (V.data.group.rank() == 0 ? "trivial" : "z2") << "\n";
    if (V.central_charge)
        out << "charge " << scalar_list_str(*V.central_charge) << "\n";
    auto dump_space = [&](const SpaceData& d, const GradedModule& M) {
        for (const auto& b : d.basis)
            out << "basis " << b.name << " " << b.weight << " " << d.group.deg_str(b.degree)
                << "\n";
        for (int u = 0; u < V.dim(); ++u)
            for (int w = 0; w < d.dim(); ++w) {
                long klo = static_cast<long>(V.weight(u)) + d.basis[w].weight - 1 - d.model_cutoff;
                long khi = static_cast<long>(V.weight(u)) + d.basis[w].weight - 1 - d.min_weight;
                for (long k = klo; k <= khi; ++k) {
                    const SparseVec& c = M.comp(u, k, w);
                    if (!c.empty())
                        out << "y " << V.name_of(u) << " " << k << " " << d.basis[w].name
                            << " : " << lincomb_str(c, d) << "\n";
                }
            }
        for (int j = -1; j <= 1; ++j)
            for (int w = 0; w < d.dim(); ++w) {
                int wres = d.basis[w].weight - j;
                if (wres < d.min_weight || wres > d.model_cutoff) continue;
                const SparseVec& c = M.L(j, w);
                if (!c.empty())
                    out << "L " << j << " " << d.basis[w].name << " : " << lincomb_str(c, d)
                        << "\n";
            }
    };
    dump_space(V.data, V.adjoint());
    out << "vacuum " << lincomb_str(V.vacuum_vec, V.data) << "\n";
    for (const GradedModule* M : modules) {
        out << "module " << M->data.name << "\n";
        dump_space(M->data, *M);
        out << "endmodule\n";
    }
}

} // namespace vtx
