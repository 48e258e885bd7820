#ifndef VTXCALC_MODFILE_HPP
#define VTXCALC_MODFILE_HPP

#include "vtxcalc/algebra.hpp"
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace vtx {

/// An algebra definition file plus any modules it declares.
///
/// Format (line oriented, '#' comments):
///   vtxmod 1
///   algebra <name>
///   group trivial|z2
///   charge <scalar>                      (optional)
///   basis <name> <weight> <degree>
///   vacuum <lincomb>
///   y <u> <k> <v> : <lincomb>
///   L <j> <v> : <lincomb>
///   module <name> ... endmodule          (same basis/y/L lines)
///
/// Scalars are lists of (z-exponent, rational) pairs like [(0,3/2)(-1,1)],
/// rationals as p/q. Linear combinations are <scalar>*<name> joined by '+'.
/// Omitted y/L lines are zero.
struct ModFile {
    std::shared_ptr<VertexAlgebra> algebra;
    std::vector<std::shared_ptr<GradedModule>> modules;

    std::shared_ptr<GradedModule> module(const std::string& name) const;
};

ModFile load_modfile(std::istream& in);
ModFile load_modfile_path(const std::string& path);

/// Serializes table-backed data; components are enumerated over the model
/// cutoff, so this is meant for finite instances (comm-alg, fusion output).
void save_modfile(std::ostream& out, const VertexAlgebra& V,
                  const std::vector<const GradedModule*>& modules);

std::string scalar_list_str(const ParamScalar& p);
ParamScalar scalar_list_parse(const std::string& s);

} // namespace vtx

#endif
