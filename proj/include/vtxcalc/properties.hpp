#ifndef VTXCALC_PROPERTIES_HPP
#define VTXCALC_PROPERTIES_HPP

#include "vtxcalc/dual.hpp"
#include "vtxcalc/instances.hpp"
#include "vtxcalc/report.hpp"
#include <optional>

namespace vtx {

enum class Flavor { P, Q };

struct CheckConfig {
    std::string instance = "a2"; // a2 | q | qz2 | qq | heisenberg | file:<path>
    int cutoff = 3;              // declared probe cutoff (pairs, spanning sets)
    int window = 4;              // coefficient window radius
    unsigned long seed = 1;
    std::string lambda_spec;     // canonical:w=<name> | random:seed=<n> | balanced |
                                 // unbalanced | zero | file:<path> (per-check default if empty)
    Flavor flavor = Flavor::P;
};

/// Materialized instance context shared by a run: the algebra, the module
/// pair for dual-space checks, spanning sets, and functional sources.
/// The internal model cutoff is sized so every windowed identity stays
/// exact; TruncationOverflow in a check means it was sized wrong, never a
/// silent truncation.
struct CheckContext {
    CheckConfig cfg;
    std::shared_ptr<VertexAlgebra> V;
    std::shared_ptr<GradedModule> W1, W2;
    DualCtxPtr dctx;
    bool commalg = false;
    std::optional<CommAlgebraData> cadata;
    int gen_cutoff = 0;
    int probe_cutoff = 0;

    static CheckContext make(const CheckConfig& cfg);

    std::vector<int> gen_set() const; // algebra basis with weight <= gen_cutoff
    std::vector<std::pair<int, int>> probe_pairs() const; // each factor <= probe_cutoff
    std::vector<DualFn> spanning_lambdas() const;
    DualFn lambda_from_spec(const std::string& spec) const;
    std::string describe() const;
};

/// Table-driven verifier. Unknown ids raise UnknownProperty.
PropertyReport verify_property(const std::string& id, CheckContext& ctx);

std::vector<std::string> suite_properties(const std::string& suite, const CheckContext& ctx);
std::vector<std::string> all_property_ids();
std::string property_anchor(const std::string& id);

// ---- compat / closure layer (also used by the CLI compat command) ----

PropertyReport check_compat(CheckContext& ctx, Flavor flavor, const DualFn& lam,
                            const std::string& lam_desc);

/// canonical lambda = w' o Y_W(., z): requires W1 = algebra as module
DualFn canonical_lambda(const CheckContext& ctx, const std::string& wprime_name);
/// comm-alg functionals for the converse example
DualFn balanced_lambda(const CheckContext& ctx);
DualFn unbalanced_lambda(const CheckContext& ctx);

struct ClosureResult {
    bool cutoff_exceeded = false;
    std::string offending_op;
    int dimension = 0;
    // (weight eigenvalue, degree string) -> dimension
    std::map<std::pair<long, std::string>, int> graded_dims;
};
ClosureResult closure_Wlambda(CheckContext& ctx, Flavor flavor, const DualFn& lam,
                              long support_bound);

} // namespace vtx

#endif
