#ifndef VTXCALC_REPORT_HPP
#define VTXCALC_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace vtx {

struct Witness {
    std::string where;
    std::string lhs, rhs;
};

/// Outcome of one verified identity/property. A pass is always a claim
/// about the recorded window and context, nothing more.
struct PropertyReport {
    std::string id;
    std::string anchor;  // one-line description of the identity
    std::string context; // instance / modules / functional source
    std::string window;
    std::string status = "pass"; // pass | fail | precondition-unmet | error
    std::vector<Witness> witnesses;
    std::map<std::string, std::string> info;

    bool passed() const { return status == "pass"; }
    void fail(Witness w) {
        status = "fail";
        if (witnesses.size() < 8) witnesses.push_back(std::move(w));
    }
};

std::string report_text(const PropertyReport& r);
std::string reports_json(const std::vector<PropertyReport>& rs,
                         const std::map<std::string, std::string>& config);

} // namespace vtx

#endif
