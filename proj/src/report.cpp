#include "vtxcalc/report.hpp"
#include <json.hpp>
#include <sstream>

namespace vtx {

std::string report_text(const PropertyReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS" : (r.status == "fail" ? "FAIL" : r.status)) << "  " << r.id;
    if (!r.window.empty()) os << "  window=" << r.window;
    if (!r.context.empty()) os << "  [" << r.context << "]";
    for (const auto& w : r.witnesses)
        os << "\n    at " << w.where << ": lhs = " << w.lhs << ", rhs = " << w.rhs;
    for (const auto& kv : r.info)
        os << "\n    " << kv.first << ": " << kv.second;
    return os.str();
}

std::string reports_json(const std::vector<PropertyReport>& rs,
                         const std::map<std::string, std::string>& config) {
    nlohmann::ordered_json doc;
    doc["schemaVersion"] = 1;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& kv : config) cfg[kv.first] = kv.second;
    doc["config"] = cfg;
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : rs) {
        nlohmann::ordered_json jr;
        jr["id"] = r.id;
        jr["anchor"] = r.anchor;
        jr["context"] = r.context;
        jr["window"] = r.window;
        jr["pass"] = r.passed();
        jr["status"] = r.status;
        jr["witnesses"] = nlohmann::ordered_json::array();
        for (const auto& w : r.witnesses) {
            nlohmann::ordered_json jw;
            jw["where"] = w.where;
            jw["lhs"] = w.lhs;
            jw["rhs"] = w.rhs;
            jr["witnesses"].push_back(jw);
        }
        nlohmann::ordered_json info = nlohmann::ordered_json::object();
        for (const auto& kv : r.info) info[kv.first] = kv.second;
        jr["info"] = info;
        doc["results"].push_back(jr);
    }
    return doc.dump(2);
}

} // namespace vtx
