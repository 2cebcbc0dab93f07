#include "untwist/engine/report.hpp"

#include <sstream>

namespace untwist {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

nlohmann::json reasons_json(const std::vector<Reason>& rs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back({{"check", r.check}, {"detail", r.detail}});
    return a;
}

nlohmann::json set_json(const TwistSet& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& t : s) a.push_back(t.str());
    return a;
}

}  // namespace

std::string format_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "knot " << r.knot << "\n";
    os << "convention: " << r.convention_note << "\n";
    for (const auto& v : r.verdicts) {
        os << "  " << v.index.str() << "  " << to_string(v.status) << "\n";
        for (const auto& reason : v.reasons) os << "      x " << reason.check << ": " << reason.detail << "\n";
        for (const auto& reason : v.inconclusive) os << "      ? " << reason.check << ": " << reason.detail << "\n";
    }
    os << "known:    " << to_string(r.known) << "\n";
    os << "possible: " << to_string(r.possible) << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

nlohmann::json report_to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["knot"] = r.knot;
    j["convention_note"] = r.convention_note;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : r.verdicts)
        vs.push_back({{"index", v.index.str()},
                      {"status", to_string(v.status)},
                      {"reasons", reasons_json(v.reasons)},
                      {"inconclusive", reasons_json(v.inconclusive)}});
    j["verdicts"] = vs;
    j["known"] = set_json(r.known);
    j["possible"] = set_json(r.possible);
    j["notes"] = r.notes;
    return j;
}

std::string format_csv(const AnalysisReport& r) {
    std::ostringstream os;
    os << "knot,index,status,check,detail\n";
    for (const auto& v : r.verdicts) {
        if (v.reasons.empty()) {
            os << csv_field(r.knot) << "," << v.index.str() << "," << to_string(v.status) << ",,\n";
            continue;
        }
        for (const auto& reason : v.reasons)
            os << csv_field(r.knot) << "," << v.index.str() << "," << to_string(v.status) << ","
               << csv_field(reason.check) << "," << csv_field(reason.detail) << "\n";
    }
    return os.str();
}

}  // namespace untwist
