#include "gha/io/report.hpp"

#include <algorithm>
#include <sstream>

namespace gha {

Check& Report::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
    return checks.back();
}

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

Json Report::to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks) {
        Json e = {{"name", c.name}, {"status", c.ok ? "pass" : "fail"}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        cs.push_back(e);
    }
    return {{"schema", schema}, {"command", command}, {"status", ok() ? "pass" : "fail"}, {"checks", cs}, {"data", data}};
}

namespace {

bool flat(const Json& v) {
    return v.is_object() && std::none_of(v.begin(), v.end(), [](const Json& y) { return y.is_structured(); });
}

std::string scalar(const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

void text_value(std::ostream& os, const Json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_structured() && !(x.is_array() && std::none_of(x.begin(), x.end(), [](const Json& y) { return y.is_structured(); }))) {
                os << pad << k << ":\n";
                text_value(os, x, indent + 2);
            } else {
                os << pad << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& x : v) {
            if (flat(x) && !x.empty()) {
                os << pad << "-";
                for (const auto& [k, y] : x.items()) os << " " << k << "=" << scalar(y);
                os << "\n";
            } else if (x.is_structured()) {
                os << pad << "-\n";
                text_value(os, x, indent + 2);
            } else {
                os << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
            }
        }
    } else {
        os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command:";
    for (const auto& c : command) os << " " << c;
    os << "\n";
    for (const auto& c : checks) {
        os << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    if (!data.empty()) text_value(os, data, 0);
    os << (ok() ? "result: pass" : "result: fail") << "\n";
    return os.str();
}

}  // namespace gha
