#pragma once

#include "gha/io/json_io.hpp"

#include <string>
#include <vector>

namespace gha {

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct Report {
    static constexpr const char* schema = "gha.report/1";
    std::vector<std::string> command;
    std::vector<Check> checks;
    Json data = Json::object();

    Check& add(std::string name, bool ok, std::string detail = "");
    bool ok() const;
    Json to_json() const;
    std::string to_text() const;
};

}  // namespace gha
