#pragma once

#include <string>
#include <vector>

namespace rlab::tools {

struct ReproRow {
    std::string name;
    std::string reference;
    std::string computed;
    std::string tolerance;
    std::string command;
    bool pass;
};

const std::vector<std::string>& repro_names();
// empty or "all" runs everything; throws DomainError for unknown names
std::vector<ReproRow> run_repro(const std::string& which, unsigned workers);

}  // namespace rlab::tools
