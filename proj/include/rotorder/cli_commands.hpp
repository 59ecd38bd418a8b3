#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace rotorder {

/// Result of one CLI command: the machine-readable report and the same
/// verdicts as human-readable lines. Exit codes: 0 decided/success, 1 usage,
/// 2 input error, 3 internal assertion (invariant violation); the nonzero codes
/// are produced by the caller from thrown exceptions, except where a command
/// decides its own (the sweep's disagreement exit).
struct Report {
    nlohmann::json data;
    std::vector<std::string> lines;
    int exit_code = 0;
};

Report cmd_minpoly(const std::string& family, unsigned long n);
Report cmd_decide(const std::string& angle_text);
Report cmd_gates(const std::string& file_path, const std::string& action,
                 const std::string& phi_text, unsigned max_len);
Report cmd_sweep(unsigned qmax);

}  // namespace rotorder
