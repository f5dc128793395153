#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hfg {

enum class Status { ok, hypothesis_fail, alarm, error };
std::string to_string(Status s);
int exit_code(Status s);

struct CommandResult {
    Status status = Status::ok;
    nlohmann::json payload;
    std::string human_text;
    bool json_format = false;
    // A generated file (construct). Written to data_path, or to standard
    // output when data_path is empty, in which case the report goes to
    // standard error.
    std::optional<std::string> data;
    std::string data_path;

    std::string rendered() const;
};

// args excludes the program name; stdin_source backs the "-" file argument.
CommandResult run(const std::vector<std::string>& args, std::istream& stdin_source);

}  // namespace hfg
