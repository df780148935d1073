#pragma once

#include <cstdint>
#include <string>

#include "acgw/document.hpp"
#include "json.hpp"

namespace acgw::cli {

enum ExitCode { kOk = 0, kSemantic = 1, kUsage = 2 };

struct Output {
    int code = kOk;
    std::string text;
    nlohmann::json json = nlohmann::json::object();
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Output cmd_validate(const Document& doc);
Output cmd_homology(const Document& doc);
Output cmd_exact(const Document& doc);
Output cmd_snake(const Document& doc);
Output cmd_les(const Document& doc);
Output cmd_map_homology(const Document& doc);
Output cmd_oracle(const Document& doc);
/// Only "dot" is supported; name selects a single complex, snake or ses.
Output cmd_render(const Document& doc, const std::string& format, const std::string& name = "");

struct GenRequest {
    std::string kind = "complex";  // complex | map | ses | snake
    std::uint64_t seed = 42;
    std::size_t size = 6;
    bool strong = false;
};
Output cmd_gen(const GenRequest& req);

}  // namespace acgw::cli
