#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "horo/log_value.hpp"

namespace horo::cli {

/// Write failure; maps to exit code 74.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered key=value parameters that fully determine a command's output.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

std::string join(const std::vector<double>& xs);
std::string join(const std::vector<int>& xs);

/// "command=simulate d=3 ..." as embedded in CSV and SVG comments.
std::string echo_line(const ConfigEcho& echo);
nlohmann::ordered_json echo_json(const ConfigEcho& echo);

/// Recovers the echo from any file this tool wrote (CSV, SVG or JSON).
ConfigEcho read_echo(const std::filesystem::path& file);

/// {"log": ..., "value": ...}; value is null when exp(log) overflows.
nlohmann::ordered_json log_value_json(LogValue v);

/// Doubles print as shortest round-trip; non-finite values print as null.
nlohmann::ordered_json number_or_null(double x);

/// Writes `content` to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, const std::string& content, std::ostream& fallback);

}  // namespace horo::cli
