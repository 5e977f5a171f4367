#include "output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace horo::cli {

std::string format_double(double x)
{
    std::array<char, 64> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

std::string join(const std::vector<double>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += format_double(xs[i]);
    }
    return out;
}

std::string join(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string echo_line(const ConfigEcho& echo)
{
    std::string out = "config:";
    for (const auto& [k, v] : echo) out += " " + k + "=" + v;
    return out;
}

nlohmann::ordered_json echo_json(const ConfigEcho& echo)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : echo) j[k] = v;
    return j;
}

ConfigEcho read_echo(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) throw IoError("cannot read " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    ConfigEcho echo;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto j = nlohmann::ordered_json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.contains("config") || !j["config"].is_object())
            throw std::invalid_argument("no config echo in " + file.string());
        for (const auto& [k, v] : j["config"].items()) echo.emplace_back(k, v.get<std::string>());
        return echo;
    }

    auto pos = text.find("config:");
    if (pos == std::string::npos) throw std::invalid_argument("no config echo in " + file.string());
    auto end = text.find_first_of("\r\n", pos);
    std::istringstream tokens(text.substr(pos + 7, end - pos - 7));
    std::string tok;
    while (tokens >> tok) {
        if (tok == "-->") break;
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed config echo token '" + tok + "'");
        echo.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return echo;
}

nlohmann::ordered_json number_or_null(double x)
{
    if (!std::isfinite(x)) return nullptr;
    return x;
}

nlohmann::ordered_json log_value_json(LogValue v)
{
    nlohmann::ordered_json j;
    j["log"] = v.is_zero() ? nlohmann::ordered_json(nullptr) : number_or_null(v.log);
    auto lin = v.linear();
    j["value"] = lin ? nlohmann::ordered_json(*lin) : nlohmann::ordered_json(nullptr);
    return j;
}

void emit(const std::string& path, const std::string& content, std::ostream& fallback)
{
    if (path.empty()) {
        fallback << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace horo::cli
