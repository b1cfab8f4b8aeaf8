#include <phycv/cli/config.hpp>
#include <phycv/error.hpp>

#include <fstream>

namespace phycv::cli {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

ConfigMap parse_config(std::istream& in) {
    ConfigMap config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidParameter("config line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        while (!key.empty() && key.front() == '-') {
            key.erase(0, 1);
        }
        if (key.empty()) {
            throw InvalidParameter("config line " + std::to_string(line_no) + ": empty key");
        }
        config[key] = value;
    }
    return config;
}

ConfigMap read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw NotFound("cannot open config file: " + path.string());
    }
    return parse_config(in);
}

std::vector<std::string> config_to_args(const ConfigMap& config) {
    std::vector<std::string> args;
    args.reserve(config.size());
    for (const auto& [key, value] : config) {
        args.push_back("--" + key + "=" + value);
    }
    return args;
}

} // namespace phycv::cli
