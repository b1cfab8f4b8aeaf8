#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace phycv::cli {

using ConfigMap = std::map<std::string, std::string>;

/// Flat `key = value` lines; `#` starts a comment. Keys are flag names
/// without the leading dashes. Throws InvalidParameter on a malformed line.
ConfigMap parse_config(std::istream& in);
ConfigMap read_config_file(const std::filesystem::path& path);

/// {"warp": "15"} -> {"--warp=15"}.
std::vector<std::string> config_to_args(const ConfigMap& config);

} // namespace phycv::cli
