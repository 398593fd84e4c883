#pragma once

#include "korobov/params.hpp"
#include "korobov/tractability.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace korobov {

/// Malformed configuration: `path` locates the offending value ("$.a.family").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, std::string reason)
        : std::runtime_error(path + ": " + reason), path_(std::move(path)), reason_(std::move(reason)) {}
    const std::string& path() const noexcept { return path_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string path_;
    std::string reason_;
};

nlohmann::json to_json(const SequenceFamily& family);
SequenceFamily family_from_json(const nlohmann::json& j, const std::string& path = "$");

/// {"omega", "s", "a", "b"}; invariant violations surface as ConfigError too.
nlohmann::json to_json(const KorobovParams& params);
KorobovParams params_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json to_json(const TractabilityReport& report);

/// Reads and parses a JSON file; syntax errors become ConfigError.
nlohmann::json load_json_file(const std::string& filename);

} // namespace korobov
