#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace sdp {

// Library-wide error carrying a stable machine-readable code plus a JSON
// details object (witness elements, offending indices, ...).  The CLI prints
// these verbatim on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message, nlohmann::json details = nlohmann::json::object())
      : std::runtime_error(message), code_(std::move(code)), details_(std::move(details)) {}

  const std::string& code() const { return code_; }
  const nlohmann::json& details() const { return details_; }

  nlohmann::json to_json() const {
    return nlohmann::json{{"error", code_}, {"message", what()}, {"details", details_}};
  }

 private:
  std::string code_;
  nlohmann::json details_;
};

}  // namespace sdp
