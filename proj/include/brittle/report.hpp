#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace brittle {

/// Structured outcome of one verification claim.
struct Report {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  std::string status = "pass";  // pass | fail | inconclusive
  nlohmann::json witness = nlohmann::json::object();
  std::int64_t elapsed_ms = 0;

  nlohmann::json to_json() const {
    return {{"claim", claim},
            {"params", params},
            {"status", status},
            {"witness", witness},
            {"elapsed_ms", elapsed_ms}};
  }
};

}  // namespace brittle
