#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace qbk::testing {

inline nlohmann::json load_fixture(const std::string& name) {
  const std::string path = std::string(QBK_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  return nlohmann::json::parse(in);
}

}  // namespace qbk::testing
