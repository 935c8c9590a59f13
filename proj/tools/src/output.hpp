#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hkfl/discrepancy.hpp"
#include <nlohmann/json.hpp>

namespace hkfl::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum class Format { Table, Json, Csv };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Everything one command produces. `summary` lines are shown only in table
// format; CSV carries just `table`.
struct Output {
  Json parameters = Json::object();
  Json result = Json::object();
  std::vector<std::string> summary;
  Table table;
  std::vector<Discrepancy> discrepancies;
  int exit_code = 0;
  std::string failure;  // written to the diagnostic stream when exit_code != 0
};

Json to_json(const Discrepancy& d);
void render(const std::string& command, const Output& output, Format format, std::ostream& out,
            std::ostream& err);

}  // namespace hkfl::cli
