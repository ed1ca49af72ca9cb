#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "guibl/gui_model.hpp"
#include "guibl/index.hpp"

namespace guibl {

// Insertion-ordered so emitted documents follow the documented field order.
using Json = nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

// ParseError messages carry "source:line:column" and the offending line.
Json parse_json(std::string_view text, std::string_view source_name);

Json to_json(const GuiComponent& component);
Json to_json(const Screen& screen);
Json to_json(const ReproTrace& trace);
ReproTrace trace_from_json(const Json& j);

Json to_json(const ExecutionModel& model);
ExecutionModel model_from_json(const Json& j);
void save_model(const ExecutionModel& model, const std::filesystem::path& path);
ExecutionModel load_model(const std::filesystem::path& path);

inline constexpr std::string_view kIndexFormat = "guibl-index";
inline constexpr int kIndexVersion = 1;

Json to_json(const CorpusIndex& index);
CorpusIndex index_from_json(const Json& j);
// ".json" paths are written as JSON text, anything else as CBOR.
void save_index(const CorpusIndex& index, const std::filesystem::path& path);
CorpusIndex load_index(const std::filesystem::path& path);

Json to_json(const RankedList& ranked);

}  // namespace guibl
