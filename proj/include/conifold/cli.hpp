#pragma once

// Presentation files and the three command-line verbs.  Commands return
// their exit status and a JSON document instead of printing, so they can be
// driven in-process.  Indices in emitted documents are 1-based.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "conifold/a_model.hpp"
#include "conifold/transition.hpp"

namespace conifold {

/// Raised for unreadable or malformed presentation files (exit status 2).
class ParseError : public Error {
 public:
  using Error::Error;
};

struct PresentationFile {
  TransitionPresentation presentation;
  bool had_A = false;
  bool had_B = false;
  std::vector<GwEntry> gw;
  bool had_gw = false;
  int order = 4;
  std::optional<std::size_t> base_rank;
  std::optional<IntMatrix> lift;
  std::optional<MixedConstants> mixed;
};

PresentationFile parse_presentation(const nlohmann::json& doc);
PresentationFile load_presentation(const std::string& path);
nlohmann::json presentation_to_json(const PresentationFile& file);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kValidationFailed = 1;
inline constexpr int kParseOrUsage = 2;
}  // namespace exit_code

struct CommandResult {
  int exit_code = exit_code::kOk;
  nlohmann::json output;
  std::string diagnostics;
};

struct ReportOptions {
  bool monodromy = false;
  bool yukawa = false;
  bool glue = false;
  std::optional<int> series_order;

  /// No section flag at all means every section.
  bool all_sections() const { return !monodromy && !yukawa && !glue; }
};

CommandResult cmd_validate(const std::string& path);
CommandResult cmd_report(const std::string& path, const ReportOptions& options);
/// direction is "x-to-y" or "y-to-x".
CommandResult cmd_transform(const std::string& path, const std::string& direction);

}  // namespace conifold
