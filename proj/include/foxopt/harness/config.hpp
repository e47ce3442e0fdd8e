#pragma once

#include <map>
#include <string>

namespace foxopt::harness {

/// Flat view of an INI-style file: "section.key" -> value. Lines are
/// `key = value`, sections are `[name]`, comments start with '#' or ';'.
/// Keys before any section header land under "global.".
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_config_text(const std::string& text);
KeyValues parse_config_file(const std::string& path);

} // namespace foxopt::harness
