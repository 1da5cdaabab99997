#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cogga {

std::string trim(const std::string& s);

// Collapse runs of whitespace to single spaces and trim the ends.
std::string normalize_whitespace(const std::string& s);

std::string to_lower(const std::string& s);

// True if `phrase` occurs in `text` on word boundaries (case-insensitive).
bool contains_phrase(const std::string& text, const std::string& phrase);

// Deterministic clause splitting: sentences on [.?!], then clauses on the
// connectors "and" / "then". Empty clauses are dropped.
std::vector<std::string> split_clauses(const std::string& instruction);

// First integer appearing in `text` that lies in [1, max_value].
std::optional<int> first_int_in_range(const std::string& text, int max_value);

// Word-boundary, case-insensitive search for the token "stop".
bool mentions_stop(const std::string& text);

std::vector<std::string> split_lines(const std::string& text);

// Value of the first line starting with `key` (after stripping the key), if any.
std::optional<std::string> line_value(const std::string& text, const std::string& key);

// Quote with double quotes, escaping backslash and quote characters.
std::string quote(const std::string& s);

// Tokenize a record line into words; quoted segments become single tokens.
std::vector<std::string> tokenize_record(const std::string& line);

// Single-line escaping for multi-line payloads (\\ and \n).
std::string escape_multiline(const std::string& s);
std::string unescape_multiline(const std::string& s);

}  // namespace cogga
