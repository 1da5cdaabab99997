#include "cogga/text_util.hpp"

#include <cctype>
#include <sstream>

#include "cogga/errors.hpp"

namespace cogga {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string normalize_whitespace(const std::string& s) {
    std::string out;
    bool in_space = true;  // swallow leading whitespace
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(c);
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::string to_lower(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool contains_phrase(const std::string& text, const std::string& phrase) {
    if (phrase.empty()) return false;
    std::string t = to_lower(text);
    std::string p = to_lower(phrase);
    std::size_t pos = 0;
    while ((pos = t.find(p, pos)) != std::string::npos) {
        bool left_ok = pos == 0 || !is_word_char(t[pos - 1]);
        std::size_t end = pos + p.size();
        bool right_ok = end == t.size() || !is_word_char(t[end]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

static std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '.' || c == '?' || c == '!') {
            std::string t = trim(cur);
            if (!t.empty()) out.push_back(t);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
    return out;
}

std::vector<std::string> split_clauses(const std::string& instruction) {
    std::vector<std::string> clauses;
    for (const std::string& sentence : split_sentences(instruction)) {
        // Split on the connector words, keeping everything else verbatim.
        std::vector<std::string> words;
        std::istringstream in(sentence);
        std::string w;
        std::string cur;
        auto flush = [&]() {
            std::string t = trim(cur);
            // Strip a leading comma left behind by ", and" style connectors.
            while (!t.empty() && (t.front() == ',' || t.front() == ' ')) t.erase(t.begin());
            if (!t.empty()) clauses.push_back(t);
            cur.clear();
        };
        while (in >> w) {
            std::string bare = w;
            while (!bare.empty() && (bare.back() == ',' || bare.back() == ';')) bare.pop_back();
            std::string lw = to_lower(bare);
            if ((lw == "and" || lw == "then") && bare.size() == w.size()) {
                flush();
            } else {
                if (!cur.empty()) cur.push_back(' ');
                cur += w;
            }
        }
        flush();
    }
    return clauses;
}

std::optional<int> first_int_in_range(const std::string& text, int max_value) {
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            long long v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000000) {
                v = v * 10 + (text[j] - '0');
                ++j;
            }
            if (v >= 1 && v <= max_value) return static_cast<int>(v);
            i = j;
        } else {
            ++i;
        }
    }
    return std::nullopt;
}

bool mentions_stop(const std::string& text) {
    return contains_phrase(text, "stop");
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::optional<std::string> line_value(const std::string& text, const std::string& key) {
    for (const std::string& line : split_lines(text)) {
        if (line.rfind(key, 0) == 0) return trim(line.substr(key.size()));
    }
    return std::nullopt;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::string> tokenize_record(const std::string& line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        } else if (line[i] == '"') {
            std::string tok;
            ++i;
            while (i < line.size() && line[i] != '"') {
                if (line[i] == '\\' && i + 1 < line.size()) ++i;
                tok.push_back(line[i]);
                ++i;
            }
            if (i >= line.size()) throw ParseError("unterminated quote in: " + line);
            ++i;  // closing quote
            tokens.push_back(tok);
        } else {
            std::string tok;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                tok.push_back(line[i]);
                ++i;
            }
            tokens.push_back(tok);
        }
    }
    return tokens;
}

std::string escape_multiline(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\') {
            out += "\\\\";
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string unescape_multiline(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) {
            ++i;
            out.push_back(s[i] == 'n' ? '\n' : s[i]);
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

}  // namespace cogga
