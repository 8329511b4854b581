#include "hooleyff_cli/toml.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "hooleyff/error.hpp"

namespace hooleyff::cli {

namespace {

using nlohmann::json;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  json run() {
    json root = json::object();
    json* current = &root;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        current = header(root);
      } else {
        key_value(*current);
      }
      end_of_line();
    }
    return root;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ConfigParse, "TOML line " + std::to_string(line_) + ": " + what);
  }

  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[i_]; }
  char next() {
    const char c = s_[i_++];
    if (c == '\n') ++line_;
    return c;
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++i_;
  }
  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') ++i_;
  }
  // Whitespace, comments and newlines (inside arrays or between statements).
  void skip_blank_lines() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\n' || peek() == '\r')
        next();
      else
        break;
    }
  }
  void end_of_line() {
    skip_ws();
    skip_comment();
    if (peek() == '\r') ++i_;
    if (!eof() && peek() != '\n') fail("unexpected trailing characters");
    if (!eof()) next();
  }

  std::string bare_or_quoted_key() {
    skip_ws();
    if (peek() == '"') return basic_string();
    if (peek() == '\'') return literal_string();
    std::string key;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
      key += next();
    if (key.empty()) fail("expected a key");
    return key;
  }

  std::vector<std::string> dotted_key() {
    std::vector<std::string> parts{bare_or_quoted_key()};
    skip_ws();
    while (peek() == '.') {
      ++i_;
      parts.push_back(bare_or_quoted_key());
      skip_ws();
    }
    return parts;
  }

  // Walks/creates tables along `path`; the last element of an array of
  // tables is descended into.
  json* descend(json& root, const std::vector<std::string>& path, std::size_t count) {
    json* node = &root;
    for (std::size_t k = 0; k < count; ++k) {
      json& child = (*node)[path[k]];
      if (child.is_null()) child = json::object();
      if (child.is_array()) {
        if (child.empty() || !child.back().is_object()) fail("key '" + path[k] + "' is not a table");
        node = &child.back();
      } else if (child.is_object()) {
        node = &child;
      } else {
        fail("key '" + path[k] + "' is not a table");
      }
    }
    return node;
  }

  json* header(json& root) {
    ++i_;  // [
    const bool array = peek() == '[';
    if (array) ++i_;
    const auto path = dotted_key();
    skip_ws();
    if (peek() != ']') fail("expected ']'");
    ++i_;
    if (array) {
      if (peek() != ']') fail("expected ']]'");
      ++i_;
    }
    json* parent = descend(root, path, path.size() - 1);
    json& slot = (*parent)[path.back()];
    if (array) {
      if (slot.is_null()) slot = json::array();
      if (!slot.is_array()) fail("'" + path.back() + "' redefined as an array of tables");
      slot.push_back(json::object());
      return &slot.back();
    }
    if (slot.is_null()) slot = json::object();
    if (!slot.is_object()) fail("'" + path.back() + "' redefined as a table");
    return &slot;
  }

  void key_value(json& table) {
    const auto path = dotted_key();
    skip_ws();
    if (peek() != '=') fail("expected '=' after key");
    ++i_;
    skip_ws();
    json* parent = descend(table, path, path.size() - 1);
    if (parent->contains(path.back())) fail("duplicate key '" + path.back() + "'");
    (*parent)[path.back()] = value();
  }

  json value() {
    const char c = peek();
    if (c == '"') {
      if (s_.substr(i_, 3) == "\"\"\"") fail("multi-line strings are not supported");
      return basic_string();
    }
    if (c == '\'') return literal_string();
    if (c == '[') return array();
    if (c == '{') return inline_table();
    if (s_.substr(i_, 4) == "true") {
      i_ += 4;
      return true;
    }
    if (s_.substr(i_, 5) == "false") {
      i_ += 5;
      return false;
    }
    return number();
  }

  std::string basic_string() {
    ++i_;
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = next();
      if (c == '"') break;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (eof()) fail("unterminated escape");
      switch (next()) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        default: fail("unsupported escape sequence");
      }
    }
    return out;
  }

  std::string literal_string() {
    ++i_;
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      const char c = next();
      if (c == '\'') break;
      out += c;
    }
    return out;
  }

  json array() {
    ++i_;
    json out = json::array();
    while (true) {
      skip_blank_lines();
      if (peek() == ']') {
        ++i_;
        return out;
      }
      out.push_back(value());
      skip_blank_lines();
      if (peek() == ',') {
        ++i_;
        continue;
      }
      if (peek() != ']') fail("expected ',' or ']' in array");
    }
  }

  json inline_table() {
    ++i_;
    json out = json::object();
    skip_ws();
    if (peek() == '}') {
      ++i_;
      return out;
    }
    while (true) {
      key_value(out);
      skip_ws();
      if (peek() == ',') {
        ++i_;
        continue;
      }
      if (peek() != '}') fail("expected ',' or '}' in inline table");
      ++i_;
      return out;
    }
  }

  json number() {
    std::string tok;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '+' || peek() == '-' ||
                      peek() == '.' || peek() == '_'))
      tok += next();
    if (tok.empty()) fail("expected a value");
    std::string clean;
    for (char c : tok)
      if (c != '_') clean += c;
    const bool is_float = clean.find_first_of(".eE") != std::string::npos || clean == "inf" || clean == "nan";
    if (clean.size() > 1 && clean[0] == '0' && std::isalpha(static_cast<unsigned char>(clean[1])))
      fail("hex/octal/binary literals are not supported");
    const char* b = clean.data() + (clean[0] == '+' ? 1 : 0);
    const char* e = clean.data() + clean.size();
    if (is_float) {
      try {
        std::size_t used = 0;
        const double d = std::stod(std::string(b, e), &used);
        if (used != static_cast<std::size_t>(e - b)) fail("malformed float '" + tok + "'");
        return d;
      } catch (const std::logic_error&) {
        fail("malformed float '" + tok + "'");
      }
    }
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e) fail("malformed value '" + tok + "'");
    return v;
  }
};

}  // namespace

nlohmann::json parse_toml(std::string_view text) { return Parser(text).run(); }

}  // namespace hooleyff::cli
