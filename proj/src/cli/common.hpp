#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace braidfgl::cli {

// Bad invocation that the argument parser cannot see (missing file, missing
// alternative option, ...). Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::string format = "text";
  std::uint64_t seed = 1;
  int max_degree = 64;
  int max_stages = 8;
  unsigned threads = 1;

  std::istream* in = nullptr;
  std::string out;
  std::string err;
  std::function<void()> action;

  bool json() const { return format == "json"; }
  // "-" reads stdin; anything else is the literal value.
  std::string value(const std::string& arg);
  // "-" reads stdin; otherwise the named file, UsageError if unreadable.
  std::string file(const std::string& path);
  // "@path" reads a file, "-" reads stdin, anything else is literal.
  std::string value_or_file(const std::string& arg);

  void line(const std::string& text) { out += text + "\n"; }
  void emit(const nlohmann::json& j) { out += j.dump() + "\n"; }
};

// Parses JSON text, reporting failures as ParseError.
nlohmann::json parse_json(const std::string& text);

void add_braid_commands(CLI::App& app, Context& ctx);
void add_fgl_commands(CLI::App& app, Context& ctx);
void add_kz_commands(CLI::App& app, Context& ctx);

}  // namespace braidfgl::cli
