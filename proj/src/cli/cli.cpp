#include "braidfgl/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "braidfgl/error.hpp"
#include "common.hpp"

namespace braidfgl::cli {

std::string Context::value(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(*in), std::istreambuf_iterator<char>());
}

std::string Context::file(const std::string& path) {
  if (path == "-") return value(path);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

std::string Context::value_or_file(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return file(arg.substr(1));
  return value(arg);
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  Context ctx;
  ctx.in = &in;
  CLI::App app{"Braid groups, KZ connections and formal group laws", "braidfgl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for random generation")->capture_default_str();
  app.add_option("--max-degree", ctx.max_degree, "Largest polynomial degree accepted")->capture_default_str();
  app.add_option("--max-stages", ctx.max_stages, "Largest Lazard stage accepted")->capture_default_str();
  app.add_option("--threads", ctx.threads, "Worker threads for relation checks")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  add_braid_commands(app, ctx);
  add_fgl_commands(app, ctx);
  add_kz_commands(app, ctx);

  CommandResult result;
  auto usage_failure = [&](const std::string& message) {
    result.exit_code = 2;
    result.out.clear();
    result.err = "error: " + message + "\n";
  };
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (ctx.action) ctx.action();
    result.out = std::move(ctx.out);
    result.err = std::move(ctx.err);
  } catch (const CLI::CallForHelp&) {
    // Help for the innermost selected subcommand.
    const CLI::App* sub = &app;
    while (!sub->get_subcommands().empty()) sub = sub->get_subcommands().front();
    result.out = sub->help();
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::Success&) {
    result.out = app.help();
  } catch (const CLI::ParseError& e) {
    usage_failure(std::string(e.what()) + "\n" + app.help());
  } catch (const UsageError& e) {
    usage_failure(e.what());
  } catch (const ParseError& e) {
    usage_failure(e.what());
  } catch (const nlohmann::json::exception& e) {
    usage_failure(std::string("malformed JSON input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    usage_failure(e.what());
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.out.clear();
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace braidfgl::cli
