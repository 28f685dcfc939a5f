#include "cli.hpp"

#include <algorithm>
#include <ostream>

namespace freealg::cli {

namespace {

CLI::App* deepest_parsed(CLI::App* app) {
  for (;;) {
    const auto subs = app->get_subcommands();
    if (subs.empty()) return app;
    app = subs.front();
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact computation in the free associative algebra K<x,y>", "freealg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", config.field, "q or fp:<prime>")->capture_default_str();
  app.add_option("--alphabet", config.alphabet, "number of letters for poly commands")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for randomized harnesses")->capture_default_str();
  app.add_option("--output", config.output, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--cases", config.cases, "instances for randomized harnesses")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  Registry reg{&config, {}};
  register_poly(app, reg);
  register_degest(app, reg);
  register_endo(app, reg);
  register_mn(app, reg);
  register_bimod(app, reg);
  register_repro(app, reg);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << deepest_parsed(&app)->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << deepest_parsed(&app)->help();
    return 2;
  }

  const auto leaf = std::find_if(reg.leaves.begin(), reg.leaves.end(), [](const auto& l) { return l.first->parsed(); });
  if (leaf == reg.leaves.end()) {
    err << "usage error: no command given\n\n" << deepest_parsed(&app)->help();
    return 2;
  }
  try {
    const Json result = leaf->second();
    if (config.output == "json") {
      out << result.dump(2) << '\n';
    } else {
      render_text(result, out);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << leaf->first->help();
    return 2;
  } catch (const ReportedFailure& f) {
    if (config.output == "json") {
      out << f.report.dump(2) << '\n';
    } else {
      render_text(f.report, out);
    }
    err << error_json(f.error).dump() << '\n';
    return 1;
  } catch (const Error& e) {
    err << error_json(e).dump() << '\n';
    return 1;
  }
}

}  // namespace freealg::cli
