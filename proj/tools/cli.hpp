#pragma once

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "freealg/degree_estimate.hpp"
#include "freealg/endomorphism.hpp"
#include "freealg/error.hpp"
#include "freealg/malcev_neumann.hpp"
#include "freealg/polynomial.hpp"
#include "json.hpp"

namespace freealg::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string field = "q";
  std::size_t alphabet = 2;
  std::uint64_t seed = 0;
  std::string output = "json";
  long cases = 200;
};

/// Bad argument shape found after parsing (exit status 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A domain failure that still has a partial report for stdout (exit status 1).
struct ReportedFailure {
  Json report;
  Error error;
};

/// A leaf subcommand and the action that produces its result.
struct Registry {
  const RunConfig* config;
  std::vector<std::pair<CLI::App*, std::function<Json()>>> leaves;

  Field field() const { return Field::parse(config->field); }
  void add(CLI::App* app, std::function<Json()> run) { leaves.emplace_back(app, std::move(run)); }
};

/// Option storage that lives as long as the registered action.
template <class T>
std::shared_ptr<T> opts() {
  return std::make_shared<T>();
}

void register_poly(CLI::App& root, Registry& reg);
void register_degest(CLI::App& root, Registry& reg);
void register_endo(CLI::App& root, Registry& reg);
void register_mn(CLI::App& root, Registry& reg);
void register_bimod(CLI::App& root, Registry& reg);
void register_repro(CLI::App& root, Registry& reg);

// Conversions shared by the commands.
Polynomial parse_in(const std::string& text, const Registry& reg);
/// Rank-2 polynomial over the configured field.
Polynomial parse_xy(const std::string& text, const Registry& reg);
Endomorphism parse_endo(const std::string& fx, const std::string& fy, const Registry& reg);
/// A single word with coefficient 1; "1" is the empty word.
Word parse_word(const std::string& text);

Json poly_json(const Polynomial& p);
Json degree_json(Degree d);
Json rational_json(const mpq_class& q);
Json endo_json(const Endomorphism& e);
Json factor_json(const ElementaryFactor& f);
Json decomposition_json(const Decomposition& d);
Json series_json(const TruncatedSeries& s);
Json counterexample_json(const CounterexampleFamily& fam);
Json error_json(const Error& e);

/// Plain-text rendering of a result: "key: value" lines, tables for arrays of
/// objects.
void render_text(const Json& j, std::ostream& out);

/// Parses and dispatches; returns the exit status (0 ok, 1 domain error,
/// 2 usage error).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace freealg::cli
