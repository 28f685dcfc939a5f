#include <regex>

#include "cli.hpp"

namespace freealg::cli {

namespace {

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex shape(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw UsageError("--k-range must look like 2..6");
  const long lo = std::stol(m[1]), hi = std::stol(m[2]);
  if (lo > hi) throw UsageError("--k-range is empty");
  return {lo, hi};
}

}  // namespace

void register_repro(CLI::App& root, Registry& reg) {
  auto* group = root.add_subcommand("repro", "reproduce the counterexample and series computations");
  group->require_subcommand(1);

  {
    auto range = opts<std::string>();
    *range = "2..6";
    auto* cmd = group->add_subcommand("theorem8", "degrees and ratios of the f = u^3 + r, g = u^2 + s family");
    cmd->add_option("--k-range", *range, "inclusive range lo..hi")->capture_default_str();
    reg.add(cmd, [range, &reg] {
      const auto [lo, hi] = parse_range(*range);
      Json rows = Json::array();
      bool above_half = true, decreasing = true, conjecture_fails = true;
      std::optional<mpq_class> prev;
      for (long k = lo; k <= hi; ++k) {
        const auto fam = build_counterexample(k, reg.field());
        const auto conj = check_conjecture_inequality(fam.f, fam.g);
        above_half = above_half && fam.ratio > mpq_class(1, 2);
        decreasing = decreasing && (!prev || fam.ratio < *prev);
        conjecture_fails = conjecture_fails && conj.violated;
        prev = fam.ratio;
        rows.push_back({{"k", k},
                        {"deg_f", degree_json(fam.f.degree())},
                        {"deg_g", degree_json(fam.g.degree())},
                        {"deg_comm", fam.commutator_degree},
                        {"ratio", rational_json(fam.ratio)},
                        {"conjecture_violated", conj.violated}});
      }
      return Json{{"field", reg.field().selector()},
                  {"rows", rows},
                  {"ratios_above_half", above_half},
                  {"ratios_decreasing", decreasing},
                  {"conjecture_fails_everywhere", conjecture_fails}};
    });
  }
  {
    struct O {
      long k = 2, window = 10;
      int basis_rounds = kDefaultBasisRounds;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("theorem9", "square root and g^(3/2) of ((xy)^k x)^2 + xy + yx over F_2");
    cmd->add_option("--k", o->k)->capture_default_str();
    cmd->add_option("--window", o->window)->capture_default_str();
    cmd->add_option("--basis-rounds", o->basis_rounds)->check(CLI::NonNegativeNumber)->capture_default_str();
    reg.add(cmd, [o] {
      const auto g = build_theorem9_input(o->k);
      Json report{{"k", o->k}, {"window", o->window}, {"basis_rounds", o->basis_rounds}, {"input", print_series(g)}};
      std::optional<Error> failure;
      try {
        const auto h = mn_sqrt_char2(g, o->window, o->basis_rounds);
        const auto residual = series_mul(h, h) + g;
        report["sqrt"] = {{"root", print_series(h)},
                          {"residual_top", degree_json(residual.top())},
                          {"residual_clear", residual.top() < Degree(-o->window)}};
      } catch (const Error& e) {
        report["sqrt"] = {{"error", error_json(e)}};
        failure = e;
      }
      try {
        const auto fp = mn_fractional_power(g, 3, 2, o->window, o->basis_rounds);
        const auto w = negative_power_witness(fp.value);
        report["witness"] = {{"found", w.has_value()},
                             {"witness", w ? Json(to_string(*w)) : Json(nullptr)},
                             {"degree", w ? Json(w->degree()) : Json(nullptr)}};
      } catch (const Error& e) {
        report["witness"] = {{"error", error_json(e)}};
        if (!failure) failure = e;
      }
      if (failure) throw ReportedFailure{report, *failure};
      return report;
    });
  }
}

}  // namespace freealg::cli
