#include "cli.hpp"

namespace freealg::cli {

namespace {

struct SeriesInput {
  long k = 0;
  std::string g;
  std::string variant = "xy+yx";
  std::optional<long> floor;
  long window = 10;
  int basis_rounds = kDefaultBasisRounds;
};

void add_series_input(CLI::App* cmd, SeriesInput& o) {
  auto* k = cmd->add_option("--k", o.k, "use the family ((xy)^k x)^2 + xy + yx over F_2");
  auto* g = cmd->add_option("--g", o.g, "series text, e.g. \"x*y*x*y + x^-1\"");
  k->excludes(g);
  cmd->add_option("--variant", o.variant, "family summand")
      ->check(CLI::IsMember({"xy+yx", "xy+u"}))
      ->capture_default_str();
  cmd->add_option("--floor", o.floor, "exactness floor of --g (exact when omitted)");
}

void add_window(CLI::App* cmd, SeriesInput& o) {
  cmd->add_option("--window", o.window, "target exactness down to -window")->capture_default_str();
  cmd->add_option("--basis-rounds", o.basis_rounds, "conjugation closure rounds of the slice basis")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

TruncatedSeries input_series(const SeriesInput& o, const Registry& reg) {
  if (!o.g.empty()) return parse_series(o.g, reg.field(), o.floor);
  if (o.k == 0) throw UsageError("one of --k or --g is required");
  return build_theorem9_input(o.k, o.variant == "xy+u" ? SummandVariant::XyPlusU : SummandVariant::XyPlusYx);
}

TruncatedSeries power(const TruncatedSeries& h, long n) {
  auto out = h;
  for (long i = 1; i < n; ++i) out = series_mul(out, h);
  return out;
}

Json root_json(const TruncatedSeries& g, const TruncatedSeries& h, long n, long window) {
  const auto residual = power(h, n) - g;
  return {{"input", series_json(g)},
          {"root", series_json(h)},
          {"residual_top", degree_json(residual.top())},
          {"residual_clear", residual.top() < Degree(-window)},
          {"window", window}};
}

Json witness_json(const std::optional<GroupWord>& w) {
  if (!w) return {{"found", false}, {"witness", nullptr}, {"degree", nullptr}};
  return {{"found", true}, {"witness", to_string(*w)}, {"degree", w->degree()}};
}

}  // namespace

void register_mn(CLI::App& root, Registry& reg) {
  auto* group = root.add_subcommand("mn", "truncated Mal'tsev-Neumann series");
  group->require_subcommand(1);

  {
    auto o = opts<SeriesInput>();
    auto* cmd = group->add_subcommand("sqrt", "square root over F_2");
    add_series_input(cmd, *o);
    add_window(cmd, *o);
    reg.add(cmd, [o, &reg] {
      const auto g = input_series(*o, reg);
      return root_json(g, mn_sqrt_char2(g, o->window, o->basis_rounds), 2, o->window);
    });
  }
  {
    struct O : SeriesInput {
      long n = 2;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("nth-root", "n-th root");
    add_series_input(cmd, *o);
    add_window(cmd, *o);
    cmd->add_option("--n", o->n)->capture_default_str();
    reg.add(cmd, [o, &reg] {
      const auto g = input_series(*o, reg);
      return root_json(g, mn_nth_root(g, o->n, o->window, o->basis_rounds), o->n, o->window);
    });
  }
  for (const bool witness : {false, true}) {
    struct O : SeriesInput {
      long m = 3, n = 2;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand(witness ? "witness" : "frac-pow",
                                      witness ? "inverse-letter word of positive degree in g^(m/n)" : "g^(m/n)");
    add_series_input(cmd, *o);
    add_window(cmd, *o);
    cmd->add_option("--m", o->m)->capture_default_str();
    cmd->add_option("--n", o->n)->capture_default_str();
    reg.add(cmd, [o, witness, &reg] {
      const auto fp = mn_fractional_power(input_series(*o, reg), o->m, o->n, o->window, o->basis_rounds);
      Json out{{"m", fp.m}, {"n", fp.n}, {"normalized", fp.normalized}};
      if (witness) {
        out.update(witness_json(negative_power_witness(fp.value)));
      } else {
        out["value"] = series_json(fp.value);
      }
      return out;
    });
  }
  {
    auto o = opts<SeriesInput>();
    auto* cmd = group->add_subcommand("build", "the family ((xy)^k x)^2 + xy + yx over F_2");
    cmd->add_option("--k", o->k)->required();
    cmd->add_option("--variant", o->variant, "family summand")
        ->check(CLI::IsMember({"xy+yx", "xy+u"}))
        ->capture_default_str();
    reg.add(cmd, [o, &reg] { return series_json(input_series(*o, reg)); });
  }
}

}  // namespace freealg::cli
