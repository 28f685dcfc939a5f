#include "cli.hpp"
#include "freealg/degree_estimate.hpp"

namespace freealg::cli {

namespace {

Json optional_rational(const std::optional<mpq_class>& q) { return q ? rational_json(*q) : Json(nullptr); }

Json report_json(const EstimateReport& r) {
  return {{"hypotheses_hold", r.hypotheses_hold},
          {"dep_leading", r.dep_leading},
          {"div_fail", r.div_fail},
          {"alg_indep", r.alg_indep},
          {"D", optional_rational(r.D)},
          {"w", r.w},
          {"lhs", degree_json(r.lhs)},
          {"bound", optional_rational(r.bound)},
          {"inequality_holds", r.inequality_holds}};
}

struct FgP {
  std::string f, g, p;
};

}  // namespace

Json counterexample_json(const CounterexampleFamily& fam) {
  return {{"k", fam.k},
          {"u", poly_json(fam.u)},
          {"v", poly_json(fam.v)},
          {"w", poly_json(fam.w)},
          {"r", poly_json(fam.r)},
          {"s", poly_json(fam.s)},
          {"f", poly_json(fam.f)},
          {"g", poly_json(fam.g)},
          {"deg_f", degree_json(fam.f.degree())},
          {"deg_g", degree_json(fam.g.degree())},
          {"commutator_degree", fam.commutator_degree},
          {"ratio", rational_json(fam.ratio)}};
}

void register_degest(CLI::App& root, Registry& reg) {
  auto* group = root.add_subcommand("degest", "degree estimate for P(f, g)");
  group->require_subcommand(1);

  {
    auto o = opts<FgP>();
    auto* cmd = group->add_subcommand("check", "compare deg P(f,g) with D(f,g) w(P)");
    cmd->add_option("--f", o->f)->required();
    cmd->add_option("--g", o->g)->required();
    cmd->add_option("--p", o->p)->required();
    reg.add(cmd, [o, &reg] { return report_json(check_estimate(parse_xy(o->f, reg), parse_xy(o->g, reg), parse_xy(o->p, reg))); });
  }
  {
    auto k = opts<long>();
    auto* cmd = group->add_subcommand("counterexample", "the family f = u^3 + r, g = u^2 + s");
    cmd->add_option("--k", *k)->required();
    reg.add(cmd, [k, &reg] { return counterexample_json(build_counterexample(*k, reg.field())); });
  }
  {
    auto o = opts<FgP>();
    auto* cmd = group->add_subcommand("conjecture", "deg [f,g] > min(deg f, deg g)");
    cmd->add_option("--f", o->f)->required();
    cmd->add_option("--g", o->g)->required();
    reg.add(cmd, [o, &reg] {
      const auto c = check_conjecture_inequality(parse_xy(o->f, reg), parse_xy(o->g, reg));
      return Json{{"min_deg", c.min_deg}, {"comm_deg", c.comm_deg}, {"violated", c.violated}};
    });
  }
  for (const auto& [name, about, check] :
       {std::tuple{"lemma4", "w(p) >= deg f + deg g for p of outer rank 2", &check_lemma4},
        std::tuple{"lemma5", "deg p(f,g) >= deg [f,g] for p of outer rank 2", &check_lemma5}}) {
    auto o = opts<FgP>();
    auto* cmd = group->add_subcommand(name, about);
    cmd->add_option("--f", o->f)->required();
    cmd->add_option("--g", o->g)->required();
    cmd->add_option("--p", o->p)->required();
    reg.add(cmd, [o, check, &reg] {
      return Json{{"holds", check(parse_xy(o->f, reg), parse_xy(o->g, reg), parse_xy(o->p, reg))}};
    });
  }
  {
    struct O {
      std::string fx, fy;
      long k = 4;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("lemma6", "commutator degrees of the iterates of a non-tame map");
    cmd->add_option("--fx", o->fx)->required();
    cmd->add_option("--fy", o->fy)->required();
    cmd->add_option("--k", o->k, "number of iterates")->capture_default_str();
    reg.add(cmd, [o, &reg] {
      const auto phi = parse_endo(o->fx, o->fy, reg);
      const bool holds = check_lemma6(phi, o->k);
      return Json{{"degrees", iterated_commutator_degrees(phi, o->k)}, {"holds", holds}};
    });
  }
  {
    auto* cmd = group->add_subcommand("harness", "random instances meeting the hypotheses (uses --seed, --cases)");
    reg.add(cmd, [&reg] {
      const auto res = run_estimate_harness(reg.config->seed, reg.field(), reg.config->cases);
      Json out{{"seed", reg.config->seed},
               {"generated", res.generated},
               {"hypotheses_hold", res.hypotheses_hold},
               {"violations", res.violations}};
      if (res.first_violation) {
        const auto& v = *res.first_violation;
        out["first_violation"] = {{"f", poly_json(v.f)}, {"g", poly_json(v.g)}, {"P", poly_json(v.P)}};
      } else {
        out["first_violation"] = nullptr;
      }
      return out;
    });
  }
}

}  // namespace freealg::cli
