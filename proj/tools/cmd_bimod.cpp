#include "cli.hpp"
#include "freealg/bimodule.hpp"

namespace freealg::cli {

namespace {

const char* kind_text(MonomialKind k) {
  switch (k) {
    case MonomialKind::Type1: return "Type1";
    case MonomialKind::Type2: return "Type2";
    case MonomialKind::Type3: return "Type3";
  }
  return "?";
}

Json word_json(const Word& w) { return to_string(w, default_letter_names(2)); }

}  // namespace

void register_bimod(CLI::App& root, Registry& reg) {
  auto* group = root.add_subcommand("bimod", "monomials as a bimodule over K[u]");
  group->require_subcommand(1);

  {
    struct O {
      std::string u, t;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("classify", "type of the submodule generated by t");
    cmd->add_option("--u", o->u, "primitive word")->required();
    cmd->add_option("--t", o->t, "word, 1 for the empty word")->required();
    reg.add(cmd, [o] {
      const auto u = parse_word(o->u);
      const auto c = classify_monomial(u, parse_word(o->t));
      Json out{{"kind", kind_text(c.kind)}};
      if (c.kind == MonomialKind::Type3) {
        out["v1"] = word_json(c.v1);
        out["v2"] = word_json(c.v2);
        out["k"] = c.k;
        out["t1"] = word_json(c.t1);
        out["t2"] = word_json(c.t2);
        out["overlap"] = word_json(c.t1 * u);
        out["overlap_verified"] = c.t1 * u == u * c.t2;
      }
      return out;
    });
  }
  {
    struct O {
      std::string u;
      long m = 1, n = 2, bound = 3;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("solve", "kernel of (s, r) -> [u^m, s] + [u^n, r] up to a degree bound");
    cmd->add_option("--u", o->u, "word")->required();
    cmd->add_option("--m", o->m)->capture_default_str();
    cmd->add_option("--n", o->n)->capture_default_str();
    cmd->add_option("--bound", o->bound)->capture_default_str();
    reg.add(cmd, [o, &reg] {
      const auto u = Polynomial::monomial(parse_word(o->u), FieldElem::one(reg.field()));
      const auto sol = solve_commutator_equation(u, o->m, o->n, o->bound);
      Json basis = Json::array();
      for (const auto& [s, r] : sol.basis) basis.push_back({{"s", poly_json(s)}, {"r", poly_json(r)}});
      return Json{{"bound", sol.bound},
                  {"unknowns", sol.unknowns},
                  {"equations", sol.equations},
                  {"dimension", sol.basis.size()},
                  {"basis", basis}};
    });
  }
}

}  // namespace freealg::cli
