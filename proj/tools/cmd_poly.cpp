#include <sstream>

#include "cli.hpp"
#include "freealg/text.hpp"

namespace freealg::cli {

namespace {

struct Binary {
  std::string a, b;
};

void add_binary(CLI::App* group, Registry& reg, const char* name, const char* about,
                Polynomial (*op)(const Polynomial&, const Polynomial&)) {
  auto o = opts<Binary>();
  auto* cmd = group->add_subcommand(name, about);
  cmd->add_option("--a", o->a, "left operand")->required();
  cmd->add_option("--b", o->b, "right operand")->required();
  reg.add(cmd, [o, op, &reg] { return Json{{"result", poly_json(op(parse_in(o->a, reg), parse_in(o->b, reg)))}}; });
}

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("weights must be a comma-separated list of integers");
    }
  }
  return out;
}

}  // namespace

void register_poly(CLI::App& root, Registry& reg) {
  auto* group = root.add_subcommand("poly", "polynomial arithmetic");
  group->require_subcommand(1);

  add_binary(group, reg, "add", "a + b", [](const Polynomial& a, const Polynomial& b) { return a + b; });
  add_binary(group, reg, "mul", "a * b", [](const Polynomial& a, const Polynomial& b) { return a * b; });
  add_binary(group, reg, "comm", "a*b - b*a", [](const Polynomial& a, const Polynomial& b) { return commutator(a, b); });

  {
    auto p = opts<std::string>();
    auto* cmd = group->add_subcommand("deg", "total degree");
    cmd->add_option("--p", *p, "polynomial")->required();
    reg.add(cmd, [p, &reg] { return Json{{"degree", degree_json(parse_in(*p, reg).degree())}}; });
  }
  {
    struct O {
      std::string p, weights;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("wdeg", "weighted degree");
    cmd->add_option("--p", o->p, "polynomial")->required();
    cmd->add_option("--weights", o->weights, "one weight per letter, e.g. 2,3")->required();
    reg.add(cmd, [o, &reg] {
      const auto w = parse_weights(o->weights);
      return Json{{"weighted_degree", degree_json(weighted_degree(parse_in(o->p, reg), w))}};
    });
  }
  {
    struct O {
      std::string p;
      std::vector<std::string> images;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("subst", "replace each letter by an image");
    cmd->add_option("--p", o->p, "polynomial")->required();
    cmd->add_option("--image", o->images, "image of each letter in order (repeat the flag)")->required();
    reg.add(cmd, [o, &reg] {
      std::vector<Polynomial> images;
      for (const auto& t : o->images) images.push_back(parse_in(t, reg));
      return Json{{"result", poly_json(substitute(parse_in(o->p, reg), images))}};
    });
  }
  {
    auto p = opts<std::string>();
    auto* cmd = group->add_subcommand("parse", "canonical form and term list");
    cmd->add_option("--p", *p, "polynomial")->required();
    reg.add(cmd, [p, &reg] {
      const auto poly = parse_in(*p, reg);
      const auto names = default_letter_names(poly.alphabet_size());
      Json terms = Json::array();
      for (const auto& [w, c] : poly.terms()) terms.push_back({to_string(w, names), c.to_string()});
      return Json{{"canonical", poly_json(poly)}, {"degree", degree_json(poly.degree())}, {"terms", terms}};
    });
  }
}

}  // namespace freealg::cli
