#include "cli.hpp"
#include "freealg/coordinate.hpp"
#include "freealg/retraction.hpp"
#include "freealg/text.hpp"

namespace freealg::cli {

namespace {

struct Images {
  std::string fx, fy;
};

void add_images(CLI::App* cmd, Images& o) {
  cmd->add_option("--fx", o.fx, "image of x")->required();
  cmd->add_option("--fy", o.fy, "image of y")->required();
}

[[noreturn]] void throw_not_automorphism(const NotAutomorphism& cert) {
  throw Error(ErrorCode::NotAutomorphism, "not a tame automorphism: " + cert.condition,
              {{"condition", cert.condition},
               {"condition_verified", condition_holds(cert) ? "true" : "false"},
               {"state_x", print_poly(cert.state.image_x())},
               {"state_y", print_poly(cert.state.image_y())},
               {"partial_factors", decomposition_json(cert.partial).dump()}});
}

}  // namespace

void register_endo(CLI::App& root, Registry& reg) {
  auto* group = root.add_subcommand("endo", "endomorphisms given by the images of x and y");
  group->require_subcommand(1);

  {
    struct O : Images {
      std::string p;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("apply", "p(fx, fy)");
    add_images(cmd, *o);
    cmd->add_option("--p", o->p)->required();
    reg.add(cmd, [o, &reg] { return Json{{"result", poly_json(apply(parse_endo(o->fx, o->fy, reg), parse_xy(o->p, reg)))}}; });
  }
  {
    struct O : Images {
      std::string gx, gy;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("compose", "f o g, the map p -> f(g(p))");
    add_images(cmd, *o);
    cmd->add_option("--gx", o->gx, "inner image of x")->required();
    cmd->add_option("--gy", o->gy, "inner image of y")->required();
    reg.add(cmd, [o, &reg] {
      return Json{{"result", endo_json(compose(parse_endo(o->fx, o->fy, reg), parse_endo(o->gx, o->gy, reg)))}};
    });
  }
  {
    auto o = opts<Images>();
    auto* cmd = group->add_subcommand("decompose", "elementary factors, first factor outermost");
    add_images(cmd, *o);
    reg.add(cmd, [o, &reg] {
      const auto res = decompose_tame(parse_endo(o->fx, o->fy, reg));
      if (const auto* cert = std::get_if<NotAutomorphism>(&res)) throw_not_automorphism(*cert);
      return Json{{"factors", decomposition_json(std::get<Decomposition>(res))}};
    });
  }
  {
    auto o = opts<Images>();
    auto* cmd = group->add_subcommand("invert", "inverse automorphism");
    add_images(cmd, *o);
    reg.add(cmd, [o, &reg] {
      const auto e = parse_endo(o->fx, o->fy, reg);
      const auto res = decompose_tame(e);
      if (const auto* cert = std::get_if<NotAutomorphism>(&res)) throw_not_automorphism(*cert);
      return Json{{"result", endo_json(invert(e))}};
    });
  }
  {
    auto o = opts<Images>();
    auto* cmd = group->add_subcommand("is-retraction", "whether e o e = e");
    add_images(cmd, *o);
    reg.add(cmd, [o, &reg] { return Json{{"is_retraction", is_retraction(parse_endo(o->fx, o->fy, reg))}}; });
  }
  {
    struct O : Images {
      std::string p;
      long max_iter = 16;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("iterate-retraction", "least m with e^m idempotent, for e fixing p");
    add_images(cmd, *o);
    cmd->add_option("--p", o->p, "a polynomial fixed by e")->required();
    cmd->add_option("--max-iter", o->max_iter)->capture_default_str();
    reg.add(cmd, [o, &reg] {
      const auto res = iterate_to_retraction(parse_endo(o->fx, o->fy, reg), parse_xy(o->p, reg), o->max_iter);
      return Json{{"m", res.m}, {"retraction", endo_json(res.retraction)}};
    });
  }
  {
    auto o = opts<Images>();
    auto* cmd = group->add_subcommand("retract-gen", "generator r of the image K[r] of a retraction");
    add_images(cmd, *o);
    reg.add(cmd, [o, &reg] { return Json{{"generator", poly_json(retract_generator(parse_endo(o->fx, o->fy, reg)))}}; });
  }
  {
    struct O : Images {
      std::string r;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("orbit-witness", "automorphism moving r off the linear part of K[r]");
    add_images(cmd, *o);
    cmd->add_option("--r", o->r, "generator of the retract (computed when omitted)");
    reg.add(cmd, [o, &reg] {
      const auto e = parse_endo(o->fx, o->fy, reg);
      const auto r = o->r.empty() ? retract_generator(e) : parse_xy(o->r, reg);
      const auto w = orbit_witness(e, r);
      return Json{{"r", poly_json(r)},
                  {"m", w.m},
                  {"value", poly_json(w.value)},
                  {"degree_in_r", w.degree_in_r},
                  {"swapped", w.swapped}};
    });
  }
  {
    struct O {
      std::string p;
      long bound = -1;
    };
    auto o = opts<O>();
    auto* cmd = group->add_subcommand("coordinate", "search for q with (p, q) an automorphism");
    cmd->add_option("--p", o->p)->required();
    cmd->add_option("--bound", o->bound, "largest move degree (default deg p)");
    reg.add(cmd, [o, &reg] {
      const auto p = parse_xy(o->p, reg);
      const long bound = o->bound >= 0 ? o->bound : (p.degree().is_finite() ? p.degree().value() : 0);
      const auto res = coordinate_certify(p, bound);
      if (const auto* none = std::get_if<NoCertificateWithinBounds>(&res))
        throw Error(ErrorCode::NoCertificateWithinBounds, "no certificate found: " + none->reason,
                    {{"reason", none->reason}, {"state", print_poly(none->state)}});
      const auto& cert = std::get<CoordinateCertificate>(res);
      return Json{{"q", poly_json(cert.q)}, {"factors", decomposition_json(cert.factors)}};
    });
  }
}

}  // namespace freealg::cli
