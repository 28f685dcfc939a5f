#include <ostream>

#include "cli.hpp"
#include "freealg/text.hpp"

namespace freealg::cli {

Polynomial parse_in(const std::string& text, const Registry& reg) {
  return parse_poly(text, reg.field(), reg.config->alphabet);
}

Polynomial parse_xy(const std::string& text, const Registry& reg) { return parse_poly(text, reg.field(), 2); }

Endomorphism parse_endo(const std::string& fx, const std::string& fy, const Registry& reg) {
  return Endomorphism(parse_xy(fx, reg), parse_xy(fy, reg));
}

Word parse_word(const std::string& text) {
  const auto p = parse_poly(text, Field::rational(), 2);
  if (p.size() != 1 || !p.leading_term().second.is_one())
    throw Error(ErrorCode::BadArgument, "expected a single word such as x*y*x", {{"input", text}});
  return p.leading_term().first;
}

Json poly_json(const Polynomial& p) { return print_poly(p); }

Json degree_json(Degree d) { return d.is_finite() ? Json(d.value()) : Json("-inf"); }

Json rational_json(const mpq_class& q) { return q.get_str(); }

Json endo_json(const Endomorphism& e) { return {{"x", poly_json(e.image_x())}, {"y", poly_json(e.image_y())}}; }

Json factor_json(const ElementaryFactor& f) {
  Json out{{"kind", kind_name(f)}};
  if (const auto* lin = std::get_if<LinearAffine>(&f)) {
    for (const auto& [key, value] : {std::pair{"a", &lin->a}, {"b", &lin->b}, {"c", &lin->c}, {"d", &lin->d},
                                     {"tx", &lin->tx}, {"ty", &lin->ty}})
      out[key] = value->to_string();
  } else if (const auto* ax = std::get_if<AddToX>(&f)) {
    out["h"] = poly_json(ax->h);
  } else {
    out["h"] = poly_json(std::get<AddToY>(f).h);
  }
  return out;
}

Json decomposition_json(const Decomposition& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors) factors.push_back(factor_json(f));
  return factors;
}

Json series_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
    terms.push_back({to_string(it->first), it->second.to_string(), it->first.degree()});
  Json out{{"text", print_series(s)}, {"terms", std::move(terms)}};
  out["floor"] = s.floor() ? Json(*s.floor()) : Json(nullptr);
  return out;
}

Json error_json(const Error& e) {
  Json context = Json::object();
  for (const auto& [k, v] : e.context()) context[k] = v;
  return {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"context", std::move(context)}};
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string s;
    for (const auto& e : j) s += (s.empty() ? "" : ", ") + scalar_text(e);
    return "[" + s + "]";
  }
  return j.dump();
}

bool is_table(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j)
    if (!row.is_object()) return false;
  return true;
}

void render(const Json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render(value, out, indent + "  ");
    } else if (is_table(value)) {
      out << indent << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& row : value)
        for (const auto& [c, v] : row.items())
          if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
      std::vector<std::vector<std::string>> cells{cols};
      for (const auto& row : value) {
        std::vector<std::string> line;
        for (const auto& c : cols) line.push_back(row.contains(c) ? scalar_text(row[c]) : "");
        cells.push_back(std::move(line));
      }
      std::vector<std::size_t> width(cols.size(), 0);
      for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
      for (const auto& line : cells) {
        out << indent << "  ";
        for (std::size_t i = 0; i < line.size(); ++i)
          out << line[i] << (i + 1 < line.size() ? std::string(width[i] - line[i].size() + 2, ' ') : "");
        out << '\n';
      }
    } else {
      out << indent << key << ": " << scalar_text(value) << '\n';
    }
  }
}

}  // namespace

void render_text(const Json& j, std::ostream& out) {
  if (j.is_object()) {
    render(j, out, "");
  } else {
    out << scalar_text(j) << '\n';
  }
}

}  // namespace freealg::cli
