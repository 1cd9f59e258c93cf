#include "brm/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace brm {

json to_json(const cx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const Mat2C& m) {
  return json::array(
      {to_json(m.a11), to_json(m.a12), to_json(m.a21), to_json(m.a22)});
}

json to_json(const LaurentPoly3& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms)
    terms.push_back({{"exp", {e[0], e[1], e[2]}}, {"coef", to_json(c)}});
  return terms;
}

json to_json(const CharacterTuple& c) {
  json t = json::array();
  for (const cx& v : {c.t1, c.t2, c.t3, c.t12, c.t13, c.t23, c.t123})
    t.push_back(to_json(v));
  json j{{"t", t}};
  j["theta"] = c.theta ? to_json(*c.theta) : json(nullptr);
  return j;
}

json to_json(const Representation& rho) {
  json params = json::object();
  for (const auto& [k, v] : rho.params) params[k] = to_json(v);
  return {{"x1", to_json(rho.x1)},
          {"x2", to_json(rho.x2)},
          {"x3", to_json(rho.x3)},
          {"component", rho.label.str()},
          {"params", params}};
}

json to_json(const TapResult& t) {
  json j{{"delta", to_json(t.delta)},
         {"method", t.method},
         {"unit", {t.unit[0], t.unit[1], t.unit[2]}},
         {"scale", to_json(t.scale)}};
  j["column"] = t.column > 0 ? json(t.column) : json(nullptr);
  return j;
}

json to_json(const Presentation& p) {
  json relators = json::array();
  for (const FreeWord& r : p.relators) relators.push_back(r.str());
  return {{"generators", p.generators},
          {"relators", relators},
          {"abelianization", p.abelianization}};
}

json to_json(const std::vector<ClassifiedLabel>& labels) {
  json arr = json::array();
  for (const ClassifiedLabel& l : labels)
    arr.push_back({{"label", l.label.str()}, {"boundary", l.boundary}});
  return {{"labels", arr}};
}

json to_json(const VerificationReport& r, double tol) {
  json checks = json::array();
  auto add = [&](const std::string& name, double residual, bool pass) {
    checks.push_back({{"name", name}, {"residual", residual}, {"pass", pass}});
  };
  for (int i = 0; i < 3; ++i)
    add("relation_" + std::to_string(i + 1), r.relation[i],
        r.relation[i] <= tol);
  add("relation_implication", r.implication, r.implication <= 10.0 * tol);
  for (int i = 0; i < 3; ++i)
    add("unimodular_x" + std::to_string(i + 1), r.unimodular[i],
        r.unimodular[i] <= tol);
  checks.push_back({{"name", "irreducible"}, {"pass", r.irreducible}});
  add("f3_identity", r.f3, r.f3 <= 10.0 * tol);
  return {{"pass", r.pass(tol)}, {"checks", checks}};
}

namespace {
void expect(bool cond, const char* what) {
  if (!cond) throw ParseError(std::string("malformed JSON: ") + what, 0);
}
}  // namespace

cx complex_from_json(const json& j) {
  expect(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
         "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Mat2C mat2_from_json(const json& j) {
  expect(j.is_array() && j.size() == 4, "matrix must list 4 entries");
  return {complex_from_json(j[0]), complex_from_json(j[1]),
          complex_from_json(j[2]), complex_from_json(j[3])};
}

LaurentPoly3 laurent_from_json(const json& j) {
  expect(j.is_array(), "polynomial must be a list of terms");
  LaurentPoly3 p;
  for (const json& t : j) {
    expect(t.contains("exp") && t.contains("coef"), "term needs exp and coef");
    const json& e = t["exp"];
    expect(e.is_array() && e.size() == 3, "exponent must have 3 entries");
    p.add_term({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()},
               complex_from_json(t["coef"]));
  }
  p.prune();
  return p;
}

CharacterTuple character_from_json(const json& j) {
  expect(j.contains("t") && j["t"].is_array() && j["t"].size() == 7,
         "character needs 7 trace coordinates");
  CharacterTuple c;
  cx* slots[7] = {&c.t1, &c.t2, &c.t3, &c.t12, &c.t13, &c.t23, &c.t123};
  for (int k = 0; k < 7; ++k) *slots[k] = complex_from_json(j["t"][k]);
  if (j.contains("theta") && !j["theta"].is_null())
    c.theta = complex_from_json(j["theta"]);
  return c;
}

Representation representation_from_json(const json& j) {
  expect(j.contains("x1") && j.contains("x2") && j.contains("x3"),
         "representation needs x1, x2, x3");
  Representation rho;
  rho.x1 = mat2_from_json(j["x1"]);
  rho.x2 = mat2_from_json(j["x2"]);
  rho.x3 = mat2_from_json(j["x3"]);
  if (j.contains("component")) {
    try {
      rho.label = ComponentLabel::parse(j["component"].get<std::string>());
    } catch (const ParseError&) {
      rho.label = {ComponentKind::Custom, 0};
    }
  }
  if (j.contains("params") && j["params"].is_object())
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      rho.params[it.key()] = complex_from_json(it.value());
  return rho;
}

Presentation presentation_from_json(const json& j) {
  expect(j.contains("generators") && j.contains("relators") &&
             j.contains("abelianization"),
         "presentation needs generators, relators, abelianization");
  Presentation p;
  p.generators = j["generators"].get<int>();
  for (const json& r : j["relators"])
    p.relators.push_back(parse_word(r.get<std::string>()));
  p.abelianization = j["abelianization"].get<std::vector<int>>();
  expect(static_cast<int>(p.abelianization.size()) == p.generators,
         "abelianization table must cover every generator");
  return p;
}

TapResult tap_result_from_json(const json& j) {
  expect(j.contains("delta") && j.contains("method"), "tap result fields");
  TapResult t;
  t.delta = laurent_from_json(j["delta"]);
  t.method = j["method"].get<std::string>();
  if (j.contains("column") && !j["column"].is_null())
    t.column = j["column"].get<int>();
  if (j.contains("unit")) {
    const json& u = j["unit"];
    expect(u.is_array() && u.size() == 3, "unit must have 3 exponents");
    t.unit = {u[0].get<int>(), u[1].get<int>(), u[2].get<int>()};
  }
  if (j.contains("scale")) t.scale = complex_from_json(j["scale"]);
  return t;
}

// --- serialization ------------------------------------------------------------

namespace {

void append_number(std::string& out, double v) {
  if (std::isfinite(v) && v == static_cast<double>(static_cast<long long>(v)) &&
      std::fabs(v) < 1e15) {
    out += std::to_string(static_cast<long long>(v));
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void dump_rec(const json& j, std::string& out, bool pretty, int indent) {
  auto pad = [&](int n) {
    if (pretty) {
      out += '\n';
      out.append(2 * n, ' ');
    }
  };
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(indent + 1);
        out += json(it.key()).dump();
        out += pretty ? ": " : ":";
        dump_rec(it.value(), out, pretty, indent + 1);
      }
      if (!first) pad(indent);
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const json& v : j) {
        if (!first) out += ',';
        first = false;
        pad(indent + 1);
        dump_rec(v, out, pretty, indent + 1);
      }
      if (!first) pad(indent);
      out += ']';
      break;
    }
    case json::value_t::number_float:
      append_number(out, j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string dump_json(const json& j, bool pretty) {
  std::string out;
  dump_rec(j, out, pretty, 0);
  return out;
}

cx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty complex literal", 0);

  auto parse_part = [](const std::string& part, bool imag_unit) -> double {
    if (imag_unit) {
      if (part.empty() || part == "+") return 1.0;
      if (part == "-") return -1.0;
    }
    std::size_t used = 0;
    double v = std::stod(part, &used);
    if (used != part.size()) throw ParseError("bad numeric literal", used);
    return v;
  };

  if (s.back() == 'i' || s.back() == 'I') {
    std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not part of an exponent
    for (std::size_t k = body.size(); k-- > 1;) {
      char c = body[k];
      if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        return {parse_part(body.substr(0, k), false),
                parse_part(body.substr(k), true)};
      }
    }
    return {0.0, parse_part(body, true)};
  }
  return {parse_part(s, false), 0.0};
}

}  // namespace brm
