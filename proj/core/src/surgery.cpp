#include "obstruct/surgery.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "obstruct/json_int.hpp"

namespace obstruct {

std::optional<std::size_t> SurgeryPresentation::component_index(std::string_view id) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].id == id) return i;
  return std::nullopt;
}

const CurveSpec* SurgeryPresentation::curve(std::string_view id) const {
  for (const auto& c : curves)
    if (c.id == id) return &c;
  return nullptr;
}

Int SurgeryPresentation::linking(std::size_t i, std::size_t j) const {
  const auto& a = components.at(i).id;
  const auto& b = components.at(j).id;
  for (const auto& l : linkings)
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a)) return l.value;
  return 0;
}

std::optional<Int> SurgeryPresentation::pushoff_linking(std::string_view a, std::string_view b) const {
  if (const auto* ca = curve(a)) {
    if (a == b) return ca->pushoff_self_linking;
    if (auto it = ca->cross_pushoff_linkings.find(std::string(b)); it != ca->cross_pushoff_linkings.end())
      return it->second.this_with_other_pushoff;
  }
  if (const auto* cb = curve(b)) {
    if (auto it = cb->cross_pushoff_linkings.find(std::string(a)); it != cb->cross_pushoff_linkings.end())
      return it->second.other_with_this_pushoff;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '(' &&
           line[i] != ')' && line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_integer_token(const std::string& s) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(k), s.end(),
                     [](unsigned char ch) { return std::isdigit(ch); });
}

bool is_identifier_token(const std::string& s) {
  if (s.empty() || is_integer_token(s)) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isalnum(ch) || ch == '_' || ch == '-' || ch == '.' || ch == '\'' || ch == '+';
  });
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_len)
      : tokens_(std::move(tokens)), line_(line_no), end_column_(line_len + 1) {}

  bool done() const { return pos_ == tokens_.size(); }

  const Token& peek() const {
    if (done()) fail(end_column_, "unexpected end of line");
    return tokens_[pos_];
  }

  std::string keyword(std::string_view expected) {
    const Token& t = peek();
    if (t.text != expected) fail(t.column, "expected '" + std::string(expected) + "', found '" + t.text + "'");
    ++pos_;
    return t.text;
  }

  std::pair<std::string, std::size_t> identifier() {
    const Token& t = peek();
    if (!is_identifier_token(t.text)) fail(t.column, "expected identifier, found '" + t.text + "'");
    ++pos_;
    return {t.text, t.column};
  }

  Int integer() {
    const Token& t = peek();
    if (!is_integer_token(t.text)) fail(t.column, "expected integer, found '" + t.text + "'");
    ++pos_;
    std::string digits = t.text[0] == '+' ? t.text.substr(1) : t.text;
    return Int(digits);
  }

  std::size_t column() const { return done() ? end_column_ : tokens_[pos_].column; }

  void finish() const {
    if (!done()) fail(tokens_[pos_].column, "unexpected trailing token '" + tokens_[pos_].text + "'");
  }

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const { throw ParseError(line_, column, msg); }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t end_column_;
};

std::string int_text(const Int& v) { return v.get_str(); }

}  // namespace

SurgeryPresentation parse_presentation(std::string_view text) {
  SurgeryPresentation pres;
  std::set<std::string> component_ids;
  std::set<std::string> curve_ids;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    auto tokens = tokenize_line(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    LineParser p(std::move(tokens), line_no, line.size());
    const Token head = p.peek();

    if (head.text == "component") {
      p.keyword("component");
      auto [id, col] = p.identifier();
      if (!component_ids.insert(id).second) p.fail(col, "duplicate component id '" + id + "'");
      const Token kind = p.peek();
      ComponentRecord rec{id, ComponentKind::Framed, std::nullopt};
      if (kind.text == "dotted") {
        p.keyword("dotted");
        rec.kind = ComponentKind::Dotted;
        if (!p.done()) p.fail(p.column(), "framing given for dotted component '" + id + "'");
      } else if (kind.text == "framed") {
        p.keyword("framed");
        rec.framing = p.integer();
      } else {
        p.fail(kind.column, "expected 'dotted' or 'framed', found '" + kind.text + "'");
      }
      p.finish();
      pres.components.push_back(std::move(rec));
    } else if (head.text == "lk") {
      p.keyword("lk");
      auto [a, ca] = p.identifier();
      auto [b, cb] = p.identifier();
      Int value = p.integer();
      p.finish();
      if (!component_ids.count(a)) p.fail(ca, "unknown component '" + a + "'");
      if (!component_ids.count(b)) p.fail(cb, "unknown component '" + b + "'");
      if (a == b) p.fail(cb, "linking of component '" + a + "' with itself");
      bool seen = false;
      for (const auto& l : pres.linkings) {
        if ((l.a == a && l.b == b) || (l.a == b && l.b == a)) {
          if (l.value != value)
            p.fail(head.column, "asymmetric linking declaration for (" + a + ", " + b + "): " + int_text(l.value) +
                                    " vs " + int_text(value));
          seen = true;
        }
      }
      if (!seen) pres.linkings.push_back({a, b, value});
    } else if (head.text == "curve") {
      p.keyword("curve");
      auto [id, col] = p.identifier();
      if (!curve_ids.insert(id).second) p.fail(col, "duplicate curve id '" + id + "'");
      p.keyword("lk");
      p.keyword("(");
      CurveSpec c;
      c.id = id;
      while (p.peek().text != ")") c.component_linkings.push_back(p.integer());
      p.keyword(")");
      p.keyword("self");
      c.pushoff_self_linking = p.integer();
      p.finish();
      if (c.component_linkings.size() != pres.components.size())
        p.fail(col, "curve '" + id + "' has " + std::to_string(c.component_linkings.size()) +
                        " linking numbers but the presentation has " + std::to_string(pres.components.size()) +
                        " components");
      pres.curves.push_back(std::move(c));
    } else if (head.text == "pushoff") {
      p.keyword("pushoff");
      auto [a, ca] = p.identifier();
      auto [b, cb] = p.identifier();
      Int ab = p.integer();
      Int ba = p.integer();
      p.finish();
      if (!curve_ids.count(a)) p.fail(ca, "unknown curve '" + a + "'");
      if (!curve_ids.count(b)) p.fail(cb, "unknown curve '" + b + "'");
      if (a == b) p.fail(cb, "use the curve's self value for its own pushoff");
      auto existing = pres.pushoff_linking(a, b);
      auto existing_rev = pres.pushoff_linking(b, a);
      if ((existing && *existing != ab) || (existing_rev && *existing_rev != ba))
        p.fail(head.column, "conflicting pushoff declaration for (" + a + ", " + b + ")");
      if (!existing) {
        auto it = std::find_if(pres.curves.begin(), pres.curves.end(), [&](const CurveSpec& c) { return c.id == a; });
        it->cross_pushoff_linkings[b] = PushoffPair{ab, ba};
      }
    } else {
      p.fail(head.column, "unknown record '" + head.text + "'");
    }
    if (end == text.size()) break;
  }

  if (auto v = validate(pres); !v.empty()) throw Error("invalid presentation: " + v.front());
  return pres;
}

std::string serialize(const SurgeryPresentation& pres) {
  std::ostringstream os;
  for (const auto& c : pres.components) {
    os << "component " << c.id;
    if (c.kind == ComponentKind::Dotted)
      os << " dotted\n";
    else
      os << " framed " << int_text(c.framing.value_or(0)) << '\n';
  }
  for (std::size_t i = 0; i < pres.components.size(); ++i)
    for (std::size_t j = i + 1; j < pres.components.size(); ++j) {
      const Int v = pres.linking(i, j);
      if (v != 0) os << "lk " << pres.components[i].id << ' ' << pres.components[j].id << ' ' << int_text(v) << '\n';
    }
  for (const auto& c : pres.curves) {
    os << "curve " << c.id << " lk (";
    for (const auto& v : c.component_linkings) os << ' ' << int_text(v);
    os << " ) self " << int_text(c.pushoff_self_linking) << '\n';
  }
  for (std::size_t i = 0; i < pres.curves.size(); ++i)
    for (std::size_t j = i + 1; j < pres.curves.size(); ++j) {
      const auto& a = pres.curves[i].id;
      const auto& b = pres.curves[j].id;
      auto ab = pres.pushoff_linking(a, b);
      auto ba = pres.pushoff_linking(b, a);
      if (ab || ba) os << "pushoff " << a << ' ' << b << ' ' << int_text(ab.value_or(0)) << ' ' << int_text(ba.value_or(0)) << '\n';
    }
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const SurgeryPresentation& pres) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : pres.components) {
    nlohmann::json jc = {{"id", c.id}, {"kind", c.kind == ComponentKind::Dotted ? "dotted" : "framed"}};
    if (c.framing) jc["framing"] = int_to_json(*c.framing);
    comps.push_back(std::move(jc));
  }
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : pres.linkings) links.push_back({{"a", l.a}, {"b", l.b}, {"lk", int_to_json(l.value)}});
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : pres.curves) {
    nlohmann::json lk = nlohmann::json::array();
    for (const auto& v : c.component_linkings) lk.push_back(int_to_json(v));
    nlohmann::json pushoffs = nlohmann::json::array();
    for (const auto& [other, pair] : c.cross_pushoff_linkings)
      pushoffs.push_back({{"other", other},
                          {"lk_this_other_pushoff", int_to_json(pair.this_with_other_pushoff)},
                          {"lk_other_this_pushoff", int_to_json(pair.other_with_this_pushoff)}});
    curves.push_back({{"id", c.id}, {"lk", lk}, {"self", int_to_json(c.pushoff_self_linking)}, {"pushoffs", pushoffs}});
  }
  return {{"components", comps}, {"linkings", links}, {"curves", curves}};
}

SurgeryPresentation presentation_from_json(const nlohmann::json& j) {
  require_only_keys(j, {"components", "linkings", "curves"}, "presentation");
  SurgeryPresentation pres;
  for (const auto& jc : j.value("components", nlohmann::json::array())) {
    require_only_keys(jc, {"id", "kind", "framing"}, "component");
    ComponentRecord rec;
    rec.id = jc.at("id").get<std::string>();
    const auto kind = jc.at("kind").get<std::string>();
    if (kind == "dotted")
      rec.kind = ComponentKind::Dotted;
    else if (kind == "framed")
      rec.kind = ComponentKind::Framed;
    else
      throw Error("component '" + rec.id + "': unknown kind '" + kind + "'");
    if (jc.contains("framing")) rec.framing = int_from_json(jc.at("framing"));
    pres.components.push_back(std::move(rec));
  }
  for (const auto& jl : j.value("linkings", nlohmann::json::array())) {
    require_only_keys(jl, {"a", "b", "lk"}, "linking");
    pres.linkings.push_back({jl.at("a").get<std::string>(), jl.at("b").get<std::string>(), int_from_json(jl.at("lk"))});
  }
  for (const auto& jc : j.value("curves", nlohmann::json::array())) {
    require_only_keys(jc, {"id", "lk", "self", "pushoffs"}, "curve");
    CurveSpec c;
    c.id = jc.at("id").get<std::string>();
    for (const auto& v : jc.at("lk")) c.component_linkings.push_back(int_from_json(v));
    c.pushoff_self_linking = int_from_json(jc.at("self"));
    for (const auto& jp : jc.value("pushoffs", nlohmann::json::array())) {
      require_only_keys(jp, {"other", "lk_this_other_pushoff", "lk_other_this_pushoff"}, "pushoff");
      c.cross_pushoff_linkings[jp.at("other").get<std::string>()] =
          PushoffPair{int_from_json(jp.at("lk_this_other_pushoff")), int_from_json(jp.at("lk_other_this_pushoff"))};
    }
    pres.curves.push_back(std::move(c));
  }
  if (auto v = validate(pres); !v.empty()) throw Error("invalid presentation: " + v.front());
  return pres;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate(const SurgeryPresentation& pres) {
  std::vector<std::string> out;
  std::set<std::string> ids;
  for (const auto& c : pres.components) {
    if (!ids.insert(c.id).second) out.push_back("duplicate component id '" + c.id + "'");
    if (c.kind == ComponentKind::Dotted && c.framing)
      out.push_back("dotted component '" + c.id + "' carries a framing");
    if (c.kind == ComponentKind::Framed && !c.framing)
      out.push_back("framed component '" + c.id + "' has no framing");
  }
  std::map<std::pair<std::string, std::string>, Int> seen;
  for (const auto& l : pres.linkings) {
    if (!pres.component_index(l.a) || !pres.component_index(l.b)) {
      out.push_back("linking (" + l.a + ", " + l.b + ") names an unknown component");
      continue;
    }
    if (l.a == l.b) {
      out.push_back("linking of component '" + l.a + "' with itself");
      continue;
    }
    auto key = std::minmax(l.a, l.b);
    auto [it, inserted] = seen.emplace(std::pair{key.first, key.second}, l.value);
    if (!inserted && it->second != l.value) out.push_back("asymmetric linking declaration for (" + l.a + ", " + l.b + ")");
  }
  std::set<std::string> curve_ids;
  for (const auto& c : pres.curves)
    if (!curve_ids.insert(c.id).second) out.push_back("duplicate curve id '" + c.id + "'");
  for (const auto& c : pres.curves) {
    if (c.component_linkings.size() != pres.components.size())
      out.push_back("curve '" + c.id + "' has " + std::to_string(c.component_linkings.size()) +
                    " linking numbers, expected " + std::to_string(pres.components.size()));
    for (const auto& [other, pair] : c.cross_pushoff_linkings) {
      if (!curve_ids.count(other)) {
        out.push_back("curve '" + c.id + "' has pushoff data for unknown curve '" + other + "'");
        continue;
      }
      if (other == c.id) {
        out.push_back("curve '" + c.id + "' lists itself in its cross pushoff data");
        continue;
      }
      const auto* o = pres.curve(other);
      if (auto it = o->cross_pushoff_linkings.find(c.id); it != o->cross_pushoff_linkings.end()) {
        if (it->second.this_with_other_pushoff != pair.other_with_this_pushoff ||
            it->second.other_with_this_pushoff != pair.this_with_other_pushoff) {
          if (c.id < other) out.push_back("conflicting pushoff data between '" + c.id + "' and '" + other + "'");
        }
      }
    }
  }
  return out;
}

IntMatrix boundary_linking_matrix(const SurgeryPresentation& pres) {
  if (auto v = validate(pres); !v.empty()) throw Error("invalid presentation: " + v.front());
  const std::size_t n = pres.components.size();
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = pres.components[i];
    b(i, i) = c.kind == ComponentKind::Dotted ? Int(0) : *c.framing;
    for (std::size_t j = i + 1; j < n; ++j) b(i, j) = b(j, i) = pres.linking(i, j);
  }
  return b;
}

TorusCurveBasis torus_basis(const SurgeryPresentation& pres, std::string_view alpha_id, std::string_view beta_id) {
  const auto* a = pres.curve(alpha_id);
  const auto* b = pres.curve(beta_id);
  if (!a) throw Error("unknown curve '" + std::string(alpha_id) + "'");
  if (!b) throw Error("unknown curve '" + std::string(beta_id) + "'");
  auto ab = pres.pushoff_linking(alpha_id, beta_id);
  auto ba = pres.pushoff_linking(beta_id, alpha_id);
  if (!ab || !ba)
    throw Error("no pushoff data between '" + std::string(alpha_id) + "' and '" + std::string(beta_id) + "'");
  return TorusCurveBasis{*a, *b, *ab, *ba};
}

SurgeryPresentation torus_example_presentation(const Int& n) {
  SurgeryPresentation pres;
  pres.components.push_back({"L1", ComponentKind::Dotted, std::nullopt});
  pres.components.push_back({"L2", ComponentKind::Framed, n});
  pres.linkings.push_back({"L1", "L2", 1});
  CurveSpec alpha{"alpha", {1, 0}, 0, {}};
  alpha.cross_pushoff_linkings["beta"] = PushoffPair{0, 1};
  CurveSpec beta{"beta", {0, 1}, 0, {}};
  pres.curves.push_back(std::move(alpha));
  pres.curves.push_back(std::move(beta));
  return pres;
}

}  // namespace obstruct
