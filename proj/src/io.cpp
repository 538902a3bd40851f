#include "sforge/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sforge {

using nlohmann::json;

namespace {

json field_to_json(const Field& F) {
  if (F.is_prime_field()) return json{{"prime", F.characteristic()}};
  return json("rational");
}

Field field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "rational") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("prime") &&
      j["prime"].is_number_integer())
    return Field::prime(j["prime"].get<long long>());
  fail("ParseError", "field must be \"rational\" or {\"prime\": p}");
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) fail("ParseError", "unknown key \"" + item.key() + "\" in " + where);
  }
}

int wire_vertex(const json& j, int n, const std::string& where) {
  if (!j.is_number_integer())
    fail("ParseError", where + " must be an integer vertex");
  long long v = j.get<long long>();
  if (v < 1 || v > n)
    fail("ParseError", where + " is outside 1.." + std::to_string(n));
  return (int)(v - 1);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace

std::string presentation_to_json(const AlgebraPresentation& pres) {
  json j;
  j["field"] = field_to_json(pres.field);
  j["vertices"] = pres.quiver.n;
  json arrows = json::array();
  for (const Arrow& a : pres.quiver.arrows)
    arrows.push_back({{"id", a.id}, {"source", a.source + 1}, {"target", a.target + 1}});
  j["arrows"] = std::move(arrows);
  json rels = json::array();
  for (const Relation& rel : pres.relations) {
    json jr = json::array();
    for (const RelTerm& t : rel) {
      json path = json::array();
      for (int a : t.path.arrows) path.push_back(pres.quiver.arrows[a].id);
      jr.push_back({{"coeff", pres.field.to_string(t.coeff)}, {"path", std::move(path)}});
    }
    rels.push_back(std::move(jr));
  }
  j["relations"] = std::move(rels);
  if (!pres.meta.empty()) j["meta"] = pres.meta;
  return j.dump(2) + "\n";
}

AlgebraPresentation presentation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("ParseError", e.what());  // the message carries line and column
  }
  if (!j.is_object()) fail("ParseError", "top level must be a JSON object");
  reject_unknown_keys(j, {"field", "vertices", "arrows", "relations", "meta"},
                      "the top-level object");
  for (const char* key : {"field", "vertices", "arrows", "relations"})
    if (!j.contains(key))
      fail("ParseError", std::string("missing top-level key \"") + key + "\"");

  AlgebraPresentation P;
  P.field = field_from_json(j["field"]);
  if (!j["vertices"].is_number_integer())
    fail("ParseError", "vertices must be an integer");
  long long n = j["vertices"].get<long long>();
  if (n < 1 || n > 10000)
    fail("ParseError", "vertices must be between 1 and 10000");
  P.quiver.n = (int)n;

  if (!j["arrows"].is_array()) fail("ParseError", "arrows must be an array");
  for (const json& ja : j["arrows"]) {
    if (!ja.is_object()) fail("ParseError", "each arrow must be an object");
    reject_unknown_keys(ja, {"id", "source", "target"}, "an arrow");
    for (const char* key : {"id", "source", "target"})
      if (!ja.contains(key))
        fail("ParseError", std::string("an arrow is missing \"") + key + "\"");
    if (!ja["id"].is_string())
      fail("ParseError", "arrow ids must be strings");
    std::string id = ja["id"].get<std::string>();
    int src = wire_vertex(ja["source"], P.quiver.n, "source of arrow \"" + id + "\"");
    int tgt = wire_vertex(ja["target"], P.quiver.n, "target of arrow \"" + id + "\"");
    P.quiver.arrows.push_back({id, src, tgt});
  }
  P.quiver.finalize();  // rejects empty and duplicate ids

  if (!j["relations"].is_array()) fail("ParseError", "relations must be an array");
  int index = 0;
  for (const json& jr : j["relations"]) {
    index++;
    std::string where = "relation " + std::to_string(index);
    if (!jr.is_array() || jr.empty())
      fail("ParseError", where + " must be a nonempty array of terms");
    Relation rel;
    for (const json& jt : jr) {
      if (!jt.is_object()) fail("ParseError", where + " has a non-object term");
      reject_unknown_keys(jt, {"coeff", "path"}, where);
      if (!jt.contains("coeff") || !jt.contains("path"))
        fail("ParseError", where + " has a term without coeff or path");
      if (!jt["coeff"].is_string())
        fail("ParseError", where + " has a non-string coefficient");
      Scalar c = P.field.parse(jt["coeff"].get<std::string>());
      if (!jt["path"].is_array() || jt["path"].empty())
        fail("ParseError", where + " has an empty path");
      Path p;
      bool first = true;
      for (const json& js : jt["path"]) {
        if (!js.is_string()) fail("ParseError", where + " has a non-string path entry");
        std::string id = js.get<std::string>();
        int a = P.quiver.arrow_by_id(id);
        if (a < 0) fail("ParseError", where + " uses unknown arrow \"" + id + "\"");
        if (first) {
          p.source = P.quiver.arrows[a].source;
          first = false;
        }
        p.arrows.push_back(a);
      }
      rel.push_back({c, p});
    }
    P.relations.push_back(std::move(rel));
  }

  if (j.contains("meta")) {
    if (!j["meta"].is_object()) fail("ParseError", "meta must be an object");
    for (const auto& item : j["meta"].items()) {
      if (!item.value().is_string()) fail("ParseError", "meta values must be strings");
      P.meta[item.key()] = item.value().get<std::string>();
    }
  }
  return P;
}

AlgebraPresentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("ParseError", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return presentation_from_json(buf.str());
}

void save_presentation(const std::string& path, const AlgebraPresentation& pres) {
  std::string text = presentation_to_json(pres);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("Internal", "cannot write " + path);
  out << text;
  out.flush();
  if (!out) fail("Internal", "short write to " + path);
}

std::string quiver_to_dot(const AlgebraPresentation& pres) {
  std::ostringstream out;
  out << "digraph quiver {\n  rankdir=LR;\n";
  for (int v = 0; v < pres.quiver.n; v++)
    out << "  v" << (v + 1) << " [label=\"" << (v + 1) << "\", shape=circle];\n";
  for (const Arrow& a : pres.quiver.arrows)
    out << "  v" << (a.source + 1) << " -> v" << (a.target + 1) << " [label=\""
        << dot_escape(a.id) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string cache_key(const AlgebraPresentation& pres, const std::string& command,
                      const std::string& flags) {
  // unit separators keep the three fields from bleeding into each other
  return sha256_hex(presentation_to_json(pres) + '\x1f' + command + '\x1f' + flags);
}

}  // namespace sforge
