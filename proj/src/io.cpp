#include "endolat/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "endolat/error.hpp"
#include "json.hpp"

namespace endolat {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(std::string const& source, int line,
                              std::string const& what) {
  throw Error(ErrorKind::kParse, source + ":" + std::to_string(line) + ": " + what);
}

// Strips the "<kind>: " prefix that Error adds, so a rethrow with a location
// does not repeat it.
std::string bare_message(Error const& e) {
  std::string w = e.what();
  std::string prefix = std::string(to_string(e.kind())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

// Characters reserved by the text formats.
bool valid_identifier(std::string const& s) {
  if (s.empty() || s.find("->") != std::string::npos) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ',' ||
        c == '{' || c == '}' || c == ':') {
      return false;
    }
  }
  return true;
}

struct Block {
  int line = 0;
  std::string name;
  std::vector<std::string> elements;
  bool has_elements = false;
  std::map<std::string, Element> index;
  std::vector<std::pair<Element, Element>> covers;
};

LatticePtr finish(Block const& b, std::string const& source) {
  if (!b.has_elements) parse_error(source, b.line, "lattice '" + b.name + "' has no elements line");
  try {
    return Lattice::build(b.name, b.elements, b.covers);
  } catch (Error const& e) {
    throw Error(e.kind(), source + ":" + std::to_string(b.line) + ": lattice '" +
                              b.name + "': " + bare_message(e));
  }
}

std::vector<LatticePtr> parse_text(std::string_view text, std::string const& source) {
  std::vector<LatticePtr> out;
  std::optional<Block> cur;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    std::string const& kw = tok[0];
    if (kw == "lattice") {
      if (tok.size() != 2) parse_error(source, line, "expected 'lattice <name>'");
      if (!valid_identifier(tok[1])) parse_error(source, line, "bad lattice name '" + tok[1] + "'");
      if (cur) out.push_back(finish(*cur, source));
      cur = Block{};
      cur->line = line;
      cur->name = tok[1];
    } else if (kw == "elements") {
      if (!cur) parse_error(source, line, "'elements' before 'lattice'");
      if (cur->has_elements) parse_error(source, line, "second 'elements' line");
      if (tok.size() < 2) parse_error(source, line, "empty element list");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!valid_identifier(tok[i])) {
          parse_error(source, line, "bad element name '" + tok[i] + "'");
        }
        Element id = static_cast<Element>(cur->elements.size());
        if (!cur->index.emplace(tok[i], id).second) {
          parse_error(source, line, "duplicate element '" + tok[i] + "'");
        }
        cur->elements.push_back(tok[i]);
      }
      cur->has_elements = true;
    } else if (kw == "cover") {
      if (!cur || !cur->has_elements) parse_error(source, line, "'cover' before 'elements'");
      if (tok.size() != 3) parse_error(source, line, "expected 'cover <x> <y>'");
      Element ids[2];
      for (int k = 0; k < 2; ++k) {
        auto it = cur->index.find(tok[k + 1]);
        if (it == cur->index.end()) {
          throw Error(ErrorKind::kUnknownElement,
                      source + ":" + std::to_string(line) + ": unknown element '" +
                          tok[k + 1] + "'");
        }
        ids[k] = it->second;
      }
      cur->covers.push_back({ids[0], ids[1]});
    } else {
      parse_error(source, line, "unknown directive '" + kw + "'");
    }
  }
  if (cur) out.push_back(finish(*cur, source));
  return out;
}

LatticePtr from_json(json const& j, std::string const& source, int position) {
  std::string where = source + ": lattice #" + std::to_string(position);
  auto fail = [&](std::string const& why) {
    throw Error(ErrorKind::kParse, where + ": " + why);
  };
  if (!j.is_object()) fail("expected an object");
  std::string name = j.value("name", "L");
  if (!valid_identifier(name)) fail("bad lattice name '" + name + "'");
  if (!j.contains("elements") || !j["elements"].is_array()) fail("missing 'elements' array");
  std::vector<std::string> elements;
  std::map<std::string, Element> index;
  for (auto const& e : j["elements"]) {
    if (!e.is_string()) fail("element names must be strings");
    std::string s = e.get<std::string>();
    if (!valid_identifier(s)) fail("bad element name '" + s + "'");
    if (!index.emplace(s, static_cast<Element>(elements.size())).second) {
      fail("duplicate element '" + s + "'");
    }
    elements.push_back(s);
  }
  std::vector<std::pair<Element, Element>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) fail("'covers' must be an array");
    for (auto const& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        fail("each cover must be a pair of element names");
      }
      Element ids[2];
      for (int k = 0; k < 2; ++k) {
        auto it = index.find(c[k].get<std::string>());
        if (it == index.end()) {
          throw Error(ErrorKind::kUnknownElement,
                      where + ": unknown element '" + c[k].get<std::string>() + "'");
        }
        ids[k] = it->second;
      }
      covers.push_back({ids[0], ids[1]});
    }
  }
  try {
    return Lattice::build(name, elements, covers);
  } catch (Error const& e) {
    throw Error(e.kind(), where + " '" + name + "': " + bare_message(e));
  }
}

std::vector<LatticePtr> parse_json(std::string_view text, std::string const& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw Error(ErrorKind::kParse, source + ": invalid JSON at byte " +
                                       std::to_string(e.byte));
  }
  std::vector<LatticePtr> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(from_json(j[i], source, static_cast<int>(i)));
    }
  } else {
    out.push_back(from_json(j, source, 0));
  }
  return out;
}

}  // namespace

std::vector<LatticePtr> parse_lattices(std::string_view text, std::string const& source) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) {
    return parse_json(text, source);
  }
  return parse_text(text, source);
}

LatticePtr parse_lattice(std::string_view text, std::string const& source) {
  auto all = parse_lattices(text, source);
  if (all.size() != 1) {
    throw Error(ErrorKind::kParse, source + ": expected one lattice, found " +
                                       std::to_string(all.size()));
  }
  return all.front();
}

std::string read_text_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<LatticePtr> read_lattice_file(std::string const& path) {
  return parse_lattices(read_text_file(path), path);
}

std::string format_lattice(Lattice const& L) {
  std::string s = "lattice " + L.name() + "\nelements";
  for (auto const& n : L.element_names()) s += " " + n;
  s += "\n";
  for (auto [x, y] : L.covers()) {
    s += "cover " + L.element_name(x) + " " + L.element_name(y) + "\n";
  }
  return s;
}

std::string format_lattice_json(Lattice const& L) {
  json j;
  j["name"] = L.name();
  j["elements"] = L.element_names();
  j["covers"] = json::array();
  for (auto [x, y] : L.covers()) {
    j["covers"].push_back({L.element_name(x), L.element_name(y)});
  }
  return j.dump();
}

std::string format_corpus(std::vector<LatticePtr> const& corpus, int max_n,
                          bool modular_only) {
  std::string s = "# corpus n=" + std::to_string(max_n) +
                  " modular=" + (modular_only ? "true" : "false") +
                  " count=" + std::to_string(corpus.size()) + "\n";
  for (auto const& L : corpus) s += "\n" + format_lattice(*L);
  return s;
}

// -- morphism literals ---------------------------------------------------------

namespace {

struct Token {
  enum Kind { kIdent, kColon, kOpen, kClose, kComma, kArrow, kEnd } kind;
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ':' || c == '{' || c == '}' || c == ',') {
      Token::Kind k = c == ':' ? Token::kColon
                      : c == '{' ? Token::kOpen
                      : c == '}' ? Token::kClose
                                 : Token::kComma;
      out.push_back({k, std::string(1, c), line});
      ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::kArrow, "->", line});
      i += 2;
    } else {
      std::size_t start = i;
      while (i < text.size()) {
        char d = text[i];
        if (std::isspace(static_cast<unsigned char>(d)) || d == ':' || d == '{' ||
            d == '}' || d == ',' || d == '#') {
          break;
        }
        if (d == '-' && i + 1 < text.size() && text[i + 1] == '>') break;
        ++i;
      }
      out.push_back({Token::kIdent, std::string(text.substr(start, i - start)), line});
    }
  }
  out.push_back({Token::kEnd, "end of input", line});
  return out;
}

}  // namespace

std::vector<NamedMorphism> parse_morphisms(std::string_view text, LatticePtr const& L,
                                           std::string const& source) {
  std::vector<Token> toks = tokenize(text);
  std::size_t p = 0;
  auto expect = [&](Token::Kind k, std::string const& what) -> Token const& {
    Token const& t = toks[p];
    if (t.kind != k) parse_error(source, t.line, "expected " + what + ", found '" + t.text + "'");
    ++p;
    return t;
  };
  std::vector<NamedMorphism> out;
  while (toks[p].kind != Token::kEnd) {
    Token const& kw = expect(Token::kIdent, "'morphism'");
    if (kw.text != "morphism") parse_error(source, kw.line, "expected 'morphism', found '" + kw.text + "'");
    std::string name = expect(Token::kIdent, "morphism name").text;
    expect(Token::kColon, "':'");
    Token const& lat = expect(Token::kIdent, "lattice name");
    if (lat.text != L->name()) {
      throw Error(ErrorKind::kDomainMismatch,
                  source + ":" + std::to_string(lat.line) + ": morphism '" + name +
                      "' is on lattice '" + lat.text + "', expected '" + L->name() + "'");
    }
    expect(Token::kOpen, "'{'");
    ElementMap values(L->size(), kNone);
    while (toks[p].kind != Token::kClose) {
      Element ends[2];
      for (int k = 0; k < 2; ++k) {
        if (k == 1) expect(Token::kArrow, "'->'");
        Token const& t = expect(Token::kIdent, "element name");
        auto e = L->find(t.text);
        if (!e) {
          throw Error(ErrorKind::kUnknownElement, source + ":" + std::to_string(t.line) +
                                                      ": unknown element '" + t.text + "'");
        }
        ends[k] = *e;
      }
      if (values[ends[0]] != kNone) {
        parse_error(source, toks[p - 1].line,
                    "element '" + L->element_name(ends[0]) + "' mapped twice");
      }
      values[ends[0]] = ends[1];
      if (toks[p].kind == Token::kComma) {
        ++p;
      } else if (toks[p].kind != Token::kClose) {
        parse_error(source, toks[p].line, "expected ',' or '}', found '" + toks[p].text + "'");
      }
    }
    int close_line = toks[p].line;
    ++p;
    for (Element x = 0; x < L->size(); ++x) {
      if (values[x] == kNone) {
        parse_error(source, close_line, "morphism '" + name + "' does not map '" +
                                            L->element_name(x) + "'");
      }
    }
    try {
      out.push_back({name, endomorphism(L, values)});
    } catch (Error const& e) {
      throw Error(e.kind(), source + ":" + std::to_string(kw.line) + ": morphism '" +
                                name + "': " + bare_message(e));
    }
  }
  return out;
}

std::vector<NamedMorphism> read_morphism_file(std::string const& path,
                                              LatticePtr const& L) {
  return parse_morphisms(read_text_file(path), L, path);
}

std::string format_morphism(std::string const& name, LinearMorphism const& f) {
  Lattice const& L = f.domain().lattice();
  std::string s = "morphism " + name + " : " + L.name() + " { ";
  bool first = true;
  for (Element x : f.domain().elements()) {
    if (!first) s += ", ";
    first = false;
    s += L.element_name(x) + "->" + L.element_name(f(x));
  }
  return s + " }";
}

// -- monoid dumps --------------------------------------------------------------

std::string format_cayley(std::string const& name, CayleyTable const& t,
                          std::vector<std::string> const& legend) {
  std::string s = "monoid " + name + " order " + std::to_string(t.order) + "\n";
  for (int i = 0; i < t.order; ++i) {
    s += "  " + std::to_string(i) + ": " + (i < static_cast<int>(legend.size()) ? legend[i] : "") + "\n";
  }
  int width = static_cast<int>(std::to_string(std::max(t.order - 1, 0)).size());
  for (int i = 0; i < t.order; ++i) {
    std::string row;
    for (int j = 0; j < t.order; ++j) {
      std::string cell = std::to_string(t.at(i, j));
      if (j) row += ' ';
      row += std::string(width - cell.size(), ' ') + cell;
    }
    s += row + "\n";
  }
  return s;
}

std::string format_cayley(EndoMonoid const& m) {
  std::vector<std::string> legend;
  Lattice const& L = *m.lattice();
  for (auto const& f : m.elements()) legend.push_back(format_values(L, f.values()));
  return format_cayley(m.name(), m.table(), legend);
}

std::string format_congruence(Congruence const& c) {
  std::string s;
  for (auto const& cls : c.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cls[i]);
    }
    s += "\n";
  }
  return s;
}

}  // namespace endolat
