#include "xsg/formats.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "xsg/errors.hpp"

namespace xsg {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

long parse_number(const Line& line, std::size_t tok) {
  const std::string& s = line.tokens[tok];
  if (s.empty()) throw parse_error(line.number, "expected a number");
  for (char c : s)
    if (c < '0' || c > '9')
      throw parse_error(line.number, "expected a number, got '" + s + "'");
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    throw parse_error(line.number, "number out of range: '" + s + "'");
  }
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                       : end - pos);
    ++number;
    Line line;
    line.number = number;
    std::istringstream in{std::string(raw)};
    std::string tok;
    while (in >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty() && line.tokens[0][0] != '#')
      lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

} // namespace

FinGroup parse_group(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw parse_error(1, "empty group file");
  std::size_t at = 0;
  if (lines[at].tokens[0] != "group" || lines[at].tokens.size() != 2)
    throw parse_error(lines[at].number, "expected 'group <name>'");
  FinGroup G;
  G.name = lines[at].tokens[1];
  ++at;
  if (at >= lines.size() || lines[at].tokens[0] != "elements" ||
      lines[at].tokens.size() < 2)
    throw parse_error(at < lines.size() ? lines[at].number : lines.back().number,
                      "expected 'elements <e0> ...'");
  G.elements.assign(lines[at].tokens.begin() + 1, lines[at].tokens.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    if (!index.emplace(G.elements[i], static_cast<int>(i)).second)
      throw parse_error(lines[at].number,
                        "duplicate element name '" + G.elements[i] + "'");
  }
  ++at;
  const std::size_t n = G.elements.size();
  for (std::size_t row = 0; row < n; ++row, ++at) {
    if (at >= lines.size())
      throw parse_error(lines.back().number,
                        "expected " + std::to_string(n) + " 'mul' rows");
    const Line& line = lines[at];
    if (line.tokens[0] != "mul")
      throw parse_error(line.number, "expected 'mul <row>'");
    if (line.tokens.size() != n + 1)
      throw parse_error(line.number, "mul row has " +
                                         std::to_string(line.tokens.size() - 1) +
                                         " entries, expected " +
                                         std::to_string(n));
    std::vector<int> out;
    for (std::size_t k = 1; k < line.tokens.size(); ++k) {
      auto it = index.find(line.tokens[k]);
      if (it == index.end())
        throw parse_error(line.number,
                          "unknown element '" + line.tokens[k] + "'");
      out.push_back(it->second);
    }
    G.mul.push_back(std::move(out));
  }
  if (at != lines.size())
    throw parse_error(lines[at].number, "unexpected trailing line");
  Report r = validate_group(G);
  if (!r.ok()) throw parse_error(lines[0].number, "not a group: " + r.issues[0]);
  return G;
}

DaggerCategory parse_category(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw parse_error(1, "empty category file");
  if (lines[0].tokens[0] != "category" || lines[0].tokens.size() != 2)
    throw parse_error(lines[0].number, "expected 'category <name>'");
  DaggerCategory C;
  C.name = lines[0].tokens[1];

  std::map<std::string, int> objects;
  std::map<std::string, int> mors;
  auto object_at = [&](const Line& line, const std::string& name) {
    auto it = objects.find(name);
    if (it == objects.end())
      throw parse_error(line.number, "unknown object '" + name + "'");
    return it->second;
  };
  auto mor_at = [&](const Line& line, const std::string& name) {
    auto it = mors.find(name);
    if (it == mors.end())
      throw parse_error(line.number, "unknown morphism '" + name + "'");
    return it->second;
  };

  std::size_t at = 1;
  if (at >= lines.size() || lines[at].tokens[0] != "objects" ||
      lines[at].tokens.size() < 2)
    throw parse_error(at < lines.size() ? lines[at].number : lines.back().number,
                      "expected 'objects <x> ...'");
  for (std::size_t k = 1; k < lines[at].tokens.size(); ++k) {
    const std::string& name = lines[at].tokens[k];
    if (!objects.emplace(name, static_cast<int>(C.objects.size())).second)
      throw parse_error(lines[at].number, "duplicate object '" + name + "'");
    C.objects.push_back(name);
  }
  ++at;
  // morphism declarations first, then the tables
  for (; at < lines.size() && lines[at].tokens[0] == "mor"; ++at) {
    const Line& line = lines[at];
    if (line.tokens.size() != 4)
      throw parse_error(line.number, "expected 'mor <name> <src> <tgt>'");
    if (!mors.emplace(line.tokens[1], static_cast<int>(C.morphisms.size())).second)
      throw parse_error(line.number, "duplicate morphism '" + line.tokens[1] + "'");
    C.morphisms.push_back({line.tokens[1], object_at(line, line.tokens[2]),
                           object_at(line, line.tokens[3])});
  }
  const std::size_t nmor = C.morphisms.size();
  C.identity.assign(C.objects.size(), -1);
  C.comp.assign(nmor, std::vector<int>(nmor, -1));
  C.dagger.assign(nmor, -1);
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    const std::string& kind = line.tokens[0];
    if (kind == "id") {
      if (line.tokens.size() != 3)
        throw parse_error(line.number, "expected 'id <object> <morphism>'");
      C.identity[static_cast<std::size_t>(object_at(line, line.tokens[1]))] =
          mor_at(line, line.tokens[2]);
    } else if (kind == "comp") {
      if (line.tokens.size() != 4)
        throw parse_error(line.number, "expected 'comp <f> <g> <h>'");
      C.comp[static_cast<std::size_t>(mor_at(line, line.tokens[1]))]
            [static_cast<std::size_t>(mor_at(line, line.tokens[2]))] =
          mor_at(line, line.tokens[3]);
    } else if (kind == "dagger") {
      if (line.tokens.size() != 3)
        throw parse_error(line.number, "expected 'dagger <f> <g>'");
      C.dagger[static_cast<std::size_t>(mor_at(line, line.tokens[1]))] =
          mor_at(line, line.tokens[2]);
    } else {
      throw parse_error(line.number, "unknown directive '" + kind + "'");
    }
  }
  for (std::size_t x = 0; x < C.objects.size(); ++x)
    if (C.identity[x] < 0)
      throw parse_error(lines.back().number,
                        "missing id line for object '" + C.objects[x] + "'");
  for (std::size_t f = 0; f < nmor; ++f)
    if (C.dagger[f] < 0)
      throw parse_error(lines.back().number, "missing dagger line for '" +
                                                 C.morphisms[f].name + "'");
  Report r = validate_dagger(C);
  if (!r.ok())
    throw parse_error(lines[0].number,
                      "not a dagger category: " + r.issues[0]);
  return C;
}

std::string to_text(const CrossedSet& X) {
  std::ostringstream out;
  out << "crossedset " << (X.name.empty() ? "unnamed" : X.name) << "\n";
  out << "family " << family_name(X.family) << "\n";
  out << "maxdim " << X.max_dim << "\n";
  for (int n = 0; n <= X.max_dim; ++n) {
    out << "level " << n << " " << X.level_size(n);
    for (const auto& label : X.labels[static_cast<std::size_t>(n)])
      out << " " << label;
    out << "\n";
  }
  auto table = [&](const CrossedSet::Table& t) {
    for (std::uint32_t v : t) out << " " << v;
    out << "\n";
  };
  for (int n = 1; n <= X.max_dim; ++n)
    for (int i = 0; i <= n; ++i) {
      out << "face " << n << " " << i;
      table(X.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]);
    }
  for (int n = 0; n < X.max_dim; ++n)
    for (int i = 0; i <= n; ++i) {
      out << "degen " << n << " " << i;
      table(X.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]);
    }
  for (int n = 0; n <= X.max_dim; ++n)
    for (const auto& [gen, t] : X.action[static_cast<std::size_t>(n)]) {
      out << "action " << n << " " << gen_name_string(gen);
      table(t);
    }
  out << "end\n";
  return out.str();
}

CrossedSet parse_crossed_set(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw parse_error(1, "empty crossed set file");
  std::size_t at = 0;
  auto expect = [&](const std::string& directive, std::size_t ntokens) {
    if (at >= lines.size())
      throw parse_error(lines.back().number,
                        "unexpected end of file; wanted '" + directive + "'");
    if (lines[at].tokens[0] != directive || lines[at].tokens.size() < ntokens)
      throw parse_error(lines[at].number, "expected '" + directive + "' line");
  };
  expect("crossedset", 2);
  CrossedSet X;
  X.name = lines[at].tokens[1];
  ++at;
  expect("family", 2);
  try {
    X.family = family_from_name(lines[at].tokens[1]);
  } catch (const precondition_error& e) {
    throw parse_error(lines[at].number, e.what());
  }
  ++at;
  expect("maxdim", 2);
  X.max_dim = static_cast<int>(parse_number(lines[at], 1));
  ++at;

  const auto count = static_cast<std::size_t>(X.max_dim) + 1;
  X.labels.resize(count);
  X.face.resize(count);
  X.degen.resize(count);
  X.action.resize(count);
  for (int n = 1; n <= X.max_dim; ++n)
    X.face[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
  for (int n = 0; n < X.max_dim; ++n)
    X.degen[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);

  auto parse_level = [&](int n) {
    if (n < 0 || n > X.max_dim)
      throw parse_error(lines[at].number, "level out of range");
    return static_cast<std::size_t>(n);
  };
  auto read_table = [&](std::size_t from_tok, std::size_t expected_len) {
    const Line& line = lines[at];
    if (line.tokens.size() != from_tok + expected_len)
      throw parse_error(line.number, "table row has wrong length");
    CrossedSet::Table t;
    t.reserve(expected_len);
    for (std::size_t k = from_tok; k < line.tokens.size(); ++k)
      t.push_back(static_cast<std::uint32_t>(parse_number(line, k)));
    return t;
  };

  bool ended = false;
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    const std::string& kind = line.tokens[0];
    if (kind == "end") {
      ended = true;
      ++at;
      break;
    }
    if (kind == "level") {
      if (line.tokens.size() < 3)
        throw parse_error(line.number, "expected 'level <n> <count> ...'");
      const std::size_t n = parse_level(static_cast<int>(parse_number(line, 1)));
      const std::size_t m = static_cast<std::size_t>(parse_number(line, 2));
      if (line.tokens.size() != 3 + m)
        throw parse_error(line.number, "level has wrong label count");
      X.labels[n].assign(line.tokens.begin() + 3, line.tokens.end());
    } else if (kind == "face") {
      if (line.tokens.size() < 3)
        throw parse_error(line.number, "expected 'face <n> <i> ...'");
      const std::size_t n = parse_level(static_cast<int>(parse_number(line, 1)));
      const int i = static_cast<int>(parse_number(line, 2));
      if (n < 1 || i < 0 || i > static_cast<int>(n))
        throw parse_error(line.number, "face index out of range");
      X.face[n][static_cast<std::size_t>(i)] =
          read_table(3, X.labels[n].size());
    } else if (kind == "degen") {
      if (line.tokens.size() < 3)
        throw parse_error(line.number, "expected 'degen <n> <i> ...'");
      const std::size_t n = parse_level(static_cast<int>(parse_number(line, 1)));
      const int i = static_cast<int>(parse_number(line, 2));
      if (static_cast<int>(n) >= X.max_dim || i < 0 || i > static_cast<int>(n))
        throw parse_error(line.number, "degeneracy index out of range");
      X.degen[n][static_cast<std::size_t>(i)] =
          read_table(3, X.labels[n].size());
    } else if (kind == "action") {
      if (line.tokens.size() < 3)
        throw parse_error(line.number, "expected 'action <n> <gen> ...'");
      const std::size_t n = parse_level(static_cast<int>(parse_number(line, 1)));
      GenName gen;
      try {
        gen = gen_name_from_string(line.tokens[2]);
      } catch (const precondition_error& e) {
        throw parse_error(line.number, e.what());
      }
      X.action[n].emplace_back(gen, read_table(3, X.labels[n].size()));
    } else {
      throw parse_error(line.number, "unknown directive '" + kind + "'");
    }
  }
  if (!ended) throw parse_error(lines.back().number, "missing 'end' line");
  if (at != lines.size())
    throw parse_error(lines[at].number, "unexpected line after 'end'");
  Report shape = validate_shape(X);
  if (!shape.ok()) throw parse_error(1, "malformed tables: " + shape.issues[0]);
  return X;
}

} // namespace xsg
