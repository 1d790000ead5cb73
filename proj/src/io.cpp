#include "lpdeinv/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "lpdeinv/parse.hpp"

namespace lpdeinv {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    const std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, std::string(t)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

Expr parse_at(std::string_view text, std::size_t line) {
  try {
    return parse_expr(text);
  } catch (const SyntaxError& e) {
    throw FormatError(e.what(), line);
  } catch (const ZeroDenominatorError& e) {
    throw FormatError(e.what(), line);
  }
}

std::pair<std::string, Expr> keyed(const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) throw FormatError("expected '<key> = <expr>'", l.number);
  std::string key(trim(std::string_view(l.text).substr(0, eq)));
  if (key.empty()) throw FormatError("missing key before '='", l.number);
  return {std::move(key), parse_at(std::string_view(l.text).substr(eq + 1), l.number)};
}

}  // namespace

Lpde parse_equation(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  Lpde v;
  for (std::size_t i = 0; i < 6; ++i) {
    if (i >= lines.size()) throw FormatError(std::string("missing coefficient ") + Lpde::names[i], 0);
    auto [key, value] = keyed(lines[i]);
    if (key != Lpde::names[i]) {
      throw FormatError("expected key '" + std::string(Lpde::names[i]) + "', got '" + key + "'", lines[i].number);
    }
    v[i] = std::move(value);
  }
  if (lines.size() > 6) throw FormatError("unexpected content after coefficient c", lines[6].number);
  return v;
}

TransformationSpec parse_transformation(std::string_view text) {
  std::map<std::string, Expr> values;
  static const std::vector<std::string> allowed = {"h", "xi", "eta", "g11", "g12", "g21", "g22"};
  for (const Line& l : content_lines(text)) {
    auto [key, value] = keyed(l);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw FormatError("unknown key '" + key + "'", l.number);
    }
    if (!values.emplace(key, std::move(value)).second) throw FormatError("duplicate key '" + key + "'", l.number);
  }
  TransformationSpec spec;
  const auto take = [&](const std::string& k) { return values.at(k); };
  if (!values.count("h")) throw FormatError("missing key 'h'", 0);
  spec.h = take("h");
  const bool has_maps = values.count("xi") || values.count("eta");
  const bool has_matrix = values.count("g11") || values.count("g12") || values.count("g21") || values.count("g22");
  if (has_maps == has_matrix) throw FormatError("give either xi, eta or g11, g12, g21, g22", 0);
  if (has_maps) {
    if (!values.count("xi") || !values.count("eta")) throw FormatError("both xi and eta are required", 0);
    spec.maps = std::make_pair(take("xi"), take("eta"));
  } else {
    for (const char* k : {"g11", "g12", "g21", "g22"}) {
      if (!values.count(k)) throw FormatError(std::string("missing key '") + k + "'", 0);
    }
    spec.g = matrix2(take("g11"), take("g12"), take("g21"), take("g22"));
  }
  return spec;
}

ExprMatrix2 parse_frame_matrix(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.size() != 4) {
    throw FormatError("frame file needs exactly four expressions, found " + std::to_string(lines.size()), 0);
  }
  ExprMatrix2 e;
  for (int i = 0; i < 4; ++i) e(i / 2, i % 2) = parse_at(lines[i].text, lines[i].number);
  return e;
}

std::string format_equation(const Lpde& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) os << Lpde::names[i] << " = " << to_string(v[i]) << '\n';
  return os.str();
}

std::string format_frame_matrix(const ExprMatrix2& e) {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) os << to_string(e(i / 2, i % 2)) << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'", 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace lpdeinv
