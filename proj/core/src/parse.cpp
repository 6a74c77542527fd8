#include "hbu/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "hbu/error.hpp"

namespace hbu::parse {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::pair<std::string_view, std::string_view> split_kind(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {s, {}};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

double number(std::string_view s) {
  s = trim(s);
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("not a number: '" + std::string(s) + "'");
  return v;
}

int integer(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

std::complex<double> complex_number(std::string_view s) {
  const std::string t = strip_spaces(s);
  if (t.empty()) throw ParseError("empty complex literal");
  if (t.back() != 'i') return {number(t), 0.0};
  const std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  double imv = 0.0;
  if (im.empty() || im == "+")
    imv = 1.0;
  else if (im == "-")
    imv = -1.0;
  else
    imv = number(im);
  try {
    return {re.empty() ? 0.0 : number(re), imv};
  } catch (const ParseError&) {
    throw ParseError("not a complex number: '" + t + "'");
  }
}

std::vector<std::complex<double>> complex_list(std::string_view s) {
  std::vector<std::complex<double>> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(complex_number(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::pair<double, double>> table_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::pair<double, double>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(path + ":" + std::to_string(lineno) + ": expected two columns");
    out.emplace_back(number(tok[0]), number(tok[1]));
  }
  if (out.empty()) throw ParseError(path + ": empty table");
  return out;
}

geometry::ApproachFunction approach_function(std::string_view s) {
  using geometry::ApproachFunction;
  const auto [kind, arg] = split_kind(trim(s));
  try {
    if (kind == "zero" && arg.empty()) return ApproachFunction::zero();
    if (kind == "linear") return ApproachFunction::linear(number(arg));
    if (kind == "cubic") return ApproachFunction::cubic(number(arg));
    if (kind == "power") return ApproachFunction::power(number(arg));
    if (kind == "custom") return ApproachFunction::custom(table_file(std::string(arg)));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("approach function '" + std::string(s) + "': " + e.what());
  }
  throw ParseError("unknown approach function '" + std::string(s) + "'");
}

potential::Majorant majorant(std::string_view s) {
  using potential::Majorant;
  const auto [kind, arg] = split_kind(trim(s));
  try {
    if (kind == "const") return Majorant::constant(number(arg));
    if (kind == "pow") return Majorant::power_law(number(arg));
    if (kind == "exp") return Majorant::exp_law(number(arg));
    if (kind == "custom") return Majorant::custom(table_file(std::string(arg)));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("majorant '" + std::string(s) + "': " + e.what());
  }
  throw ParseError("unknown majorant '" + std::string(s) + "'");
}

opgroup::ClosedRealSet real_set(std::string_view s) {
  const std::string t = strip_spaces(s);
  if (t == "empty" || t == "{}") return {};
  std::vector<opgroup::ClosedRealSet::Interval> parts;
  std::size_t pos = 0;
  while (true) {
    if (pos >= t.size() || t[pos] != '[') throw ParseError("real set '" + t + "': expected '[' at " + std::to_string(pos));
    const auto close = t.find(']', pos);
    if (close == std::string::npos) throw ParseError("real set '" + t + "': missing ']'");
    const std::string inner = t.substr(pos + 1, close - pos - 1);
    const auto comma = inner.find(',');
    if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
      throw ParseError("real set '" + t + "': interval needs exactly two endpoints");
    parts.push_back({number(inner.substr(0, comma)), number(inner.substr(comma + 1))});
    pos = close + 1;
    if (pos == t.size()) break;
    if (t[pos] != 'u' && t[pos] != 'U') throw ParseError("real set '" + t + "': expected 'u' at " + std::to_string(pos));
    ++pos;
  }
  try {
    return opgroup::ClosedRealSet::from_intervals(std::move(parts));
  } catch (const Error& e) {
    throw ParseError("real set '" + t + "': " + e.what());
  }
}

std::vector<opgroup::JordanBlockSpec> jordan_spec(std::string_view s) {
  const std::string t = strip_spaces(s);
  const std::string prefix = "jordan:[";
  if (t.rfind(prefix, 0) != 0 || t.back() != ']') throw ParseError("jordan spec '" + t + "': expected jordan:[...]");
  const std::string body = t.substr(prefix.size(), t.size() - prefix.size() - 1);
  std::vector<opgroup::JordanBlockSpec> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '(') throw ParseError("jordan spec '" + t + "': expected '('");
    const auto close = body.find(')', pos);
    if (close == std::string::npos) throw ParseError("jordan spec '" + t + "': missing ')'");
    const std::string inner = body.substr(pos + 1, close - pos - 1);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError("jordan spec '" + t + "': block needs (height,size)");
    const int size = integer(inner.substr(comma + 1));
    if (size < 1) throw ParseError("jordan spec '" + t + "': block size must be >= 1");
    out.push_back({number(inner.substr(0, comma)), size});
    pos = close + 1;
    if (pos < body.size()) {
      if (body[pos] != ',') throw ParseError("jordan spec '" + t + "': expected ','");
      ++pos;
    }
  }
  if (out.empty()) throw ParseError("jordan spec '" + t + "': no blocks");
  return out;
}

opgroup::CMatrix matrix_text(std::string_view text) {
  std::map<std::string, std::vector<std::string>> fields;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view rest = line;
    if (const auto eq = line.find('='); eq != std::string::npos) {
      current = std::string(trim(std::string_view(line).substr(0, eq)));
      if (current != "n" && current != "re" && current != "im")
        throw ParseError("matrix line " + std::to_string(lineno) + ": unknown key '" + current + "'");
      if (fields.count(current)) throw ParseError("matrix line " + std::to_string(lineno) + ": duplicate key '" + current + "'");
      fields[current];
      rest = std::string_view(line).substr(eq + 1);
    }
    auto tok = tokens(rest);
    if (tok.empty()) continue;
    if (current.empty()) throw ParseError("matrix line " + std::to_string(lineno) + ": value before any key");
    auto& dst = fields[current];
    dst.insert(dst.end(), tok.begin(), tok.end());
  }
  if (!fields.count("n") || fields["n"].size() != 1) throw ParseError("matrix: missing or malformed n");
  const int n = integer(fields["n"][0]);
  if (n < 1) throw ParseError("matrix: n must be >= 1");
  const std::size_t count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  auto values = [&](const std::string& key) {
    std::vector<double> v(count, 0.0);
    if (!fields.count(key)) {
      if (key == "re") throw ParseError("matrix: missing re");
      return v;
    }
    if (fields[key].size() != count)
      throw ParseError("matrix: " + key + " has " + std::to_string(fields[key].size()) + " values, expected " +
                       std::to_string(count));
    for (std::size_t k = 0; k < count; ++k) v[k] = number(fields[key][k]);
    return v;
  };
  const auto re = values("re");
  const auto im = values("im");
  opgroup::CMatrix A(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const std::size_t k = static_cast<std::size_t>(r * n + c);
      if (!std::isfinite(re[k]) || !std::isfinite(im[k])) throw ParseError("matrix: non-finite entry");
      A(r, c) = {re[k], im[k]};
    }
  return A;
}

opgroup::CMatrix matrix_file(const std::string& path) {
  try {
    return matrix_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

opgroup::MatrixGenerator matrix_source(std::string_view s) {
  const auto t = trim(s);
  if (t.rfind("jordan:", 0) == 0) return opgroup::MatrixGenerator::from_jordan(jordan_spec(t));
  return opgroup::MatrixGenerator::from_matrix(matrix_file(std::string(t)));
}

}  // namespace hbu::parse
