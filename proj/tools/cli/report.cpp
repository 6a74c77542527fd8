#include "report.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hbu/error.hpp"

namespace hbu::cli {

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 2;
  }
  return 1;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "fail";
}

std::string num(double v, int precision) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

std::string exact(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const Report& r) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

void write_outputs(const Report& r, const std::string& path) {
  std::ofstream csv(path);
  if (!csv) throw ParseError("cannot write " + path);
  write_csv(csv, r);

  nlohmann::ordered_json meta;
  meta["experiment"] = r.experiment;
  meta["seed"] = r.seed;
  meta["verdict"] = to_string(r.status);
  auto& input = meta["input"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.input) input[k] = v;
  auto& summary = meta["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary) summary[k] = v;
  meta["rows"] = r.rows.size();
  meta["wall_clock_seconds"] = r.wall_seconds;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  meta["timestamp"] = ts.str();
  std::ofstream side(path + ".meta.json");
  if (!side) throw ParseError("cannot write " + path + ".meta.json");
  side << meta.dump(2) << "\n";
}

void print_summary(std::ostream& out, const Report& r) {
  out << "experiment=" << r.experiment << "\n";
  for (const auto& [k, v] : r.summary) out << k << "=" << v << "\n";
  out << "seed=" << r.seed << "\n";
  out << "verdict=" << to_string(r.status) << "\n";
}

int Table::find(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open report " + path);
  Table t;
  std::string line;
  int lineno = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(s);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!s.empty() && s.back() == ',') cells.emplace_back();
    return cells;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (t.columns.empty()) {
      t.columns = split(line);
      continue;
    }
    auto cells = split(line);
    if (cells.size() != t.columns.size())
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(t.columns.size()) +
                       " cells, found " + std::to_string(cells.size()));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace hbu::cli
