#include "framex/records.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "framex/errors.hpp"

namespace framex {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, int line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw InvalidArgument("csv line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("csv line " + std::to_string(line) + ": bad integer '" + s + "'");
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, std::vector<SweepRecord> records, const CsvMetadata& metadata) {
  sort_records(records);
  for (const auto& [key, value] : metadata) out << "# " << key << '=' << value << '\n';
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.function << ',' << r.n << ',' << r.m << ',' << format_double(r.gamma) << ','
        << format_double(r.epsilon) << ',' << format_double(r.eta) << ',' << format_double(r.error_inf) << ','
        << format_double(r.error_l2) << ',' << format_double(r.cond_2) << ',' << format_double(r.cond_inf) << ','
        << r.flag << '\n';
  }
}

void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& path,
              const CsvMetadata& metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(out, records, metadata);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

CsvDocument parse_csv(std::istream& in) {
  CsvDocument doc;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq == std::string::npos)
        doc.metadata.emplace_back(body, "");
      else
        doc.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) throw InvalidArgument("csv line " + std::to_string(line_no) + ": unexpected header");
      header_seen = true;
      continue;
    }
    const auto f = split(line);
    if (f.size() != 11)
      throw InvalidArgument("csv line " + std::to_string(line_no) + ": expected 11 fields, got " +
                            std::to_string(f.size()));
    SweepRecord r;
    r.function = f[0];
    r.n = parse_int(f[1], line_no);
    r.m = parse_int(f[2], line_no);
    r.gamma = parse_double(f[3], line_no);
    r.epsilon = parse_double(f[4], line_no);
    r.eta = parse_double(f[5], line_no);
    r.error_inf = parse_double(f[6], line_no);
    r.error_l2 = parse_double(f[7], line_no);
    r.cond_2 = parse_double(f[8], line_no);
    r.cond_inf = parse_double(f[9], line_no);
    r.flag = f[10];
    doc.records.push_back(std::move(r));
  }
  if (!header_seen) throw InvalidArgument("csv: missing header");
  return doc;
}

CsvDocument read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  try {
    return parse_csv(in);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

}  // namespace framex
