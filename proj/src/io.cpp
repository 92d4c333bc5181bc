#include "ifm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ifm/error.hpp"

namespace ifm::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, "malformed matrix document: " + what);
}

std::size_t positive_size(const json& doc, const char* key) {
  if (!doc.contains(key)) parse_error(std::string("missing \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    parse_error(std::string("\"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

double number_field(const json& record, const char* key, std::size_t i, std::size_t j) {
  if (!record.is_object() || !record.contains(key) || !record.at(key).is_number()) {
    std::ostringstream msg;
    msg << "entry (" << i + 1 << "," << j + 1 << ") needs numeric \"" << key << "\"";
    parse_error(msg.str());
  }
  return record.at(key).get<double>();
}

double round_to(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(v * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

Ifm parse_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
  if (!doc.is_object()) parse_error("top level must be an object");
  const std::size_t rows = positive_size(doc, "rows");
  const std::size_t cols = positive_size(doc, "cols");
  if (!doc.contains("entries") || !doc.at("entries").is_array()) parse_error("missing \"entries\" array");
  const auto& entries = doc.at("entries");
  if (entries.size() != rows) parse_error("entries has a different row count than \"rows\"");

  std::vector<Ifn> values;
  values.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = entries.at(i);
    if (!row.is_array() || row.size() != cols) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " does not have " << cols << " entries";
      parse_error(msg.str());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const double mu = number_field(row.at(j), "mu", i, j);
      const double nu = number_field(row.at(j), "nu", i, j);
      try {
        values.push_back(make_ifn(mu, nu));
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "entry (" << i + 1 << "," << j + 1 << "): " << e.what();
        throw Error(ErrorKind::ValidationError, msg.str());
      }
    }
  }
  return Ifm::from_ifns(rows, cols, values);
}

Ifm read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

std::string format_matrix(const Ifm& m, const FormatOptions& options) {
  auto num = [&](double v) {
    return json(options.display ? round_to(v, *options.display) : v).dump();
  };
  std::ostringstream out;
  out << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols() << ",\"entries\":[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ",";
      out << "{\"mu\":" << num(m(i, j).mu) << ",\"nu\":" << num(m(i, j).nu) << "}";
    }
    out << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
  }
  out << "]}\n";
  return out.str();
}

namespace {

double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::Usage, "bad number in grid: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return parts;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Usage, "empty grid");
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw Error(ErrorKind::Usage, "grid range must be start:stop:step");
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0) || stop < start) throw Error(ErrorKind::Usage, "grid range needs step > 0 and start <= stop");
    for (long k = 0;; ++k) {
      double v = start + static_cast<double>(k) * step;
      if (v > stop + 1e-12) break;
      if (std::abs(v - stop) <= 1e-12) v = stop;
      grid.push_back(v);
    }
  } else {
    for (const auto part : split(text, ',')) grid.push_back(parse_number(part));
  }
  return grid;
}

void write_trace_csv(std::ostream& out, const ConvergenceReport& report) {
  out << "m,delta,bound\n";
  const auto old_precision = out.precision(17);
  for (std::size_t k = 0; k < report.deltas.size(); ++k) {
    out << k + 2 << "," << report.deltas[k] << ",";
    if (report.bound_trace[k]) {
      out << *report.bound_trace[k];
    } else {
      out << "NA";
    }
    out << "\n";
  }
  out.precision(old_precision);
}

}  // namespace ifm::io
