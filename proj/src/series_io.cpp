#include "dqpt/series_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dqpt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string number_repr(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

double parse_number(const std::string& token) {
  if (token == "inf") return kInf;
  return std::stod(token);
}

nlohmann::json value_to_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

double value_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInf;
    throw std::runtime_error("read_series: unexpected string value");
  }
  return v.get<double>();
}

}  // namespace

SeriesFormat format_from_name(const std::string& name) {
  if (name == "csv") return SeriesFormat::csv;
  if (name == "json") return SeriesFormat::json;
  throw std::invalid_argument("format must be csv or json");
}

std::string format_extension(SeriesFormat format) {
  return format == SeriesFormat::csv ? "csv" : "json";
}

void write_series(const RateSeries& series, const std::filesystem::path& path,
                  SeriesFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_series: cannot open " + path.string());
  const bool with_le = series.le.size() == series.times.size() && !series.le.empty();

  if (format == SeriesFormat::csv) {
    out << "t,lambda" << (with_le ? ",le" : "") << "\n";
    for (std::size_t i = 0; i < series.times.size(); ++i) {
      out << number_repr(series.times[i]) << "," << number_repr(series.lambda[i]);
      if (with_le) out << "," << number_repr(series.le[i]);
      out << "\n";
    }
  } else {
    nlohmann::json doc;
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [key, value] : series.metadata) meta[key] = value;
    doc["metadata"] = meta;
    doc["t"] = nlohmann::json::array();
    doc["lambda"] = nlohmann::json::array();
    for (double t : series.times) doc["t"].push_back(value_to_json(t));
    for (double l : series.lambda) doc["lambda"].push_back(value_to_json(l));
    if (with_le) {
      doc["le"] = nlohmann::json::array();
      for (double le : series.le) doc["le"].push_back(value_to_json(le));
    }
    out << doc.dump(2) << "\n";
  }
  if (!out) throw std::runtime_error("write_series: write failed for " + path.string());
}

RateSeries read_series(const std::filesystem::path& path, SeriesFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_series: cannot open " + path.string());
  RateSeries series;

  if (format == SeriesFormat::csv) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_series: missing header");
    const bool with_le = line.find(",le") != std::string::npos;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      std::string token;
      std::getline(row, token, ',');
      series.times.push_back(parse_number(token));
      std::getline(row, token, ',');
      series.lambda.push_back(parse_number(token));
      if (with_le && std::getline(row, token, ',')) series.le.push_back(parse_number(token));
    }
  } else {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.contains("metadata"))
      for (const auto& [key, value] : doc["metadata"].items())
        series.metadata.emplace_back(key, value.get<std::string>());
    for (const auto& v : doc["t"]) series.times.push_back(value_from_json(v));
    for (const auto& v : doc["lambda"]) series.lambda.push_back(value_from_json(v));
    if (doc.contains("le"))
      for (const auto& v : doc["le"]) series.le.push_back(value_from_json(v));
  }
  return series;
}

}  // namespace dqpt
