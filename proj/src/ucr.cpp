#include "tsdist/ucr.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tsdist {

namespace {

std::vector<std::string> tokenize(const std::string& line, bool comma) {
  std::vector<std::string> out;
  std::string tok;
  for (char c : line) {
    bool sep = comma ? (c == ',') : (c == ' ' || c == '\t');
    if (sep) {
      if (!tok.empty()) out.push_back(std::move(tok));
      tok.clear();
    } else if (c != '\r') {
      tok.push_back(c);
    }
  }
  if (!tok.empty()) out.push_back(std::move(tok));
  return out;
}

double parse_double(const std::string& tok, const std::string& name, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(name + ": line " + std::to_string(line_no) +
                             ": non-numeric field '" + tok + "'");
  }
  if (used != tok.size() || !std::isfinite(v)) {
    throw std::runtime_error(name + ": line " + std::to_string(line_no) +
                             ": non-numeric field '" + tok + "'");
  }
  return v;
}

} // namespace

LabeledDataset load_ucr(std::istream& in, const std::string& name) {
  LabeledDataset ds;
  ds.name = name;

  std::string line;
  std::size_t line_no = 0;
  std::size_t expected_fields = 0;
  bool comma = false;
  bool first_content = true;
  std::vector<int> label_values; // coerced integer per class id

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue; // blank
    if (first_content) {
      comma = line.find(',') != std::string::npos;
      first_content = false;
    }
    auto fields = tokenize(line, comma);
    if (expected_fields == 0) {
      expected_fields = fields.size();
      if (expected_fields < 3) {
        throw std::runtime_error(name + ": line " + std::to_string(line_no) +
                                 ": a row needs a label and at least 2 samples");
      }
    } else if (fields.size() != expected_fields) {
      throw std::runtime_error(name + ": line " + std::to_string(line_no) + ": ragged row (" +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(expected_fields) + ")");
    }

    double label_raw = parse_double(fields[0], name, line_no);
    double rounded = std::floor(label_raw + 0.5);
    if (std::abs(label_raw - rounded) > 1e-9) {
      throw std::runtime_error(name + ": line " + std::to_string(line_no) +
                               ": label '" + fields[0] + "' is not integer-coercible");
    }
    int label_int = static_cast<int>(rounded);

    int id = -1;
    for (std::size_t c = 0; c < label_values.size(); ++c) {
      if (label_values[c] == label_int) {
        id = static_cast<int>(c);
        break;
      }
    }
    if (id < 0) {
      id = static_cast<int>(label_values.size());
      label_values.push_back(label_int);
      ds.label_names.push_back(fields[0]);
    }

    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t f = 1; f < fields.size(); ++f) {
      values.push_back(parse_double(fields[f], name, line_no));
    }
    ds.items.push_back(make_series(std::move(values)));
    ds.labels.push_back(id);
  }
  if (ds.items.empty()) throw std::runtime_error(name + ": empty file");
  return ds;
}

LabeledDataset load_ucr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  // Dataset name = file stem.
  std::string name = path;
  if (auto slash = name.find_last_of("/\\"); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) {
    name = name.substr(0, dot);
  }
  return load_ucr(in, name);
}

void save_ucr(const LabeledDataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  char buf[40];
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out << ds.label_names[static_cast<std::size_t>(ds.labels[i])];
    for (double v : ds.items[i].values) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out << ',' << buf;
    }
    out << '\n';
  }
}

TimeSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<double> values;
  std::string tok;
  std::size_t pos = 0;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  for (char& c : text) {
    if (c == ',' || c == '\r' || c == '\n' || c == '\t') c = ' ';
  }
  std::istringstream fields(text);
  while (fields >> tok) {
    ++pos;
    double v = 0.0;
    std::size_t used = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v)) {
      throw std::runtime_error(path + ": field " + std::to_string(pos) + ": non-numeric value '" +
                               tok + "'");
    }
    values.push_back(v);
  }
  if (values.size() < 2) throw std::runtime_error(path + ": needs at least 2 samples");
  return make_series(std::move(values));
}

} // namespace tsdist
