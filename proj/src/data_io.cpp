#include "ulinf/data_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ulinf/unit_lindley.hpp"

namespace ulinf {

const std::vector<double>& elephants() {
  static const std::vector<double> values = {
      0.0000, 1.0000, 0.8000, 0.2500, 0.5714, 1.0000, 0.0000, 0.2500, 0.5000,
      1.0000, 1.0000, 0.7000, 1.0000, 0.1429, 0.2667, 1.0000, 0.5000, 0.4000,
      0.6765, 0.4359, 0.0541, 0.4490, 0.4150, 0.6923, 0.1429, 0.0707, 0.0605};
  return values;
}

namespace {

// strtod rather than std::stod: stod throws out_of_range on subnormal
// values, which must round-trip.
bool parses_as_double(const std::string& token, double& out) {
  if (token.empty()) return false;
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size();
}

}  // namespace

Dataset parse_values(std::istream& in, const std::string& name) {
  Dataset dataset;
  dataset.name = name;
  dataset.source = DatasetSource::File;

  std::string line;
  std::size_t line_no = 0;
  bool saw_token = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() &&
             (std::isspace(static_cast<unsigned char>(line[pos])) || line[pos] == ',')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      const std::size_t start = pos;
      while (pos < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[pos])) && line[pos] != ',') {
        ++pos;
      }
      const std::string token = line.substr(start, pos - start);
      double value = 0.0;
      if (!parses_as_double(token, value)) {
        // a non-numeric first line is a header
        if (!saw_token && line_no == 1) {
          pos = line.size();
          break;
        }
        throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                 ", column " + std::to_string(start + 1) +
                                 ": '" + token + "' is not a number");
      }
      saw_token = true;
      if (!(value >= 0.0 && value <= 1.0)) {
        throw std::runtime_error(
            "value " + std::to_string(value) + " at index " +
            std::to_string(dataset.values.size()) + " is outside [0,1]");
      }
      dataset.values.push_back(value);
    }
  }
  return dataset;
}

Dataset load(const std::string& path_or_name) {
  if (path_or_name == "elephants") {
    return Dataset{"elephants", elephants(), DatasetSource::Embedded};
  }
  std::ifstream in(path_or_name);
  if (!in) {
    throw std::runtime_error("cannot open dataset file or unknown embedded name: " +
                             path_or_name);
  }
  return parse_values(in, path_or_name);
}

Dataset generate_pseudo(std::uint64_t seed, std::size_t n_zeros,
                        std::size_t n_ones, std::size_t n_interior,
                        double theta) {
  const UnitLindley ul(theta);  // validates theta
  Dataset dataset;
  dataset.name = "pseudo";
  dataset.source = DatasetSource::Generated;
  dataset.values.reserve(n_zeros + n_interior + n_ones);
  dataset.values.insert(dataset.values.end(), n_zeros, 0.0);
  if (n_interior > 0) {
    Rng rng(seed);
    for (std::size_t i = 0; i < n_interior; ++i) {
      dataset.values.push_back(ul.sample(rng));
    }
  }
  dataset.values.insert(dataset.values.end(), n_ones, 1.0);
  return dataset;
}

void write_csv(const Dataset& dataset, std::ostream& out) {
  out << "y\n";
  char buffer[40];
  for (const double value : dataset.values) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    out << buffer << "\n";
  }
}

void write_csv(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_csv(dataset, out);
}

}  // namespace ulinf
