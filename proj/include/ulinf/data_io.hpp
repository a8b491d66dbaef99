#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ulinf {

enum class DatasetSource { Embedded, File, Generated };

struct Dataset {
  std::string name;
  std::vector<double> values;
  DatasetSource source = DatasetSource::File;
};

/// The newborn-elephants proportions: 27 values with 2 zeros and 6 ones.
const std::vector<double>& elephants();

/// Load a dataset by embedded name ("elephants") or from a file containing
/// whitespace/comma-separated values, optionally with a single header line.
/// Values must lie in [0,1]; parse errors carry line and column, range
/// errors carry the value index.
Dataset load(const std::string& path_or_name);

Dataset parse_values(std::istream& in, const std::string& name);

/// Pseudo-data generator: n_zeros zeros, n_interior unit-Lindley(theta)
/// draws and n_ones ones, concatenated in that order. Deterministic in the
/// seed.
Dataset generate_pseudo(std::uint64_t seed, std::size_t n_zeros,
                        std::size_t n_ones, std::size_t n_interior,
                        double theta);

/// Single-column CSV with a "y" header; full double precision so the values
/// round-trip bit-exactly through load().
void write_csv(const Dataset& dataset, std::ostream& out);
void write_csv(const Dataset& dataset, const std::string& path);

}  // namespace ulinf
