#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ulinf/data_io.hpp"
#include "ulinf/inference.hpp"

using namespace ulinf;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "ulinf_test_tmp_" + std::to_string(counter++) + ".txt";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("embedded elephants dataset") {
  const auto& values = elephants();
  REQUIRE(values.size() == 27);
  std::size_t zeros = 0, ones = 0;
  double sum = 0.0;
  for (const double v : values) {
    if (v == 0.0) ++zeros;
    if (v == 1.0) ++ones;
    sum += v;
  }
  CHECK(zeros == 2);
  CHECK(ones == 6);
  // golden checksum of the verbatim listing
  CHECK(sum == doctest::Approx(13.3779).epsilon(1e-13));
  CHECK(values[0] == 0.0);
  CHECK(values[1] == 1.0);
  CHECK(values[26] == 0.0605);

  const Dataset ds = load("elephants");
  CHECK(ds.source == DatasetSource::Embedded);
  CHECK(ds.values == values);
}

TEST_CASE("load parses plain and comma-separated text") {
  TempFile plain("0.5\n");
  const Dataset single = load(plain.path);
  REQUIRE(single.values.size() == 1);
  CHECK(single.values[0] == 0.5);

  TempFile mixed("0.1, 0.2 0.3\n1 0\n");
  const Dataset multi = load(mixed.path);
  CHECK(multi.values == std::vector<double>{0.1, 0.2, 0.3, 1.0, 0.0});
}

TEST_CASE("load detects an optional header line") {
  TempFile csv("y\n0.25\n0.75\n");
  const Dataset ds = load(csv.path);
  CHECK(ds.values == std::vector<double>{0.25, 0.75});
}

TEST_CASE("load rejects out-of-range and malformed input") {
  TempFile bad_range("0.5\n1.2\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(load(bad_range.path)),
                       doctest::Contains("1.2"), std::runtime_error);

  TempFile bad_token("0.5\nx7\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(load(bad_token.path)),
                       doctest::Contains("line 2"), std::runtime_error);

  CHECK_THROWS_AS(static_cast<void>(load("no_such_file_anywhere.csv")),
                  std::runtime_error);
}

TEST_CASE("csv round trip is bit exact") {
  Dataset ds;
  ds.name = "roundtrip";
  ds.values = {0.0, 1.0, 1.0 / 3.0, 0.1234567890123456789, 5e-324, 0.9999999999999999};
  std::ostringstream out;
  write_csv(ds, out);
  std::istringstream in(out.str());
  const Dataset back = parse_values(in, "back");
  REQUIRE(back.values.size() == ds.values.size());
  for (std::size_t i = 0; i < ds.values.size(); ++i) {
    CHECK(back.values[i] == ds.values[i]);
  }
}

TEST_CASE("pseudo-data generator defaults match the reference construction") {
  const Dataset ds = generate_pseudo(99, 30, 50, 220, 1.444589);
  REQUIRE(ds.values.size() == 300);
  CHECK(ds.source == DatasetSource::Generated);
  const PartitionedSample parts = partition(ds.values);
  CHECK(parts.t1 == 80);
  CHECK(parts.t2 == 50);
  const MleEstimates est = mle(parts);
  CHECK(est.alpha == 80.0 / 300.0);
  CHECK(est.alpha == doctest::Approx(0.2667).epsilon(2e-4));
  CHECK(est.p == 0.625);
  // zeros first, then interior, then ones
  CHECK(ds.values[0] == 0.0);
  CHECK(ds.values[29] == 0.0);
  CHECK(ds.values[30] > 0.0);
  CHECK(ds.values[30] < 1.0);
  CHECK(ds.values[299] == 1.0);
}

TEST_CASE("pseudo-data generator is deterministic and supports edge shapes") {
  const Dataset a = generate_pseudo(7, 30, 50, 220, 1.444589);
  const Dataset b = generate_pseudo(7, 30, 50, 220, 1.444589);
  CHECK(a.values == b.values);

  const Dataset interior_only = generate_pseudo(3, 0, 0, 10, 2.0);
  CHECK(interior_only.values.size() == 10);
  for (const double v : interior_only.values) {
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }

  const Dataset empty = generate_pseudo(3, 0, 0, 0, 2.0);
  CHECK(empty.values.empty());
  CHECK_THROWS_AS(static_cast<void>(generate_pseudo(3, 1, 1, 1, -2.0)),
                  std::domain_error);
}

TEST_CASE("theta-hat recovers the generator parameter from a large sample") {
  const Dataset ds = generate_pseudo(11, 0, 0, 100000, 1.444589);
  const MleEstimates est = mle(partition(ds.values));
  CHECK(*est.theta == doctest::Approx(1.4446).epsilon(0.01 / 1.4446));
}
