#include "dagscope/csv.hpp"
#include "dagscope/dataset.hpp"
#include "dagscope/error.hpp"
#include "dagscope/graph.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <fstream>
#include <limits>

using namespace dagscope;

namespace {

Dataset random_dataset(std::uint64_t seed, Eigen::Index n = 40, Eigen::Index d = 4) {
  Rng rng(seed);
  return Dataset(testing::random_matrix(rng, n, d, -3.0, 5.0));
}

double population_std(const DenseMatrix& m, Eigen::Index j) {
  const double mean = m.col(j).mean();
  return std::sqrt((m.col(j).array() - mean).square().sum() / static_cast<double>(m.rows()));
}

}  // namespace

TEST_CASE("dataset records population statistics") {
  DenseMatrix m(4, 2);
  m << 1, 10, 2, 10, 3, 20, 4, 20;
  const Dataset ds(m);
  CHECK(ds.names() == std::vector<std::string>{"X0", "X1"});
  CHECK(ds.col_means()[0] == doctest::Approx(2.5));
  CHECK(ds.col_stds()[0] == doctest::Approx(std::sqrt(1.25)));
  CHECK(ds.col_stds()[1] == doctest::Approx(5.0));
}

TEST_CASE("constant column is rejected with its index") {
  DenseMatrix m(3, 3);
  m << 1, 7, 2, 2, 7, 3, 3, 7, 5;
  try {
    Dataset ds(m);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("non-finite entries and tiny samples are rejected") {
  DenseMatrix m(2, 2);
  m << 1, 2, 3, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Dataset{m}, SpecError);
  CHECK_THROWS_AS(Dataset{DenseMatrix::Ones(1, 2)}, SpecError);
  DenseMatrix ok(2, 2);
  ok << 1, 2, 3, 4;
  CHECK_THROWS_AS(Dataset(ok, {"a"}), DimensionError);
}

TEST_CASE("center zeroes means and is idempotent") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Dataset ds = random_dataset(seed);
    const Dataset once = center_and_scale(ds, scale::Center{});
    const Dataset twice = center_and_scale(once, scale::Center{});
    for (std::size_t j = 0; j < ds.cols(); ++j) {
      CHECK(std::abs(once.col_means()[j]) < 1e-12);
      CHECK(std::abs(twice.col_means()[j] - once.col_means()[j]) < 1e-12);
      CHECK(once.col_stds()[j] == doctest::Approx(ds.col_stds()[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("standardize gives unit population std") {
  const Dataset st = center_and_scale(random_dataset(3), scale::Standardize{});
  for (Eigen::Index j = 0; j < st.samples().cols(); ++j) {
    CHECK(std::abs(population_std(st.samples(), j) - 1.0) < 1e-10);
    CHECK(std::abs(st.col_stds()[static_cast<std::size_t>(j)] - 1.0) < 1e-10);
  }
}

TEST_CASE("rescale by ones is the identity and by 2 doubles one std") {
  const Dataset ds = random_dataset(4);
  const Dataset same = center_and_scale(ds, scale::Rescale{{1, 1, 1, 1}});
  CHECK(same.samples() == ds.samples());

  const Dataset doubled = center_and_scale(ds, scale::Rescale{{1, 1, 1, 2}});
  for (std::size_t j = 0; j < 3; ++j) CHECK(doubled.col_stds()[j] == ds.col_stds()[j]);
  CHECK(doubled.col_stds()[3] == doctest::Approx(2 * ds.col_stds()[3]).epsilon(1e-14));
}

TEST_CASE("rescale validates its factors") {
  const Dataset ds = random_dataset(5);
  CHECK_THROWS(center_and_scale(ds, scale::Rescale{{1, 1, 0, 1}}));
  CHECK_THROWS(center_and_scale(ds, scale::Rescale{{1, 1}}));
}

TEST_CASE("standardization is invariant to prior rescaling") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Dataset ds = random_dataset(100 + trial);
    std::vector<double> f(ds.cols());
    for (auto& v : f) v = std::exp(rng.uniform(-4.0, 4.0));
    const Dataset a = center_and_scale(ds, scale::Standardize{});
    const Dataset b = center_and_scale(center_and_scale(ds, scale::Rescale{f}), scale::Standardize{});
    CHECK((a.samples() - b.samples()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("scale mode parsing") {
  CHECK(std::holds_alternative<scale::Center>(parse_scale_mode("center")));
  CHECK(std::holds_alternative<scale::Standardize>(parse_scale_mode("standardize")));
  CHECK(std::holds_alternative<scale::None>(parse_scale_mode("none")));
  CHECK_THROWS_AS(parse_scale_mode("zscore"), SpecError);
  CHECK(to_string(parse_scale_mode("standardize")) == "standardize");
}

TEST_CASE("csv parse with header") {
  const CsvTable t = parse_csv("a,b\n1,2\n3,4\n5,6\n");
  CHECK(t.header == std::vector<std::string>{"a", "b"});
  REQUIRE(t.values.rows() == 3);
  REQUIRE(t.values.cols() == 2);
  CHECK(t.values(2, 1) == 6.0);
}

TEST_CASE("csv without header, quoted header, CRLF") {
  const CsvTable plain = parse_csv("1,2\n3,4\n");
  CHECK(plain.header.empty());
  CHECK(plain.values.rows() == 2);
  const CsvTable quoted = parse_csv("\"x, one\",y\r\n1.5,-2e3\r\n2,3\r\n");
  CHECK(quoted.header[0] == "x, one");
  CHECK(quoted.values(0, 1) == -2000.0);
}

TEST_CASE("csv errors carry the location") {
  try {
    parse_csv("a,b\n1,2\n3,x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 2);
  }
  try {
    parse_csv("a,b\n1,2\n3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_csv("a,b\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("1,nan\n2,3\n"), ParseError);
}

TEST_CASE("read_csv enforces n >= 2 and d >= 2") {
  const auto dir = testing::scratch_dir("csv-shape");
  std::ofstream(dir / "one_col.csv") << "a\n1\n2\n";
  std::ofstream(dir / "one_row.csv") << "a,b\n1,2\n";
  std::ofstream(dir / "ok.csv") << "a,b\n1,2\n3,4\n5,6\n";
  CHECK_THROWS_AS(read_csv(dir / "one_col.csv"), ParseError);
  CHECK_THROWS_AS(read_csv(dir / "one_row.csv"), ParseError);
  const Dataset ds = read_csv(dir / "ok.csv");
  CHECK(ds.rows() == 3);
  CHECK(ds.cols() == 2);
  CHECK(ds.names() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("csv round trip is exact") {
  const auto dir = testing::scratch_dir("csv-roundtrip");
  Rng rng(7);
  DenseMatrix m = testing::random_matrix(rng, 25, 3, -1e3, 1e3);
  m(0, 0) = 0.1;
  m(1, 1) = 1e-300;
  m(2, 2) = -123456789.123456789;
  m(3, 0) = std::nextafter(1.0, 2.0);
  const Dataset ds(m, {"p", "q", "r"});
  write_csv(ds, dir / "d.csv");
  const Dataset back = read_csv(dir / "d.csv");
  CHECK(back.samples() == ds.samples());
  CHECK(back.names() == ds.names());
}

TEST_CASE("format_double is shortest round trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-0.0) == "0");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("weighted graph json uses row = source") {
  DenseMatrix w = DenseMatrix::Zero(2, 2);
  w(0, 1) = 1.5;
  const WeightedGraph g(w, {"a", "b"});
  const auto j = to_json(g);
  CHECK(j["weights"][0][1] == 1.5);
  CHECK(j["names"][1] == "b");
  const WeightedGraph back = weighted_graph_from_json(j);
  CHECK(back.weights == w);
  CHECK_THROWS_AS(WeightedGraph(DenseMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("binary dag validates and orders") {
  AdjacencyMatrix a = AdjacencyMatrix::Zero(3, 3);
  a(2, 0) = true;
  a(0, 1) = true;
  const BinaryDag g(a);
  const auto& order = g.topological_order();
  auto pos = [&](std::size_t v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
  CHECK(pos(2) < pos(0));
  CHECK(pos(0) < pos(1));
  CHECK(g.in_degree(1) == 1);
  CHECK(g.out_degree(2) == 1);

  a(1, 2) = true;
  CHECK_THROWS_AS(BinaryDag{a}, CycleError);
  AdjacencyMatrix loop = AdjacencyMatrix::Zero(2, 2);
  loop(1, 1) = true;
  CHECK_THROWS_AS(BinaryDag{loop}, CycleError);

  const auto j = to_json(g, {"a", "b", "c"});
  CHECK(binary_dag_from_json(j) == g);
}
