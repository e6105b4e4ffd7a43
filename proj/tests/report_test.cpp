#include <doctest.h>

#include "k3ns/report.hpp"

using namespace k3ns;

TEST_CASE("format selection") {
  CHECK(output_format_from_string("md") == OutputFormat::kMarkdown);
  CHECK(output_format_from_string("json") == OutputFormat::kJson);
  CHECK(output_format_from_string("csv") == OutputFormat::kCsv);
  CHECK_THROWS_AS(output_format_from_string("yaml"), domain_error);
}

TEST_CASE("lattice serialization schema") {
  json j = lattice_json(standard_lattice("U"));
  CHECK(j["rank"] == 2);
  CHECK(j["label"] == "U");
  CHECK(j["gram"] == json::array({0, 1, 1, 0}));
}

TEST_CASE("cyclotomic serialization") {
  Cyclotomic x(5, {ratio(1, 2), Rat(0), Rat(-3), Rat(0)});
  json j = cyclotomic_json(x);
  CHECK(j["p"] == 5);
  CHECK(j["coeffs"] == json::array({"1/2", "0", "-3", "0"}));
}

TEST_CASE("linear and affine rendering") {
  CHECK(linear_in_alpha_str(LinearInAlpha{Rat(3), Rat(2)}) == "2a+3");
  CHECK(linear_in_alpha_str(LinearInAlpha{Rat(-2), Rat(2)}) == "2a-2");
  CHECK(linear_in_alpha_str(LinearInAlpha{Rat(0), Rat(1)}) == "a");
  CHECK(linear_in_alpha_str(LinearInAlpha{Rat(0), Rat(0)}) == "0");
  CHECK(alpha_of_r_str(AffineInR{Rat(-10), Rat(1)}) == "r-10");
  CHECK(alpha_of_r_str(AffineInR{ratio(1, 6), ratio(1, 12)}) == "(r+2)/12");
}

TEST_CASE("markdown alignment and csv quoting") {
  std::string md = markdown_table({{"a", "bb"}, {"ccc", "d"}});
  CHECK(md == "| a   | bb |\n|-----|----|\n| ccc | d  |\n");
  std::string csv = csv_table({{"x,y", "pla\"in"}, {"1", "2"}});
  CHECK(csv == "\"x,y\",\"pla\"\"in\"\n1,2\n");
}

TEST_CASE("json output is key-sorted and reproducible") {
  auto rows = classification_table(7);
  std::string a = classification_table_json(rows).dump(2);
  std::string b = classification_table_json(classification_table(7)).dump(2);
  CHECK(a == b);
  json parsed = json::parse(a);
  CHECK(parsed.size() == 5);
  CHECK(parsed[0]["S"] == "U+K7");
}
