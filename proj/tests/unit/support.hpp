#pragma once

#include "mpgeom/cvec.hpp"
#include "mpgeom/exact.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testsupport {

// Rows of whitespace-separated integers/ratios from tests/data, '#' lines skipped.
inline std::vector<std::vector<std::string>> read_rows(const std::string &name) {
  std::ifstream in(std::string(MPGEOM_TEST_DATA) + "/" + name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::vector<std::string> row;
    for (std::string tok; ss >> tok;) row.push_back(tok);
    rows.push_back(std::move(row));
  }
  return rows;
}

// sign * sqrt(num/den) from three fixture columns.
inline mpg::SqrtRational fixture_value(const std::string &s, const std::string &num,
                                       const std::string &den) {
  mpg::SqrtRational v;
  v.sign = std::stoi(s);
  v.radicand = mpg::Rational(mpg::BigInt(num), mpg::BigInt(den));
  return v;
}

inline mpg::SphDirection random_direction(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), ph(0.0, 2 * mpg::pi);
  return {std::acos(u(rng)), ph(rng)};
}

inline mpg::cplx random_complex(std::mt19937_64 &rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng)};
}

} // namespace testsupport
