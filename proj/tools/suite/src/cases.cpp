#include <cmath>
#include <random>

#include "hbu_suite/suite.hpp"

namespace hbu::suite {

const std::vector<GeneratorCase>& generator_cases() {
  static const std::vector<GeneratorCase> cases = {
      {"scalar0", {{0, 1}}, 1},
      {"pair", {{1, 1}, {-1, 1}}, 2},
      {"three", {{0, 1}, {1.5, 1}, {3, 1}}, 3},
      {"ladder5", {{-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}}, 4},
      {"semisimple-repeat", {{0.5, 1}, {0.5, 1}, {2, 1}}, 5},
      {"diag8", {{-3, 1}, {1, 1}, {2, 1}, {3, 1}, {-1, 1}, {0, 1}, {1.5, 1}, {-2, 1}}, 6},
      {"pair-off", {{2, 1}, {-0.5, 1}}, 7},
      {"jordan2", {{0, 2}}, 8},
      {"jordan2+1", {{0, 2}, {1.5, 1}}, 9},
      {"two-jordan2", {{1, 2}, {-1, 2}}, 10},
      {"jordan2-mixed", {{-2, 2}, {0, 1}, {2, 1}, {3, 1}}, 11},
      {"jordan2-shared", {{1.5, 2}, {1.5, 1}, {-1, 1}}, 12},
      {"jordan2x3", {{0, 2}, {2, 2}, {-2, 2}, {3, 1}}, 13},
      {"jordan3", {{0, 3}}, 14},
      {"jordan3+1", {{1, 3}, {-1, 1}}, 15},
      {"jordan3-2-1", {{-2, 3}, {0, 2}, {3, 1}}, 16},
      {"two-jordan3", {{0, 3}, {2, 3}}, 17},
      {"jordan3-shared", {{1.5, 3}, {1.5, 2}, {-1, 2}}, 18},
      {"jordan3-ladder", {{-1, 3}, {-3, 1}, {1, 1}, {2, 1}, {3, 1}}, 19},
      {"mixed-root", {{0, 1}, {0, 2}, {2, 3}, {-2, 1}}, 20},
  };
  return cases;
}

opgroup::MatrixGenerator make_generator(const GeneratorCase& c) {
  return opgroup::MatrixGenerator::from_jordan(c.spec, c.seed);
}

const std::vector<std::string>& f_literals() {
  static const std::vector<std::string> sets = {
      "[1,2]",          "[-inf,0]",     "[-3,-1]u[1,2]", "empty",
      "[-0.5,0.5]",     "[0,inf]",      "[-2.5,-1.5]u[0.5,1.5]u[3,inf]",
      "[-inf,inf]",
  };
  return sets;
}

std::vector<opgroup::CVector> modal_vector_suite(int dim, std::uint64_t seed) {
  std::vector<opgroup::CVector> out;
  for (int i = 0; i < dim; ++i) out.push_back(opgroup::CVector::Unit(dim, i));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) out.push_back(opgroup::CVector::Unit(dim, i) + opgroup::CVector::Unit(dim, j));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  for (int k = 0; k < 20; ++k) {
    opgroup::CVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = {g(rng), g(rng)};
    out.push_back(v);
  }
  return out;
}

int ranges_exponent(int a) { return a + 2; }

}  // namespace hbu::suite
