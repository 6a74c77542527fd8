#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbu/real_set.hpp"
#include "hbu/spectral.hpp"

namespace hbu::suite {

struct GeneratorCase {
  std::string name;
  std::vector<opgroup::JordanBlockSpec> spec;
  std::uint64_t seed;
};

/// Twenty Jordan structures, dims 1..8, indices 1..3.
const std::vector<GeneratorCase>& generator_cases();
opgroup::MatrixGenerator make_generator(const GeneratorCase& c);

/// The F sets of the operator suite, as literals.
const std::vector<std::string>& f_literals();

/// Modal coordinates of the membership vectors: standard basis, pairwise
/// sums and 20 seeded dense vectors.
std::vector<opgroup::CVector> modal_vector_suite(int dim, std::uint64_t seed);

/// Smallest n with ranges_intersection(G, F, n) = X(F) predicted by the
/// growth degree a: floor(a) + 2.
int ranges_exponent(int a);

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct RunOptions {
  int workers = 1;
  std::uint64_t seed = 20240601;
  /// Extra generators joined to the operator sweeps.
  std::vector<opgroup::MatrixGenerator> extra;
};

Criterion resolvent_identities_suite(const RunOptions& opt);   // 1
Criterion d1_equivalence(const RunOptions& opt);               // 2
Criterion d2_necessity(const RunOptions& opt);                 // 3
Criterion ranges_theorem(const RunOptions& opt);               // 4
Criterion poisson_identities(const RunOptions& opt);           // 5
Criterion carleman_transform(const RunOptions& opt);           // 6
Criterion shapiro_example(const RunOptions& opt);              // 7
Criterion halfplane_construction(const RunOptions& opt);       // 8
Criterion domar_suite(const RunOptions& opt);                  // 9
Criterion carleman_sector(const RunOptions& opt);              // 10
Criterion geometry_suite(const RunOptions& opt);               // 11

/// Criterion ids of a named bundle: function-theory, operator, potential
/// or all. Throws ParseError for other names.
std::vector<int> bundle(std::string_view name);
Criterion run_criterion(int id, const RunOptions& opt);

/// HBU_WORKERS, or the hardware concurrency when unset.
int workers_from_env();

/// Runs body(i) for i in [0, n) on `workers` threads. Exceptions are
/// rethrown on the calling thread (the first by index).
void parallel_for(int n, int workers, const std::function<void(int)>& body);

}  // namespace hbu::suite
