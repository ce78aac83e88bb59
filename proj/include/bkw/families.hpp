#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bkw/poly_core.hpp"

namespace bkw {

/// A built-in family in term form together with a closed-form evaluator
/// transcribed independently from the closed-form formula.
struct FamilySpec {
  ExpSumFamily family;
  std::function<cplx(long n, cplx z)> direct_eval;
  std::string citation;
  /// Smallest n for which the closed form is meaningful.
  long n_min = 1;
};

FamilySpec make_f();
FamilySpec make_g();
FamilySpec make_steele_cycle();
FamilySpec make_independence();
FamilySpec make_screl();
FamilySpec make_domination();

/// Term forms exactly as printed alongside the closed forms. Neither
/// reproduces its closed form; they exist so consistency_check can show it.
FamilySpec make_screl_literal();
FamilySpec make_domination_literal();

/// Names accepted by find_family.
const std::vector<std::string>& builtin_family_names();
std::optional<FamilySpec> find_family(const std::string& name);
std::vector<FamilySpec> all_families();

struct ConsistencyReport {
  bool pass = false;
  double max_rel_deviation = 0.0;
  long worst_n = 0;
  cplx worst_z{};
};

/// Compares expand_at_index against direct_eval at sample_count seeded random
/// points of the disk |z| <= 1.25 for every n in [n_from, n_to].
ConsistencyReport consistency_check(const FamilySpec& spec, long n_from, long n_to, int sample_count = 20,
                                    double tol = 1e-9, unsigned seed = 12345);

}  // namespace bkw
