#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bentmax/boolfun.hpp"
#include "bentmax/field.hpp"

namespace bentmax {

/// Per-function analysis of which components Tr(alpha F(x)) are bent.
struct BentComponentReport {
  int n = 0;
  int k = 0;
  VectorialFun::Kind kind = VectorialFun::Kind::power;
  std::int64_t param = 0;
  std::uint32_t modulus = 0;
  std::vector<Elem> s_f;  // alpha with a non-bent component, sorted; 0 always
  std::uint64_t bent_count = 0;
  bool is_linear = false;      // s_f closed under addition
  bool is_subfield_k = false;  // s_f equals F_{2^k}
  bool is_maximal = false;     // bent_count == 2^n - 2^k
};

/// Walsh-checks every component.  Requires even n.
BentComponentReport bent_components(const Field& field, const VectorialFun& fun,
                                    int threads = 1);

/// Names of the structural clauses the report violates; empty means a clean
/// report.  Clauses: "zero-in-nonbent-set", "nonbent-set-min-size",
/// "nonbent-set-squaring-closure", "linear-space-at-min-size",
/// "subfield-at-min-size" (monomials only).
std::vector<std::string> verify_structure(const Field& field,
                                          const BentComponentReport& report);

/// Reports for every exponent 0 < d < 2^n - 1 (or one per cyclotomic coset
/// with coset_reduce; the non-bent set is invariant on a coset).
std::vector<BentComponentReport> monomial_sweep(const Field& field, int threads = 1,
                                                bool coset_reduce = false);

/// All d whose power map attains the maximal bent-component count
/// 2^n - 2^(n/2), by exhaustive sweep.  Requires even n <= 14.
std::vector<std::uint32_t> open_problem_scan(const Field& field, int threads = 1,
                                             bool coset_reduce = false);

/// All d admitting at least one bent component, by exhaustive sweep (or one
/// d per cyclotomic coset with coset_reduce).
std::vector<std::uint32_t> bent_exponents(const Field& field, int threads = 1,
                                          bool coset_reduce = false);

/// All alpha for which Tr(alpha x^d) is bent, sorted.
std::vector<Elem> bent_alphas(const Field& field, std::int64_t d);

enum class Family { gold, dillon, kasami, leander, cck };

const char* family_name(Family f);

/// Exact side conditions of the named monomial bent family.
bool family_predicate(const Field& field, Family family, std::int64_t d, Elem alpha);

struct FamilyMember {
  Family family;
  std::uint32_t d;
  Elem alpha;
};

/// Every (d, alpha) the family admits at this field size, sorted by (d,
/// alpha).  Structurally impossible degrees yield an empty list.
std::vector<FamilyMember> family_enumerate(const Field& field, Family family);

}  // namespace bentmax
