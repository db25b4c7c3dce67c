#pragma once

#include <optional>
#include <string>
#include <vector>

namespace metdim {

enum class Relation { LessEqual, Equal };

struct LinearTerm {
  int var = 0;
  long long coef = 0;
};

/// sum(coef * var) <relation> rhs, over at most two variables.
struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Relation relation = Relation::LessEqual;
  long long rhs = 0;
};

struct ParityConstraint {
  int var = 0;
  int residue = 0;  // var == residue (mod 2)
};

/// Small integer system: bounded variables, two-variable linear constraints, parities.
struct FeasibilitySystem {
  struct Domain {
    long long lo = 0;
    long long hi = 0;
  };
  std::vector<Domain> domains;
  std::vector<LinearConstraint> constraints;
  std::vector<ParityConstraint> parities;
  bool contradiction = false;  // a variable-free constraint was false

  int add_variable(long long lo, long long hi);
  /// Merges repeated variables and drops zero coefficients; a constraint left with no
  /// variables is evaluated on the spot.
  void add(std::vector<LinearTerm> terms, Relation relation, long long rhs);
  void add_parity(int var, int residue);
  /// coef * var + offset == parity (mod 2).
  void add_affine_parity(int var, long long coef, long long offset, int parity);

  int variable_count() const { return static_cast<int>(domains.size()); }
  bool satisfied_by(const std::vector<long long>& values) const;
  std::string describe() const;
};

struct FeasibilityStats {
  unsigned long long propagations = 0;
  unsigned long long search_nodes = 0;
};

/// Bounds-and-parity propagation to a fixpoint, then backtracking on the variable with
/// the smallest domain. Returns a satisfying assignment or nothing.
std::optional<std::vector<long long>> integer_feasibility(const FeasibilitySystem& system,
                                                          FeasibilityStats* stats = nullptr);

}  // namespace metdim
