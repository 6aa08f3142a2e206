#pragma once

#include <string>
#include <vector>

#include "surfiso/algebra/groebner.hpp"
#include "surfiso/algebra/poly.hpp"

namespace surfiso {

/// One component (or union of components) of a constructible set {eqs = 0, ineqs != 0}.
/// Assigned variables are expressed in the free ones; `equations` is empty for explicit branches.
struct Branch {
  Ring ring;
  std::vector<std::pair<int, Poly>> assignments;  // sorted by variable index
  std::vector<Poly> equations;                    // remaining constraints (a Groebner basis when nonempty)
  std::vector<Poly> inequations;

  bool is_explicit() const { return equations.empty(); }
  bool assigned(int var) const;
  std::vector<int> free_variables() const;  // unassigned variables, ascending
  /// Substitute the assignments into p.
  Poly apply(const Poly& p) const;
  /// Text like "c1 = 0, c3 = 2*c7".
  std::string to_string() const;
};

struct SolveOptions {
  GroundField field;
  GroebnerLimits limits;
  std::size_t max_branches = 20000;
};

/// Decomposes {eqs = 0, ineqs != 0} into disjoint branches. Contradictory branches are dropped.
std::vector<Branch> solve(const std::vector<Poly>& eqs, const std::vector<Poly>& ineqs,
                          const SolveOptions& options = {});

/// Replaces variable v by e in p.
Poly substitute_var(const Poly& p, int v, const Poly& e);

}  // namespace surfiso
