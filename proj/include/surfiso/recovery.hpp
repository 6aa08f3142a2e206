#pragma once

#include <string>
#include <vector>

#include "surfiso/algebra/solver.hpp"
#include "surfiso/reparam.hpp"

namespace surfiso {

struct RecoveryOptions {
  SolveOptions solve;
};

/// Parameter vectors for which g o member satisfies the index set constraints.
struct SolutionSet {
  std::vector<Branch> stage1;    // base point conditions
  std::vector<Branch> stage2;    // branches whose reduced composition has the component degree of f
  std::vector<Branch> branches;  // final: also M_{g o r_c} . ker M_f = 0
  bool empty() const { return branches.empty(); }
};

/// Constraint stages (i) base points, (ii) component degree after removing the common factor,
/// (iii) M_{g o r_c} . ker M_f = 0, with the normalization branches of the family.
SolutionSet index_set_J(const ClassifiedMap& f, const ClassifiedMap& g, const ReparamFamily& fam,
                        const RecoveryOptions& options = {});

/// Solves further equations and inequations on a branch; the results refine b.
std::vector<Branch> refine_branch(const Branch& b, const std::vector<Poly>& eqs, const std::vector<Poly>& ineqs,
                                  const SolveOptions& options = {});

/// The family used for solving: its unconstrained form when present.
const ReparamFamily& solving_form(const ReparamFamily& fam);

/// g o member restricted to a branch with the common factor removed.
Parametrization reduced_composition(const ClassifiedMap& g, const ReparamFamily& fam, const Branch& b);

struct IsoFamily {
  PolyMatrix U;         // (n+1) x (n+1), entries in the free parameters of `constraints`
  Branch constraints;   // the parameter branch
  std::string provenance;
  PolyMatrix Mh;        // coefficient matrix of the reduced composition on this branch
  ScalarMatrix Mf;      // coefficient matrix of f

  bool is_constant() const;  // no free parameters
  std::string to_string() const;
};

/// Reduces p modulo a branch: substitute assignments, then normal form by the equations.
Poly reduce_modulo(const Branch& b, const Poly& p);

/// U from E_{g o r_c} . E_f^-1 = U (+) 1 on every branch, canonically scaled and deduplicated.
/// Throws ConsistencyError when the block shape fails on a branch.
std::vector<IsoFamily> extract_isomorphisms(const ClassifiedMap& f, const ClassifiedMap& g, const ReparamFamily& fam,
                                            const SolutionSet& sols);

/// Divides by the gcd of the entries and makes the first nonzero entry have leading coefficient 1.
PolyMatrix canonical_scaling(const PolyMatrix& u);

struct VerifyOptions {
  int degree_budget = 4;  // largest degree of implicit forms tried before the matrix identity fallback
};

/// Whether img(U o f) lies in img g modulo the constraints: every implicit form of g of degree
/// up to the budget must vanish on U o f. Without such forms, U . M_f proportional to M_h.
/// The ring of U must contain the coordinates of f.
bool verify_isomorphism(const ClassifiedMap& f, const ClassifiedMap& g, const IsoFamily& iso,
                        const VerifyOptions& options = {});
bool verify_isomorphism(const Parametrization& f, const Parametrization& g, const IsoFamily& iso,
                        const VerifyOptions& options = {});

/// U . M_f proportional to M_h modulo the constraints.
bool matrix_identity_holds(const IsoFamily& iso);

/// Whether some specialization of the family (within its constraints) is a nonzero multiple of t.
bool admits_specialization(const IsoFamily& iso, const ScalarMatrix& t, const SolveOptions& options = {});

/// Full computation for classified inputs: pipeline, base case families, index sets, extraction.
struct IsomorphismReport {
  PipelineResult pipeline;
  std::vector<ReparamFamily> families;
  std::vector<SolutionSet> solutions;  // one per family
  std::vector<IsoFamily> isomorphisms;
  bool unsupported = false;  // base case without a super-set construction
};

IsomorphismReport projective_isomorphisms(const ClassifiedMap& f, const ClassifiedMap& g,
                                          const RecoveryOptions& options = {},
                                          const LineClassOptions& lines = {});

}  // namespace surfiso
