#pragma once

#include <cstddef>
#include <vector>

#include "surfiso/algebra/poly.hpp"

namespace surfiso {

struct GroebnerLimits {
  std::size_t max_pairs = 200000;  // abort threshold on processed S-pairs
};

/// Raised when a Groebner computation exceeds its limits.
class GroebnerAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis (monic, sorted by leading monomial ascending) in the ring order of the inputs.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerLimits& limits = {});
/// Fully reduced normal form of p with respect to `basis` (any generating set; canonical for a Groebner basis).
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);
bool is_unit_ideal(const std::vector<Poly>& gb);
/// Reduced Groebner basis of I : h^infinity, computed with an auxiliary Rabinowitsch variable.
std::vector<Poly> saturate(const std::vector<Poly>& gens, const Poly& h, const GroebnerLimits& limits = {});

}  // namespace surfiso
