#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surfiso/basepoints.hpp"

namespace surfiso {

/// A map together with its base points and class. Maps produced by the reducers keep the tree
/// of the map they came from, so all classes of one reduction chain share one lattice.
struct ClassifiedMap {
  Parametrization map;
  BasePointTree tree;
  DivisorClass cls;        // [f]
  DivisorClass canonical;  // kappa_f

  int dim() const { return static_cast<int>(map.components.size()) - 1; }
  Degree cdeg() const { return map.degree(); }
  Domain domain() const { return map.domain; }
};

/// Computes base points and class. `field` may declare an algebraic generator.
ClassifiedMap classify_map(const Parametrization& f, const GroundField& field = {});

/// Dimension of the space of forms of class c (0 when the degree part is not positive).
int h0(const ClassifiedMap& cm, const DivisorClass& c);

struct MovingPart {
  DivisorClass cls;     // <c> = [Psi_c]
  Parametrization psi;  // basis of the moving part
  Poly fixed;           // the removed common factor (constant when trivial)
};

/// Moving part of c; throws ContractError when h0(c) = 0.
MovingPart moving_part(const ClassifiedMap& cm, const DivisorClass& c);

struct PTriple {
  int h0 = 0, self = 0, gcd = 0;
  friend bool operator==(const PTriple& a, const PTriple& b) {
    return a.h0 == b.h0 && a.self == b.self && a.gcd == b.gcd;
  }
  friend bool operator!=(const PTriple& a, const PTriple& b) { return !(a == b); }
  std::string to_string() const;
};

PTriple p_invariant(const ClassifiedMap& cm);

bool condition_c0(const ClassifiedMap& cm);
bool condition_c1(const ClassifiedMap& cm);
bool condition_c2(const ClassifiedMap& cm);
ClassifiedMap reduce_r0(const ClassifiedMap& cm);
ClassifiedMap reduce_r1(const ClassifiedMap& cm);
ClassifiedMap reduce_r2(const ClassifiedMap& cm);

enum class BaseCase { B1, B2, B3, B4, B5, None };
std::string to_string(BaseCase b);

/// Requires c0 = c1 = c2 = 0; checks B1..B5 in order.
BaseCase classify_base_case(const ClassifiedMap& cm);

struct LogEntry {
  std::string step;  // "input", "r0", "r1", "r2"
  std::string side;  // "f" or "g"
  DivisorClass cls;
  PTriple p;
  std::array<bool, 3> flags{};  // c0, c1, c2 of the map after the step
  int fixed_degree = 0;         // degree of the fixed part removed by the step (P2: total degree)
};

struct PipelineResult {
  bool empty = false;     // true when P(f,g) is shown to be empty
  std::string reason;     // why it is empty
  std::optional<ClassifiedMap> f, g;  // reduced maps
  BaseCase tag = BaseCase::None;
  std::vector<LogEntry> log;
};

/// The reduction loop: p gate, r0, r1 loop, r2, p gate, classification.
PipelineResult reduce_pipeline(const ClassifiedMap& f, const ClassifiedMap& g);

}  // namespace surfiso
