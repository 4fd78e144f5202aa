#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surface.hpp"

namespace fibra {

// Order of the class of (alpha(P)) - (P) in the Jacobian of P's fibre.
struct OrderResult {
  enum class Kind { Finite, Infinite, Undefined };

  int axis = 1;
  bool smooth = false;
  Kind kind = Kind::Undefined;
  std::uint64_t order = 0;
  bool fixed_point = false;
  // Reduced orders behind the verdict (empty for fixed points and singular fibres).
  std::vector<Reduction> reductions;

  bool finite() const { return kind == Kind::Finite; }
  bool infinite() const { return kind == Kind::Infinite; }
};

const char* to_string(OrderResult::Kind kind);

OrderResult class_order(const Surface222& S, int axis, const SurfacePoint& P);

// Condition Xi: no order above the cutoff. Precondition error on singular fibres.
bool satisfies_xi(const Surface222& S, int axis, const SurfacePoint& P, std::uint64_t cutoff);
// nullopt on singular fibres.
std::optional<bool> in_T_up_to(const Surface222& S, int axis, const SurfacePoint& P, std::uint64_t cutoff);

enum class Tri { False, True, Undefined };
const char* to_string(Tri t);

struct ZMembership {
  Tri value = Tri::Undefined;
  // Nonsingular point of a singular fibre reported as outside Z_i.
  bool caveat = false;
  std::string reason;
  OrderResult order;
};

ZMembership in_Z(const Surface222& S, int axis, const SurfacePoint& P, std::uint64_t cutoff,
                 bool strict_closure = false);

struct EmitOptions {
  unsigned r_max = 5;
  std::size_t monomial_budget = 5000;
};

inline constexpr unsigned kHardRMax = 15;

// Equations in the affine chart of (x, t); y does not occur because P and
// alpha(P) share x and t.
struct ExclusionEquations {
  int axis = 1;
  unsigned r = 1;
  std::vector<Polynomial> generators;
  std::vector<std::string> degeneracy_loci;
  std::vector<std::string> warnings;
};

ExclusionEquations emit_T_equations(const Surface222& S, int axis, unsigned r, const EmitOptions& options = {});
bool generators_vanish(const ExclusionEquations& eq, const SurfacePoint& P);

// A Q-irreducible component of a fibre: the bihomogeneous factor of the fibre
// form in (s, y) with bidegree (s_degree, y_degree), stored affinely; missing
// powers of s1 or y1 are implied by the bidegree.
struct FiberComponent {
  int axis = 1;
  P1Point base;
  Polynomial factor{3};  // in s (variable 0) and y (variable 1)
  int s_degree = 0;
  int y_degree = 0;
  bool whole_fiber = false;

  bool horizontal() const { return y_degree >= 1; }
  bool contains(const SurfacePoint& P) const;
};

std::string describe(const FiberComponent& C);

std::vector<FiberComponent> fiber_components(const Surface222& S, int axis, const P1Point& base);
std::vector<FiberComponent> components_through(const Surface222& S, int axis, const SurfacePoint& P);

struct WitnessOptions {
  unsigned orbit_steps = 12;
  unsigned height = 12;
  unsigned max_candidates = 96;
};

struct ComponentCertificate {
  enum class Status { Certified, Vertical, Inconclusive };

  FiberComponent component;
  Status status = Status::Inconclusive;
  std::optional<SurfacePoint> witness;
  OrderResult witness_order;
  unsigned candidates_tested = 0;
  std::string reason;
};

const char* to_string(ComponentCertificate::Status s);

// Searches the component of the from_axis fibre through P for a point of
// infinite class order on a smooth fibre of the other axis. Such a point lies
// in no T of the other axis, so the component is not contained in any of them.
ComponentCertificate component_certificate(const Surface222& S, const SurfacePoint& P, int from_axis,
                                           const WitnessOptions& options = {});
ComponentCertificate certify_component(const Surface222& S, const FiberComponent& C, const SurfacePoint& start,
                                       const WitnessOptions& options = {});

// The self-check for a stored witness.
bool verify_witness(const Surface222& S, const FiberComponent& C, const SurfacePoint& W);

}  // namespace fibra
