#pragma once

#include "defkit/groebner.hpp"

namespace defkit {

/// Ring with extra variables appended in front (for elimination) or at the end.
RingPtr extend_ring_front(const RingPtr& ring, const std::vector<std::string>& fresh);
RingPtr extend_ring_back(const RingPtr& ring, const std::vector<std::string>& fresh);

/// Drop the first k variables (polynomials must not involve them).
RingPtr drop_front(const RingPtr& ring, std::size_t k);
Polynomial restrict_poly(const Polynomial& p, const RingPtr& target);

/// Generators of I not involving the first k ring variables, from a basis
/// under elimination(k). Result lives in the ring without those variables.
Ideal eliminate_front(const Ideal& ideal, std::size_t k,
                      const RunConfig& cfg = RunConfig::defaults());

Ideal intersect(const Ideal& a, const Ideal& b, const RunConfig& cfg = RunConfig::defaults());

/// Ideal quotient I : (g).
Ideal quotient(const Ideal& ideal, const Polynomial& g,
               const RunConfig& cfg = RunConfig::defaults());

/// Ideal quotient I : J (intersection over the generators of J).
Ideal quotient(const Ideal& ideal, const Ideal& j,
               const RunConfig& cfg = RunConfig::defaults());

/// I : J^infinity by iterated quotients; throws SaturationDidNotStabilize
/// after cfg.max_saturation_iters rounds.
Ideal saturate(const Ideal& ideal, const Ideal& j,
               const RunConfig& cfg = RunConfig::defaults());

/// Reduced degrevlex bases compared element-wise.
bool equal_ideals(const Ideal& a, const Ideal& b, const RunConfig& cfg = RunConfig::defaults());

/// Exact division f / g; throws if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

bool is_unit_ideal(const Ideal& ideal, const RunConfig& cfg = RunConfig::defaults());

/// Does I become the unit ideal after inverting g (Rabinowitsch variable)?
bool unit_after_inverting(const Ideal& ideal, const Polynomial& g,
                          const RunConfig& cfg = RunConfig::defaults());

/// Canonical form: reduced degrevlex basis as an Ideal.
Ideal reduced_generators(const Ideal& ideal, const RunConfig& cfg = RunConfig::defaults());

} // namespace defkit
