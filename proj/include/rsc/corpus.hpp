#pragma once

#include "rsc/complex.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rsc {
namespace corpus {

/// Full s-simplex on {1..s+1}.
Complex simplex(int s);

/// Boundary of the s-simplex: all faces of dimension <= s-1 on {1..s+1}.
Complex boundary_simplex(int s);

/// 2-complex on {1..t+1}: complete 1-skeleton plus every triple inside
/// {1..t} as a 2-face.
Complex s_t(int t);

/// Minimal 7-vertex triangulation of the torus (f = (7, 21, 14)).
Complex torus7();

/// Minimal 6-vertex triangulation of the real projective plane
/// (f = (6, 15, 10)).
Complex rp2_6();

/// rp2_6 with a 5-triangle disc coned onto the noncontractible cycle
/// (1,2,3,4,6); f = (7, 20, 15), L = -5, chi = 2.
Complex rp2_disc();

/// Triangulated disc with 11 vertices whose 4 internal vertices all lie in
/// the proper subdisc induced on {1..10}; unbalanced.
Complex unbalanced_disc();

/// Lookup by name: "simplex:<s>", "boundary:<s>", "st:<t>", "torus7",
/// "rp2-6", "disc-unbalanced". Throws DomainError for unknown names.
Complex by_name(const std::string& name);

/// The named complexes bundled for docs and tests.
std::vector<std::pair<std::string, Complex>> bundled();

} // namespace corpus
} // namespace rsc
