// Generators for the explicit tiling families: rigid 2N x 2N x 5l patterns,
// solenoid tilings of 6n x 6n x 8n boxes with prescribed flux pair, and the
// composed 16n cube realizing arbitrary even triple twists.
//
// Layout constants (the staircase offsets of the rigid pattern, the shell
// geometry of the solenoid tubes and the subcube arrangement of the composed
// cube) are documented in docs/solenoid_layout.md; all of them are pinned by
// the generators' asserted postconditions (validity, flip count, twist),
// which the test suite recomputes from scratch.

#pragma once

#include <cstdint>
#include <vector>

#include "slablab/tiling.hpp"
#include "slablab/transform.hpp"

namespace slablab {

// Requested fluxes across the two tube cuts of a solenoid; |u|, |v| <= n^2.
struct FluxPair {
  int u = 0;
  int v = 0;
};

// One annulus (shell) of a solenoid tube: shells are indexed 0..n^2-1, ring
// major (ring 0 innermost), layer pair minor; winding is -1, 0 or +1.
struct AnnulusSpec {
  int index = 0;
  int winding = 0;
};

// Greedy winding distribution: the first |flux| shells wind with sign(flux),
// the rest stay flat.  The windings sum to flux; |flux| <= n^2 required.
std::vector<AnnulusSpec> solenoid_windings(int n, int flux);

// The rigid staircase pattern on a 2N x 2N x 5 box, stacked `layers` times
// (box 2N x 2N x 5*layers).  Requires N >= 3, layers >= 1.  For every N >= 3
// the result admits zero slab flips and has z-twist +2(N-1)(N-2) for the
// canonical (red-green) pair.
Tiling rigid_pattern(int N, int layers);

// Solenoid tiling of the 6n x 6n x 8n box: two interlocked square-ring tubes
// of n^2 shells each, wound to carry the requested fluxes, embedded in
// horizontal slabs.  Requires n >= 1 and |flux.u|, |flux.v| <= n^2.
// Postcondition: triple_twist == (0, 0, 2 * u * v * kSolenoidSign).
Tiling solenoid(int n, FluxPair flux);

// Global sign of the solenoid family, fixed once by the n=1 computation.
inline constexpr int kSolenoidSign = +1;

// Composed cube [0,16n)^3 realizing triple twist t (after the fixed per-axis
// sign normalization kComposedSign): the cube splits into eight 8n-subcubes;
// six hold padded solenoids (two per axis, rotated so their twist lands on
// that axis), two hold only horizontal slabs.  Requires every component of t
// even and within [-2n^4, 2n^4].
Tiling composed(int n, const TripleTwist& t);

// Per-axis orientation signs of the composed cube, fixed once at n=1.
extern const int kComposedSign[3];

}  // namespace slablab
