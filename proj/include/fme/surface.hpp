#pragma once

#include <array>
#include <cstdint>

namespace fme
{

__extension__ typedef __int128 Wide;

/// Nine R-D costs around the best integer MV, indexed by offset (x, y) in {-1, 0, 1}^2.
struct CostGrid3x3
{
  std::array<int64_t, 9> costs{};

  static constexpr int index( int x, int y ) { return ( y + 1 ) * 3 + ( x + 1 ); }

  int64_t at( int x, int y ) const { return costs[index( x, y )]; }
  int64_t& at( int x, int y ) { return costs[index( x, y )]; }

  int64_t min_cost() const;
  /// All costs minus the smallest one.
  CostGrid3x3 shifted() const;

  bool operator==( const CostGrid3x3& ) const = default;
};

/**
  Least-squares fit of C(x,y) = P1 x^2 + P2 y^2 + P3 xy + P4 x + P5 y + P6 over the 3x3 grid,
  scaled so every coefficient is an exact integer:

      p1 = 6 P1, p2 = 6 P2, p3 = 12 P3, p4 = 12 P4, p5 = 12 P5

  P6 only moves the surface vertically and is not computed.
*/
struct SurfaceParams
{
  int64_t p1 = 0, p2 = 0, p3 = 0, p4 = 0, p5 = 0;

  bool operator==( const SurfaceParams& ) const = default;
};

/// Stationary point of the fitted surface as num / den per axis (den = 144 * (P3^2 - 4 P1 P2)).
struct Extremum
{
  Wide num_x = 0;
  Wide num_y = 0;
  Wide den   = 0;
};

struct QuarterPelOffset
{
  int qx = 0;
  int qy = 0;

  bool operator==( const QuarterPelOffset& ) const = default;
};

struct RefineOptions
{
  /// Largest |offset| in quarter pels; 3 covers the whole pel, 2 mimics a 3x/5x-only comparator.
  int max_quarter = 3;
  /// Subtract the minimum cost before fitting.
  bool shift_costs = true;
};

SurfaceParams fit_surface( const CostGrid3x3& grid );

Extremum extremum( const SurfaceParams& p );

/// Strict local minimum test: den < 0, p1 > 0, p2 > 0.
bool is_strict_minimum( const SurfaceParams& p, const Extremum& e );

/**
  Nearest integer to 4 * num / den, ties toward zero, clamped to [-max_quarter, max_quarter].
  Uses only comparisons of 8|num| against the odd multiples den, 3den, 5den, 7den.
  den == 0 is a contract violation.
*/
int round_quarter_divfree( Wide num, Wide den, int max_quarter = 3 );

/// Fit, locate the minimum and quantize it. Non-convex surfaces fall back to (0, 0).
QuarterPelOffset fractional_refine( const CostGrid3x3& grid, const RefineOptions& opts = {} );

}  // namespace fme
