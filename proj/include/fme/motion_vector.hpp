#pragma once

#include <compare>

namespace fme
{

/// Motion vector in quarter-pel units. Integer-pel vectors have both components divisible by 4.
struct MotionVector
{
  int x = 0;
  int y = 0;

  constexpr bool is_integer_pel() const { return ( x & 3 ) == 0 && ( y & 3 ) == 0; }

  constexpr MotionVector operator+( const MotionVector& o ) const { return { x + o.x, y + o.y }; }
  constexpr MotionVector operator-( const MotionVector& o ) const { return { x - o.x, y - o.y }; }
  constexpr MotionVector operator-() const { return { -x, -y }; }

  constexpr bool operator==( const MotionVector& ) const = default;

  static constexpr MotionVector from_pels( int px, int py ) { return { px * 4, py * 4 }; }
};

// Integer part (floor) and quarter fraction of one component.
constexpr int mv_int_part( int q ) { return q >> 2; }
constexpr int mv_frac_part( int q ) { return q & 3; }

constexpr int iabs( int v ) { return v < 0 ? -v : v; }

constexpr int l1_norm( const MotionVector& mv ) { return iabs( mv.x ) + iabs( mv.y ); }

constexpr int chebyshev( const MotionVector& a, const MotionVector& b )
{
  const int dx = iabs( a.x - b.x );
  const int dy = iabs( a.y - b.y );
  return dx > dy ? dx : dy;
}

/// Deterministic candidate order: smaller L1 norm first, then smaller y, then smaller x.
constexpr bool tie_break_less( const MotionVector& a, const MotionVector& b )
{
  const int na = l1_norm( a ), nb = l1_norm( b );
  if( na != nb )
  {
    return na < nb;
  }
  if( a.y != b.y )
  {
    return a.y < b.y;
  }
  return a.x < b.x;
}

}  // namespace fme
