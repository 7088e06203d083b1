#include "fme/surface.hpp"

#include "fme/error.hpp"

#include <algorithm>

namespace fme
{

int64_t CostGrid3x3::min_cost() const
{
  return *std::min_element( costs.begin(), costs.end() );
}

CostGrid3x3 CostGrid3x3::shifted() const
{
  const int64_t m = min_cost();
  CostGrid3x3 out = *this;
  for( auto& c : out.costs )
  {
    c -= m;
  }
  return out;
}

SurfaceParams fit_surface( const CostGrid3x3& grid )
{
  // (X^T X)^-1 X^T is constant for the 3x3 design; the rows reduce to these integer sums.
  int64_t sum = 0, sum_x2 = 0, sum_y2 = 0, sum_xy = 0, sum_x = 0, sum_y = 0;
  for( int y = -1; y <= 1; y++ )
  {
    for( int x = -1; x <= 1; x++ )
    {
      const int64_t c = grid.at( x, y );
      sum += c;
      sum_x2 += c * x * x;
      sum_y2 += c * y * y;
      sum_xy += c * x * y;
      sum_x += c * x;
      sum_y += c * y;
    }
  }

  SurfaceParams p;
  p.p1 = 3 * sum_x2 - 2 * sum;
  p.p2 = 3 * sum_y2 - 2 * sum;
  p.p3 = 3 * sum_xy;
  p.p4 = 2 * sum_x;
  p.p5 = 2 * sum_y;
  return p;
}

Extremum extremum( const SurfaceParams& p )
{
  const Wide p1 = p.p1, p2 = p.p2, p3 = p.p3, p4 = p.p4, p5 = p.p5;
  Extremum e;
  e.den   = p3 * p3 - 16 * p1 * p2;
  e.num_x = 4 * p2 * p4 - p3 * p5;
  e.num_y = 4 * p1 * p5 - p3 * p4;
  return e;
}

bool is_strict_minimum( const SurfaceParams& p, const Extremum& e )
{
  return e.den < 0 && p.p1 > 0 && p.p2 > 0;
}

int round_quarter_divfree( Wide num, Wide den, int max_quarter )
{
  FME_CHECK( den != 0, Contract, "round_quarter_divfree called with a zero denominator" );
  FME_CHECK( max_quarter >= 0 && max_quarter <= 3, InvalidArgument, "quarter clamp must lie in [0, 3]" );

  if( den < 0 )
  {
    num = -num;
    den = -den;
  }
  const bool negative = num < 0;
  const Wide num8     = 8 * ( negative ? -num : num );

  // |k| advances past each odd-eighth threshold only when strictly exceeded
  int k = 0;
  if( num8 > den )
  {
    k++;
  }
  if( num8 > 3 * den )
  {
    k++;
  }
  if( num8 > 5 * den )
  {
    k++;
  }
  if( num8 > 7 * den )
  {
    k++;
  }

  k = std::min( k, max_quarter );
  return negative ? -k : k;
}

QuarterPelOffset fractional_refine( const CostGrid3x3& grid, const RefineOptions& opts )
{
  for( int64_t c : grid.costs )
  {
    FME_CHECK( c >= 0, Contract, "cost grid entries must be non-negative" );
  }

  const SurfaceParams p = fit_surface( opts.shift_costs ? grid.shifted() : grid );
  const Extremum e      = extremum( p );
  if( !is_strict_minimum( p, e ) )
  {
    return {};
  }
  return { round_quarter_divfree( e.num_x, e.den, opts.max_quarter ),
           round_quarter_divfree( e.num_y, e.den, opts.max_quarter ) };
}

}  // namespace fme
