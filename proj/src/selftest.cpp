#include "fme/selftest.hpp"

#include "fme/distortion.hpp"
#include "fme/oracle.hpp"
#include "fme/rate_cost.hpp"
#include "fme/schedule.hpp"
#include "fme/surface.hpp"

#include <cmath>
#include <random>

namespace fme
{

namespace
{

CostGrid3x3 random_grid( std::mt19937_64& rng )
{
  std::uniform_int_distribution<int64_t> dist( 0, 1 << 20 );
  CostGrid3x3 g;
  for( auto& c : g.costs )
  {
    c = dist( rng );
  }
  return g;
}

CostGrid3x3 mirror_x( const CostGrid3x3& g )
{
  CostGrid3x3 out;
  for( int y = -1; y <= 1; y++ )
    for( int x = -1; x <= 1; x++ )
      out.at( x, y ) = g.at( -x, y );
  return out;
}

CostGrid3x3 transpose( const CostGrid3x3& g )
{
  CostGrid3x3 out;
  for( int y = -1; y <= 1; y++ )
    for( int x = -1; x <= 1; x++ )
      out.at( x, y ) = g.at( y, x );
  return out;
}

CheckResult check_parseval( int n, std::mt19937_64& rng )
{
  std::uniform_int_distribution<int32_t> dist( -255, 255 );
  for( int i = 0; i < n; i++ )
  {
    Residual4x4 r;
    for( auto& v : r )
    {
      v = dist( rng );
    }
    const Coeffs4x4 c = hadamard4x4( r );
    int64_t ec = 0, er = 0;
    for( int k = 0; k < 16; k++ )
    {
      ec += int64_t{ c[k] } * c[k];
      er += int64_t{ r[k] } * r[k];
    }
    Residual4x4 neg;
    for( int k = 0; k < 16; k++ )
    {
      neg[k] = -r[k];
    }
    if( ec != 16 * er || satd4x4( r ) != satd4x4( neg ) )
    {
      return { "hadamard-parseval", false, "violated at sample " + std::to_string( i ) };
    }
  }
  return { "hadamard-parseval", true, std::to_string( n ) + " residuals" };
}

CheckResult check_surface_invariance( int n, std::mt19937_64& rng )
{
  std::uniform_int_distribution<int64_t> shift( 0, 1 << 20 );
  std::uniform_int_distribution<int64_t> scale( 1, 64 );
  for( int i = 0; i < n; i++ )
  {
    const CostGrid3x3 g      = random_grid( rng );
    const QuarterPelOffset q = fractional_refine( g );

    CostGrid3x3 shifted = g, scaled = g;
    const int64_t c = shift( rng ), k = scale( rng );
    for( int j = 0; j < 9; j++ )
    {
      shifted.costs[j] += c;
      scaled.costs[j] *= k;
    }
    const QuarterPelOffset qm = fractional_refine( mirror_x( g ) );
    const QuarterPelOffset qt = fractional_refine( transpose( g ) );
    const bool ok = fit_surface( shifted ) == fit_surface( g ) && fractional_refine( shifted ) == q
                    && fractional_refine( scaled ) == q && qm == QuarterPelOffset{ -q.qx, q.qy }
                    && qt == QuarterPelOffset{ q.qy, q.qx }
                    && fractional_refine( g, { 3, false } ) == q;
    if( !ok )
    {
      return { "surface-invariance", false, "violated at grid " + std::to_string( i ) };
    }
  }
  return { "surface-invariance", true, std::to_string( n ) + " grids" };
}

CheckResult check_fit_oracle( int n, std::mt19937_64& rng )
{
  const DesignMatrix X = surface_design();
  const double scale[5] = { 6, 6, 12, 12, 12 };
  for( int i = 0; i < n; i++ )
  {
    const CostGrid3x3 g = random_grid( rng );
    std::array<double, 9> c{};
    for( int j = 0; j < 9; j++ )
    {
      c[j] = static_cast<double>( g.costs[j] );
    }
    const auto P           = lsq_solve( X, c );
    const SurfaceParams p  = fit_surface( g );
    const int64_t ints[5]  = { p.p1, p.p2, p.p3, p.p4, p.p5 };
    double norm = 1.0;
    for( int j = 0; j < 5; j++ )
    {
      norm = std::max( norm, std::abs( P[j] ) );
    }
    for( int j = 0; j < 5; j++ )
    {
      if( std::abs( static_cast<double>( ints[j] ) / scale[j] - P[j] ) > 1e-9 * norm )
      {
        return { "surface-fit-oracle", false, "mismatch at grid " + std::to_string( i ) };
      }
    }
    const double fden = P[2] * P[2] - 4.0 * P[0] * P[1];
    const Extremum e  = extremum( p );
    if( std::abs( fden ) > 1e-6 * norm * norm && e.den != 0 )
    {
      const double fx = ( 2.0 * P[1] * P[3] - P[2] * P[4] ) / fden;
      const double ix = static_cast<double>( e.num_x ) / static_cast<double>( e.den );
      if( std::abs( ix - fx ) > 1e-6 * std::max( 1.0, std::abs( fx ) ) )
      {
        return { "surface-fit-oracle", false, "extremum mismatch at grid " + std::to_string( i ) };
      }
    }
  }
  return { "surface-fit-oracle", true, std::to_string( n ) + " grids" };
}

CheckResult check_cycles()
{
  const CuSizeSet full = cu_size_set( SizeMode::Full );
  for( std::size_t n = 1; n <= full.size(); n++ )
  {
    const CuSizeSet sub( full.begin(), full.begin() + static_cast<std::ptrdiff_t>( n ) );
    const PipelineTrace t = simulate_pipeline( task_order( sub ).size() );
    if( t.total_cycles != cycle_count( sub ) )
    {
      return { "cycle-closed-form", false, "simulation disagrees for " + std::to_string( n ) + " sizes" };
    }
  }
  const bool closed = cycle_count( full ) == 26628 && cycle_count( cu_size_set( SizeMode::Quadtree ) ) == 10244;
  return { "cycle-closed-form", closed, closed ? "26628 / 10244" : "closed form off" };
}

CheckResult check_zscan()
{
  for( int z = 0; z < kGridPositions; z++ )
  {
    const GridPos p = z_position( z );
    if( z_index( p ) != z || ( p.x > 0 && z_index( { p.x - 1, p.y } ) >= z )
        || ( p.y > 0 && z_index( { p.x, p.y - 1 } ) >= z ) )
    {
      return { "zscan-precedence", false, "position " + std::to_string( z ) };
    }
  }
  return { "zscan-precedence", true, "256 positions" };
}

CheckResult check_rate_table()
{
  for( int v = -255; v <= 255; v++ )
  {
    if( mvd_component_bits( v ) != mvd_component_bits_lut( v ) )
    {
      return { "rate-table", false, "v = " + std::to_string( v ) };
    }
  }
  return { "rate-table", true, "|v| <= 255" };
}

}  // namespace

std::vector<CheckResult> run_selftest( int iterations, uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::vector<CheckResult> out;
  out.push_back( check_parseval( iterations, rng ) );
  out.push_back( check_surface_invariance( iterations, rng ) );
  out.push_back( check_fit_oracle( iterations, rng ) );
  out.push_back( check_cycles() );
  out.push_back( check_zscan() );
  out.push_back( check_rate_table() );
  return out;
}

}  // namespace fme
