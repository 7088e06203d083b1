#include "fme/error.hpp"
#include "fme/oracle.hpp"
#include "fme/surface.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace fme;

namespace
{

constexpr double kScale[5] = { 6, 6, 12, 12, 12 };

std::array<int64_t, 5> as_array( const SurfaceParams& p )
{
  return { p.p1, p.p2, p.p3, p.p4, p.p5 };
}

std::array<double, 6> float_fit( const CostGrid3x3& g )
{
  std::array<double, 9> c{};
  for( int i = 0; i < 9; i++ )
    c[i] = static_cast<double>( g.costs[i] );
  return lsq_solve( surface_design(), c );
}

CostGrid3x3 grid_from_rows( std::array<int64_t, 9> rows )
{
  CostGrid3x3 g;
  g.costs = rows;  // rows y = -1, 0, 1; columns x = -1, 0, 1
  return g;
}

// 16(x - 1/4)^2 + 16(y + 1/2)^2 sampled on the grid
const CostGrid3x3 kOffsetBowl = grid_from_rows( { 29, 5, 13, 29, 5, 13, 61, 37, 45 } );
const CostGrid3x3 kUnitBowl   = grid_from_rows( { 2, 1, 2, 1, 0, 1, 2, 1, 2 } );

}  // namespace

TEST( FitSurface, WeightsMatchLeastSquaresPseudoInverse )
{
  // The fit is linear in the costs, so probing with unit grids recovers every weight.
  for( int i = 0; i < 9; i++ )
  {
    CostGrid3x3 unit;
    unit.costs[i]             = 1;
    const auto P              = float_fit( unit );
    const auto p              = as_array( fit_surface( unit ) );
    for( int k = 0; k < 5; k++ )
    {
      const double scaled = P[k] * kScale[k];
      EXPECT_NEAR( scaled, std::round( scaled ), 1e-12 ) << "weight is not an integer, cell " << i << " param " << k;
      EXPECT_EQ( p[k], static_cast<int64_t>( std::llround( scaled ) ) ) << "cell " << i << " param " << k;
    }
  }
}

TEST( FitSurface, ReferenceRelations )
{
  // p1 = 3 sum(C x^2) - 2 sum(C), p2 = 3 sum(C y^2) - 2 sum(C), p3 = 3 sum(C xy), p4 = 2 sum(C x), p5 = 2 sum(C y)
  std::mt19937_64 rng( 31 );
  for( int n = 0; n < 200; n++ )
  {
    const CostGrid3x3 g = test::random_grid( rng );
    int64_t s = 0, sx2 = 0, sy2 = 0, sxy = 0, sx = 0, sy = 0;
    for( int y = -1; y <= 1; y++ )
    {
      for( int x = -1; x <= 1; x++ )
      {
        const int64_t c = g.at( x, y );
        s += c;
        sx2 += c * x * x;
        sy2 += c * y * y;
        sxy += c * x * y;
        sx += c * x;
        sy += c * y;
      }
    }
    const auto p = as_array( fit_surface( g ) );
    ASSERT_EQ( p, ( std::array<int64_t, 5>{ 3 * sx2 - 2 * s, 3 * sy2 - 2 * s, 3 * sxy, 2 * sx, 2 * sy } ) );
  }
}

TEST( FitSurface, Examples )
{
  CostGrid3x3 flat;
  flat.costs.fill( 100 );
  EXPECT_EQ( fit_surface( flat ), SurfaceParams{} );
  EXPECT_EQ( fit_surface( kUnitBowl ), ( SurfaceParams{ 6, 6, 0, 0, 0 } ) );

  // model-exact data: the float fit reproduces the generating polynomial 16x^2 + 16y^2 - 8x + 16y + c
  const auto P = float_fit( kOffsetBowl );
  EXPECT_NEAR( P[0], 16.0, 1e-9 );
  EXPECT_NEAR( P[1], 16.0, 1e-9 );
  EXPECT_NEAR( P[2], 0.0, 1e-9 );
  EXPECT_NEAR( P[3], -8.0, 1e-9 );
  EXPECT_NEAR( P[4], 16.0, 1e-9 );
  EXPECT_EQ( fit_surface( kOffsetBowl ), ( SurfaceParams{ 96, 96, 0, -96, 192 } ) );
}

TEST( FitSurface, AgreesWithFloatLeastSquares )
{
  std::mt19937_64 rng( 32 );
  for( int n = 0; n < 5000; n++ )
  {
    const CostGrid3x3 g = test::random_grid( rng );
    const auto P        = float_fit( g );
    const auto p        = as_array( fit_surface( g ) );
    double norm = 1.0;
    for( int k = 0; k < 5; k++ )
      norm = std::max( norm, std::abs( P[k] ) );
    for( int k = 0; k < 5; k++ )
      ASSERT_LE( std::abs( p[k] / kScale[k] - P[k] ), 1e-9 * norm );
  }
}

TEST( Extremum, Examples )
{
  const Extremum e = extremum( { 6, 6, 0, 0, 0 } );
  EXPECT_TRUE( e.num_x == 0 && e.num_y == 0 && e.den == -576 );

  const Extremum b = extremum( fit_surface( kOffsetBowl ) );
  EXPECT_DOUBLE_EQ( double( b.num_x ) / double( b.den ), 0.25 );
  EXPECT_DOUBLE_EQ( double( b.num_y ) / double( b.den ), -0.5 );

  EXPECT_TRUE( extremum( SurfaceParams{} ).den == 0 );
}

TEST( Extremum, ScalingMatchesFloatStationaryPoint )
{
  std::mt19937_64 rng( 33 );
  int checked = 0;
  for( int n = 0; n < 5000; n++ )
  {
    const CostGrid3x3 g = test::random_grid( rng );
    const auto P        = float_fit( g );
    const double fden   = P[2] * P[2] - 4 * P[0] * P[1];
    if( std::abs( fden ) < 1e3 )
      continue;
    const double fx   = ( 2 * P[1] * P[3] - P[2] * P[4] ) / fden;
    const double fy   = ( 2 * P[0] * P[4] - P[2] * P[3] ) / fden;
    const Extremum e  = extremum( fit_surface( g ) );
    const double ix   = double( e.num_x ) / double( e.den );
    const double iy   = double( e.num_y ) / double( e.den );
    ASSERT_NEAR( ix, fx, 1e-7 * std::max( 1.0, std::abs( fx ) ) );
    ASSERT_NEAR( iy, fy, 1e-7 * std::max( 1.0, std::abs( fy ) ) );
    checked++;
  }
  EXPECT_GT( checked, 4000 );
}

TEST( RoundQuarter, Examples )
{
  EXPECT_EQ( round_quarter_divfree( 0, 7 ), 0 );
  EXPECT_EQ( round_quarter_divfree( 0, -7 ), 0 );
  EXPECT_EQ( round_quarter_divfree( 1, 3 ), 1 );
  EXPECT_EQ( round_quarter_divfree( -5, 8 ), -2 );
  EXPECT_EQ( round_quarter_divfree( 9, 2 ), 3 );
  EXPECT_EQ( round_quarter_divfree( 5, -8 ), -2 );
  EXPECT_EQ( round_quarter_divfree( 9, 2, 2 ), 2 );
  EXPECT_EQ( round_quarter_divfree( -1, 8 ), 0 );  // -0.125: tie between 0 and -1 goes to 0
  EXPECT_EQ( round_quarter_divfree( 7, 8 ), 3 );   // 0.875: tie between 3 and 4 goes to 3
}

TEST( RoundQuarter, ZeroDenominatorIsContractViolation )
{
  try
  {
    round_quarter_divfree( 1, 0 );
    FAIL();
  }
  catch( const Error& e )
  {
    EXPECT_EQ( e.kind(), ErrorKind::Contract );
  }
}

TEST( RoundQuarter, MatchesFloatRounding )
{
  std::mt19937_64 rng( 34 );
  std::uniform_int_distribution<int64_t> den_dist( -100000, 100000 );
  for( int n = 0; n < 100000; n++ )
  {
    const int64_t den = den_dist( rng );
    if( den == 0 )
      continue;
    std::uniform_int_distribution<int64_t> num_dist( -std::abs( den ) * 2, std::abs( den ) * 2 );
    const int64_t num = num_dist( rng );
    // ties sit exactly on odd eighths, which doubles represent exactly
    const int expect = test::float_round_quarter( double( num ) / double( den ) );
    ASSERT_EQ( round_quarter_divfree( num, den ), expect ) << num << "/" << den;
  }
  // every odd-eighth tie, both signs
  for( int t = -9; t <= 9; t += 2 )
  {
    const int expect = test::float_round_quarter( t / 8.0 );
    ASSERT_EQ( round_quarter_divfree( t, 8 ), expect ) << t;
    ASSERT_EQ( round_quarter_divfree( 3 * t, 24 ), expect ) << t;
  }
}

TEST( FractionalRefine, Examples )
{
  CostGrid3x3 flat;
  flat.costs.fill( 1234 );
  EXPECT_EQ( fractional_refine( flat ), QuarterPelOffset{} );
  EXPECT_EQ( fractional_refine( kUnitBowl ), QuarterPelOffset{} );
  EXPECT_EQ( fractional_refine( kOffsetBowl ), ( QuarterPelOffset{ 1, -2 } ) );
}

TEST( FractionalRefine, NonConvexFallsBack )
{
  // saddle x^2 - y^2 shifted positive, and a ridge with no y curvature
  const CostGrid3x3 saddle = grid_from_rows( { 1, 0, 1, 2, 1, 2, 1, 0, 1 } );
  EXPECT_EQ( fractional_refine( saddle ), QuarterPelOffset{} );
  const CostGrid3x3 ridge = grid_from_rows( { 4, 1, 2, 4, 1, 2, 4, 1, 2 } );
  EXPECT_EQ( fractional_refine( ridge ), QuarterPelOffset{} );
  // concave cap
  const CostGrid3x3 cap = grid_from_rows( { 0, 1, 0, 1, 3, 1, 0, 1, 0 } );
  EXPECT_EQ( fractional_refine( cap ), QuarterPelOffset{} );
}

TEST( FractionalRefine, ClampsToOnePel )
{
  // monotone slope in x with slight curvature: extremum far to the right
  const CostGrid3x3 g = grid_from_rows( { 100, 58, 21, 100, 58, 20, 100, 58, 21 } );
  const QuarterPelOffset q3 = fractional_refine( g );
  EXPECT_EQ( q3.qx, 3 );
  EXPECT_EQ( fractional_refine( g, { 2, true } ).qx, 2 );
}

TEST( FractionalRefine, RejectsNegativeCosts )
{
  CostGrid3x3 g;
  g.costs[4] = -1;
  EXPECT_THROW( fractional_refine( g ), Error );
}

TEST( FractionalRefine, InvarianceProperties )
{
  std::mt19937_64 rng( 35 );
  std::uniform_int_distribution<int64_t> shift( 0, int64_t{ 1 } << 30 );
  std::uniform_int_distribution<int64_t> scale( 1, 1000 );
  for( int n = 0; n < 20000; n++ )
  {
    const CostGrid3x3 g      = test::random_grid( rng );
    const QuarterPelOffset q = fractional_refine( g );

    CostGrid3x3 shifted = g, scaled = g;
    const int64_t c = shift( rng ), k = scale( rng );
    for( int i = 0; i < 9; i++ )
    {
      shifted.costs[i] += c;
      scaled.costs[i] *= k;
    }
    ASSERT_EQ( fit_surface( shifted ), fit_surface( g ) );
    ASSERT_EQ( fractional_refine( shifted ), q );
    ASSERT_EQ( fractional_refine( scaled ), q );
    ASSERT_EQ( fractional_refine( test::mirror_x( g ) ), ( QuarterPelOffset{ -q.qx, q.qy } ) );
    ASSERT_EQ( fractional_refine( test::mirror_y( g ) ), ( QuarterPelOffset{ q.qx, -q.qy } ) );
    ASSERT_EQ( fractional_refine( test::transpose( g ) ), ( QuarterPelOffset{ q.qy, q.qx } ) );
    ASSERT_EQ( fractional_refine( g, { 3, false } ), q );
  }
}

TEST( FractionalRefine, RecoversExactQuadraticMinimum )
{
  // a (x - x0)^2 + b (y - y0)^2 + c (x - x0)(y - y0), minimum on a 1/32 lattice, scaled by 1024:
  // every sample is an integer, so the fit is exact
  std::mt19937_64 rng( 36 );
  std::uniform_int_distribution<int> coef( 1, 40 );
  std::uniform_int_distribution<int> pos( -28, 28 );
  for( int n = 0; n < 5000; n++ )
  {
    const int a = coef( rng ), b = coef( rng );
    std::uniform_int_distribution<int> cross( -int( std::sqrt( 4.0 * a * b ) ) + 1, int( std::sqrt( 4.0 * a * b ) ) - 1 );
    const int c = cross( rng );
    if( c * c >= 4 * a * b )
      continue;
    const int i0 = pos( rng ), j0 = pos( rng );
    CostGrid3x3 g;
    for( int y = -1; y <= 1; y++ )
    {
      for( int x = -1; x <= 1; x++ )
      {
        const int64_t dx = 32 * x - i0, dy = 32 * y - j0;  // 32 (x - x0)
        g.at( x, y ) = a * dx * dx + b * dy * dy + c * dx * dy + 8 * 1024 * 1024;
      }
    }
    const QuarterPelOffset q = fractional_refine( g );
    ASSERT_EQ( q.qx, test::float_round_quarter( i0 / 32.0 ) ) << a << " " << b << " " << c << " " << i0;
    ASSERT_EQ( q.qy, test::float_round_quarter( j0 / 32.0 ) ) << a << " " << b << " " << c << " " << j0;
  }
}
