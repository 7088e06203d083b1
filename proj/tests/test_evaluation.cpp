#include "fme/evaluation.hpp"
#include "fme/oracle.hpp"
#include "fme/report.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace fme;

namespace
{

CtuConfig config( LambdaFixed lambda )
{
  CtuConfig c;
  c.search.range = 2;
  c.lambda       = lambda;
  return c;
}

}  // namespace

TEST( MethodMetrics, Accumulates )
{
  MethodMetrics m;
  m.add( { 1, 0 }, { 1, 0 }, { 100 }, { 100 }, MotionVector{ 1, 0 } );
  m.add( { 2, 1 }, { 1, 0 }, { 150 }, { 100 }, MotionVector{ 1, 0 } );
  m.add( { 3, 0 }, { 1, 0 }, { 5 }, { 0 }, std::nullopt );
  EXPECT_EQ( m.count, 3u );
  EXPECT_EQ( m.hits, 1u );
  EXPECT_EQ( m.near_hits, 2u );
  EXPECT_EQ( m.truth_hits, 1u );
  EXPECT_DOUBLE_EQ( m.mean_relative_excess(), ( 0.0 + 0.5 + 5.0 ) / 3.0 );

  MethodMetrics n;
  n.merge( m );
  n.merge( m );
  EXPECT_EQ( n.count, 6u );
  EXPECT_DOUBLE_EQ( n.hit_rate(), 1.0 / 3.0 );
  EXPECT_DOUBLE_EQ( MethodMetrics{}.hit_rate(), 0.0 );
}

TEST( EvaluatePass, IdenticalFramesAllMethodsAgree )
{
  std::mt19937_64 rng( 71 );
  const Plane orig = test::smooth_canvas( 128, 128, rng );
  const Plane ref  = orig.with_margin( 8 );
  const LambdaFixed lam = LambdaFixed::from_qp( 32 );
  const CtuPass pass    = run_ctu( orig, ref, 0, 0, cu_size_set( SizeMode::Quadtree ), config( lam ) );
  const EvaluationSummary s = evaluate_pass( orig, ref, pass, lam, MotionVector{} );
  EXPECT_EQ( s.exhaustive.count, pass.records.size() );
  for( const MethodMetrics* m : { &s.surface, &s.two_step, &s.exhaustive } )
  {
    EXPECT_DOUBLE_EQ( m->hit_rate(), 1.0 );
    EXPECT_DOUBLE_EQ( m->truth_hit_rate(), 1.0 );
    EXPECT_DOUBLE_EQ( m->mean_relative_excess(), 0.0 );
  }
}

TEST( EvaluatePass, FractionalShiftFoundByExhaustive )
{
  std::mt19937_64 rng( 72 );
  const Plane canvas = test::smooth_canvas( 192, 192, rng );
  const Plane ref    = test::crop( canvas, 32, 32, 128, 128, 16 );
  const MotionVector truth{ 1, 2 };
  const Plane orig = predict_block( ref, 0, 0, 128, 128, truth );

  const CtuPass pass        = run_ctu( orig, ref, 0, 0, cu_size_set( SizeMode::Full ), config( { 0 } ) );
  const EvaluationSummary s = evaluate_pass( orig, ref, pass, { 0 }, truth );
  EXPECT_TRUE( s.has_truth );
  EXPECT_DOUBLE_EQ( s.exhaustive.truth_hit_rate(), 1.0 );
  EXPECT_GE( s.two_step.mean_relative_excess(), 0.0 );
  EXPECT_GE( s.surface.mean_relative_excess(), 0.0 );
  EXPECT_GT( s.surface.near_hit_rate(), 0.5 );

  EvaluationSummary twice = s;
  twice.merge( s );
  EXPECT_EQ( twice.surface.count, 2 * s.surface.count );
  EXPECT_DOUBLE_EQ( twice.surface.hit_rate(), s.surface.hit_rate() );
}

TEST( Report, JsonShape )
{
  std::mt19937_64 rng( 73 );
  const Plane orig = test::smooth_canvas( 128, 128, rng );
  const Plane ref  = orig.with_margin( 4 );
  ScheduleReport rep = make_schedule_report( cu_size_set( SizeMode::Quadtree ), 128, 128, 30, CtuCountMode::ExactArea );
  rep.records        = run_ctu( orig, ref, 0, 0, cu_size_set( SizeMode::Quadtree ), config( { 0 } ) ).records;
  const auto j = to_json( rep, 1 );
  EXPECT_EQ( j["cycles_per_ctu"], 10244 );
  EXPECT_EQ( j["required_hz"]["num"], 10244 * 30 );
  EXPECT_EQ( j["required_hz"]["den"], 1 );
  ASSERT_EQ( j["records"].size(), rep.records.size() );
  EXPECT_EQ( j["records"][0]["frame"], 1 );
  EXPECT_EQ( j["records"][0]["costs"].size(), 9u );

  std::ostringstream csv;
  write_csv( csv, rep, 1 );
  const std::string text = csv.str();
  EXPECT_EQ( text.rfind( "frame,ctu_x,ctu_y,", 0 ), 0u );
  EXPECT_EQ( static_cast<std::size_t>( std::count( text.begin(), text.end(), '\n' ) ), rep.records.size() + 1 );
}

TEST( Report, Fixed6 )
{
  EXPECT_DOUBLE_EQ( fixed6( 0.1234564 ), 0.123456 );
  EXPECT_DOUBLE_EQ( fixed6( 0.1234566 ), 0.123457 );
  EXPECT_DOUBLE_EQ( fixed6( 1.0 ), 1.0 );
}
