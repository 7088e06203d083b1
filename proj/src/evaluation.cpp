#include "fme/evaluation.hpp"

#include "fme/error.hpp"
#include "fme/oracle.hpp"

#include <algorithm>

namespace fme
{

void MethodMetrics::add( const MotionVector& mv, const MotionVector& best_mv, RdCost cost, RdCost best_cost,
                         const std::optional<MotionVector>& truth )
{
  count++;
  hits += mv == best_mv ? 1 : 0;
  near_hits += chebyshev( mv, best_mv ) <= 1 ? 1 : 0;
  truth_hits += truth && mv == *truth ? 1 : 0;
  const double base = static_cast<double>( std::max<uint64_t>( best_cost.value, 1 ) );
  excess_sum += static_cast<double>( cost.value - best_cost.value ) / base;
}

void MethodMetrics::merge( const MethodMetrics& o )
{
  count += o.count;
  hits += o.hits;
  near_hits += o.near_hits;
  truth_hits += o.truth_hits;
  excess_sum += o.excess_sum;
}

static double ratio( uint64_t a, uint64_t b )
{
  return b == 0 ? 0.0 : static_cast<double>( a ) / static_cast<double>( b );
}

double MethodMetrics::hit_rate() const
{
  return ratio( hits, count );
}

double MethodMetrics::near_hit_rate() const
{
  return ratio( near_hits, count );
}

double MethodMetrics::truth_hit_rate() const
{
  return ratio( truth_hits, count );
}

double MethodMetrics::mean_relative_excess() const
{
  return count == 0 ? 0.0 : excess_sum / static_cast<double>( count );
}

void EvaluationSummary::merge( const EvaluationSummary& o )
{
  surface.merge( o.surface );
  two_step.merge( o.two_step );
  exhaustive.merge( o.exhaustive );
  has_truth = has_truth || o.has_truth;
}

EvaluationSummary evaluate_pass( const Plane& orig, const Plane& ref, const CtuPass& pass, LambdaFixed lambda,
                                 const std::optional<MotionVector>& truth )
{
  EvaluationSummary sum;
  sum.has_truth = truth.has_value();
  for( const CuRecord& rec : pass.records )
  {
    const BlockView blk( orig, rec.ctu_x + rec.cu.x0, rec.ctu_y + rec.cu.y0, rec.cu.w, rec.cu.h );
    const OracleResult ex  = exhaustive_quarter_search( blk, ref, rec.imv, lambda, rec.mvp );
    const OracleResult ts  = two_step_search( blk, ref, rec.imv, lambda, rec.mvp );
    const OracleResult srf = evaluate_mv( blk, ref, rec.mv, lambda, rec.mvp );

    FME_CHECK( ex.cost <= ts.cost && ex.cost <= srf.cost, Invariant,
               "exhaustive search lost to a method whose candidates it contains" );

    sum.exhaustive.add( ex.mv, ex.mv, ex.cost, ex.cost, truth );
    sum.two_step.add( ts.mv, ex.mv, ts.cost, ex.cost, truth );
    sum.surface.add( srf.mv, ex.mv, srf.cost, ex.cost, truth );
  }
  return sum;
}

}  // namespace fme
