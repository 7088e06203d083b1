#include "fme/report.hpp"

#include <cmath>

namespace fme
{

using nlohmann::ordered_json;

static ordered_json pair( int a, int b )
{
  return ordered_json::array( { a, b } );
}

static ordered_json pair( const MotionVector& mv )
{
  return pair( mv.x, mv.y );
}

double fixed6( double v )
{
  const double r = std::round( v * 1e6 ) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

ordered_json to_json( const Rational& r )
{
  return { { "num", r.num }, { "den", r.den } };
}

ordered_json to_json( const CuRecord& rec, int frame )
{
  ordered_json j;
  j["frame"]      = frame;
  j["ctu"]        = pair( rec.ctu_x, rec.ctu_y );
  j["position"]   = pair( rec.ctu_x + rec.cu.x0, rec.ctu_y + rec.cu.y0 );
  j["size"]       = pair( rec.cu.w, rec.cu.h );
  j["imv"]        = pair( rec.imv );
  j["mvp"]        = pair( rec.mvp );
  j["fmv_offset"] = pair( rec.offset.qx, rec.offset.qy );
  j["mv"]         = pair( rec.mv );
  j["costs"]      = rec.costs.costs;
  return j;
}

ordered_json to_json( const ScheduleReport& report, int frame )
{
  ordered_json j;
  j["cycles_per_ctu"] = report.cycles_per_ctu;
  j["ctus_per_frame"] = to_json( report.ctus_per_frame );
  j["required_hz"]    = to_json( report.required_hz );
  ordered_json recs   = ordered_json::array();
  for( const CuRecord& r : report.records )
  {
    recs.push_back( to_json( r, frame ) );
  }
  j["records"] = std::move( recs );
  return j;
}

static ordered_json to_json( const MethodMetrics& m, bool with_truth )
{
  ordered_json j;
  j["count"]                     = m.count;
  j["hit_rate"]                  = fixed6( m.hit_rate() );
  j["near_hit_rate"]             = fixed6( m.near_hit_rate() );
  j["mean_relative_cost_excess"] = fixed6( m.mean_relative_excess() );
  if( with_truth )
  {
    j["truth_hit_rate"] = fixed6( m.truth_hit_rate() );
  }
  return j;
}

ordered_json to_json( const EvaluationSummary& s )
{
  ordered_json j;
  j["surface"]    = to_json( s.surface, s.has_truth );
  j["two_step"]   = to_json( s.two_step, s.has_truth );
  j["exhaustive"] = to_json( s.exhaustive, s.has_truth );
  return j;
}

void write_csv( std::ostream& os, const ScheduleReport& report, int frame )
{
  os << "frame,ctu_x,ctu_y,cu_x,cu_y,cu_w,cu_h,imv_x,imv_y,mvp_x,mvp_y,off_x,off_y,mv_x,mv_y";
  for( int i = 0; i < 9; i++ )
  {
    os << ",c" << i;
  }
  os << '\n';
  for( const CuRecord& r : report.records )
  {
    os << frame << ',' << r.ctu_x << ',' << r.ctu_y << ',' << r.ctu_x + r.cu.x0 << ',' << r.ctu_y + r.cu.y0 << ','
       << r.cu.w << ',' << r.cu.h << ',' << r.imv.x << ',' << r.imv.y << ',' << r.mvp.x << ',' << r.mvp.y << ','
       << r.offset.qx << ',' << r.offset.qy << ',' << r.mv.x << ',' << r.mv.y;
    for( int64_t c : r.costs.costs )
    {
      os << ',' << c;
    }
    os << '\n';
  }
}

}  // namespace fme
