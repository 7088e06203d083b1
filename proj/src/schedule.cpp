#include "fme/schedule.hpp"

#include "fme/distortion.hpp"
#include "fme/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace fme
{

SizeMode parse_size_mode( std::string_view name )
{
  if( name == "full" )
  {
    return SizeMode::Full;
  }
  if( name == "quadtree" )
  {
    return SizeMode::Quadtree;
  }
  throw Error( ErrorKind::InvalidArgument, "unknown size mode '" + std::string( name ) + "'" );
}

const char* to_string( SizeMode m )
{
  return m == SizeMode::Full ? "full" : "quadtree";
}

CuSizeSet cu_size_set( SizeMode mode )
{
  if( mode == SizeMode::Quadtree )
  {
    return { { 128, 128 }, { 64, 64 }, { 32, 32 }, { 16, 16 }, { 8, 8 } };
  }
  return { { 128, 128 }, { 128, 64 }, { 64, 128 }, { 64, 64 }, { 64, 32 }, { 32, 64 }, { 32, 32 },
           { 32, 16 },   { 16, 32 },  { 16, 16 },  { 16, 8 },  { 8, 16 },  { 8, 8 } };
}

int z_index( GridPos pos )
{
  int z = 0;
  for( int b = 0; b < 4; b++ )
  {
    z |= ( ( pos.x >> b ) & 1 ) << ( 2 * b );
    z |= ( ( pos.y >> b ) & 1 ) << ( 2 * b + 1 );
  }
  return z;
}

GridPos z_position( int index )
{
  GridPos p;
  for( int b = 0; b < 4; b++ )
  {
    p.x |= ( ( index >> ( 2 * b ) ) & 1 ) << b;
    p.y |= ( ( index >> ( 2 * b + 1 ) ) & 1 ) << b;
  }
  return p;
}

std::vector<Task> task_order( const CuSizeSet& sizes )
{
  std::vector<Task> tasks;
  tasks.reserve( static_cast<std::size_t>( kGridPositions ) * sizes.size() );
  for( int z = 0; z < kGridPositions; z++ )
  {
    const GridPos pos = z_position( z );
    for( std::size_t s = 0; s < sizes.size(); s++ )
    {
      const CuSize size = sizes[s];
      Task t;
      t.pos        = pos;
      t.size       = size;
      t.size_index = static_cast<int>( s );
      t.cu         = { pos.x * 8 / size.w * size.w, pos.y * 8 / size.h * size.h, size.w, size.h };
      t.is_last_block = ( pos.x * 8 + 8 ) % size.w == 0 && ( pos.y * 8 + 8 ) % size.h == 0;
      tasks.push_back( t );
    }
  }
  return tasks;
}

uint64_t cycle_count( const CuSizeSet& sizes, const PipelineTiming& timing )
{
  const uint64_t blocks = static_cast<uint64_t>( sizes.size() ) * kGridPositions;
  return static_cast<uint64_t>( timing.first_output_latency - timing.cycles_per_block )
         + static_cast<uint64_t>( timing.cycles_per_block ) * blocks;
}

PipelineTrace simulate_pipeline( uint64_t tasks, const PipelineTiming& timing )
{
  enum class Kind
  {
    KernelDone,
    OutputDone,
  };
  struct Event
  {
    uint64_t time;
    uint64_t task;
    Kind kind;
    bool operator>( const Event& o ) const { return time != o.time ? time > o.time : task > o.task; }
  };

  const uint64_t kernel = static_cast<uint64_t>( timing.cycles_per_block );
  const uint64_t tail   = static_cast<uint64_t>( timing.first_output_latency - timing.cycles_per_block );

  PipelineTrace trace;
  if( tasks == 0 )
  {
    return trace;
  }

  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
  events.push( { kernel, 0, Kind::KernelDone } );
  while( !events.empty() )
  {
    const Event e = events.top();
    events.pop();
    if( e.kind == Kind::KernelDone )
    {
      // the kernel is free again: admit the next block, hand this one to the fit/output stage
      if( e.task + 1 < tasks )
      {
        events.push( { e.time + kernel, e.task + 1, Kind::KernelDone } );
      }
      events.push( { e.time + tail, e.task, Kind::OutputDone } );
    }
    else
    {
      if( trace.outputs == 0 )
      {
        trace.first_output_cycle = e.time;
      }
      trace.outputs++;
      trace.total_cycles = std::max( trace.total_cycles, e.time );
    }
  }
  return trace;
}

Rational Rational::make( int64_t num, int64_t den )
{
  FME_CHECK( den != 0, InvalidArgument, "rational with zero denominator" );
  if( den < 0 )
  {
    num = -num;
    den = -den;
  }
  const int64_t g = std::gcd( num, den );
  return { num / g, den / g };
}

Rational Rational::operator*( const Rational& o ) const
{
  const int64_t g1 = std::gcd( num, o.den );
  const int64_t g2 = std::gcd( o.num, den );
  return make( ( num / g1 ) * ( o.num / g2 ), ( den / g2 ) * ( o.den / g1 ) );
}

CtuCountMode parse_ctu_count_mode( std::string_view name )
{
  if( name == "exact_area" || name == "exact-area" )
  {
    return CtuCountMode::ExactArea;
  }
  if( name == "ceil_grid" || name == "ceil-grid" )
  {
    return CtuCountMode::CeilGrid;
  }
  throw Error( ErrorKind::InvalidArgument, "unknown CTU count mode '" + std::string( name ) + "'" );
}

const char* to_string( CtuCountMode m )
{
  return m == CtuCountMode::ExactArea ? "exact_area" : "ceil_grid";
}

Rational ctus_per_frame( int frame_w, int frame_h, CtuCountMode mode )
{
  FME_CHECK( frame_w > 0 && frame_h > 0, InvalidArgument, "frame dimensions must be positive" );
  if( mode == CtuCountMode::ExactArea )
  {
    return Rational::make( int64_t{ frame_w } * frame_h, int64_t{ kCtuSize } * kCtuSize );
  }
  const int64_t cols = ( frame_w + kCtuSize - 1 ) / kCtuSize;
  const int64_t rows = ( frame_h + kCtuSize - 1 ) / kCtuSize;
  return { cols * rows, 1 };
}

Rational required_frequency( const CuSizeSet& sizes, int frame_w, int frame_h, int fps, CtuCountMode mode )
{
  FME_CHECK( fps > 0, InvalidArgument, "fps must be positive" );
  const Rational cycles{ static_cast<int64_t>( cycle_count( sizes ) ), 1 };
  return cycles * ctus_per_frame( frame_w, frame_h, mode ) * Rational{ fps, 1 };
}

bool canonical_less( const CuRecord& a, const CuRecord& b )
{
  if( a.ctu_y != b.ctu_y )
  {
    return a.ctu_y < b.ctu_y;
  }
  if( a.ctu_x != b.ctu_x )
  {
    return a.ctu_x < b.ctu_x;
  }
  const int za = z_index( a.cu.top_left() ), zb = z_index( b.cu.top_left() );
  if( za != zb )
  {
    return za < zb;
  }
  return a.size_index < b.size_index;
}

namespace
{
// Running distortion sums of one CU, one per integer candidate offset.
struct CostAccumulators
{
  bool active = false;
  MotionVector imv;
  std::array<Distortion, 9> sums{};
};
}  // namespace

CtuPass run_ctu( const Plane& orig, const Plane& ref, int ctu_x, int ctu_y, const CuSizeSet& sizes,
                 const CtuConfig& cfg, const std::optional<MvContext>& context )
{
  FME_CHECK( orig.inside( ctu_x, ctu_y, kCtuSize, kCtuSize ), InvalidArgument,
             "CTU at (" + std::to_string( ctu_x ) + "," + std::to_string( ctu_y ) + ") is not inside the frame" );
  FME_CHECK( ref.width() == orig.width() && ref.height() == orig.height(), InvalidArgument,
             "original and reference frames differ in size" );
  for( const CuSize& s : sizes )
  {
    validate_cu( { 0, 0, s.w, s.h } );
  }

  CtuPass pass;
  pass.grid = context ? MvGrid( *context ) : MvGrid();

  // per size, one accumulator slot per CU of that size in the CTU
  std::vector<std::vector<CostAccumulators>> acc( sizes.size() );
  for( std::size_t s = 0; s < sizes.size(); s++ )
  {
    acc[s].resize( static_cast<std::size_t>( ( kCtuSize / sizes[s].w ) * ( kCtuSize / sizes[s].h ) ) );
  }

  for( const Task& t : task_order( sizes ) )
  {
    const std::size_t s   = static_cast<std::size_t>( t.size_index );
    const int cu_index    = ( t.cu.y0 / t.size.h ) * ( kCtuSize / t.size.w ) + t.cu.x0 / t.size.w;
    CostAccumulators& a   = acc[s][static_cast<std::size_t>( cu_index )];

    if( !a.active )
    {
      const BlockView cu_view( orig, ctu_x + t.cu.x0, ctu_y + t.cu.y0, t.cu.w, t.cu.h );
      a.imv    = full_search( cu_view, ref, {}, cfg.search ).mv;
      a.sums   = {};
      a.active = true;
    }

    const int bx = ctu_x + t.pos.x * 8;
    const int by = ctu_y + t.pos.y * 8;
    const BlockView org_blk( orig, bx, by, 8, 8 );
    for( int oy = -1; oy <= 1; oy++ )
    {
      for( int ox = -1; ox <= 1; ox++ )
      {
        const BlockView pred( ref, bx + mv_int_part( a.imv.x ) + ox, by + mv_int_part( a.imv.y ) + oy, 8, 8 );
        a.sums[static_cast<std::size_t>( CostGrid3x3::index( ox, oy ) )] += satd8x8( org_blk, pred );
        pass.satd8x8_calls++;
      }
    }

    if( !t.is_last_block )
    {
      continue;
    }

    CuRecord rec;
    rec.ctu_x      = ctu_x;
    rec.ctu_y      = ctu_y;
    rec.cu         = t.cu;
    rec.size_index = t.size_index;
    rec.imv        = a.imv;
    pass.unwritten_cmvp_reads += cmvp_unwritten_in_ctu_reads( pass.grid, t.cu );
    rec.mvp = derive_cmvp( pass.grid, t.cu );

    for( int oy = -1; oy <= 1; oy++ )
    {
      for( int ox = -1; ox <= 1; ox++ )
      {
        const MotionVector cand = a.imv + MotionVector::from_pels( ox, oy );
        const RdCost j = rd_cost( a.sums[static_cast<std::size_t>( CostGrid3x3::index( ox, oy ) )], cand - rec.mvp,
                                  cfg.lambda );
        rec.costs.at( ox, oy ) = static_cast<int64_t>( j.value );
      }
    }
    rec.offset = fractional_refine( rec.costs, cfg.refine );
    rec.mv     = a.imv + MotionVector{ rec.offset.qx, rec.offset.qy };

    if( t.size.w == 8 && t.size.h == 8 )
    {
      pass.grid.record_mv( t.pos, rec.mv );
    }
    pass.records.push_back( rec );
    a.active = false;
  }

  for( const auto& per_size : acc )
  {
    for( const auto& a : per_size )
    {
      FME_CHECK( !a.active, Invariant, "a CU was still in flight at the end of the CTU pass" );
    }
  }

  std::sort( pass.records.begin(), pass.records.end(), canonical_less );
  return pass;
}

ScheduleReport make_schedule_report( const CuSizeSet& sizes, int frame_w, int frame_h, int fps, CtuCountMode mode )
{
  ScheduleReport r;
  r.cycles_per_ctu = cycle_count( sizes );
  r.ctus_per_frame = ctus_per_frame( frame_w, frame_h, mode );
  r.required_hz    = required_frequency( sizes, frame_w, frame_h, fps, mode );
  return r;
}

}  // namespace fme
