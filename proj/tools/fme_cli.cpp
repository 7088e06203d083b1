// fme: interpolation-free fractional motion estimation model.
//
//   fme estimate  --orig a.yuv --ref b.yuv --width W --height H [...]
//   fme evaluate  --orig a.yuv --ref b.yuv --width W --height H [--truth-mv x,y]
//   fme schedule  --sizes full --width 3840 --height 2160 --fps 30
//   fme selftest
//
// Exit codes: 0 ok, 1 usage, 2 I/O, 3 internal invariant violation.

#include "fme/error.hpp"
#include "fme/evaluation.hpp"
#include "fme/report.hpp"
#include "fme/schedule.hpp"
#include "fme/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace
{

enum ExitCode
{
  kExitOk        = 0,
  kExitUsage     = 1,
  kExitIo        = 2,
  kExitInvariant = 3,
};

int log_level()
{
  const char* env = std::getenv( "FME_LOG_LEVEL" );
  return env ? std::atoi( env ) : 0;
}

void log_info( const std::string& msg )
{
  if( log_level() >= 1 )
  {
    std::cerr << "fme: " << msg << '\n';
  }
}

struct RunConfig
{
  std::string orig_path;
  std::string ref_path;
  int width            = 0;
  int height           = 0;
  std::string format   = "gray8";
  int orig_frame       = 1;
  int ref_frame        = 0;
  int qp               = 32;
  int64_t lambda_q16   = -1;
  int range            = 8;
  std::string metric   = "sad";
  std::string sizes    = "full";
  std::string ctu_count = "exact_area";
  int fps              = 30;
  int max_quarter      = 3;
  bool chain_context   = false;
  std::string output;
  std::string out_format = "json";
  std::string truth_mv;
};

void add_run_options( CLI::App& cmd, RunConfig& cfg )
{
  cmd.add_option( "--orig", cfg.orig_path, "raw file holding the current frame" )->required();
  cmd.add_option( "--ref", cfg.ref_path, "raw file holding the reference frame (may equal --orig)" )->required();
  cmd.add_option( "--width", cfg.width, "frame width in pixels" )->required()->check( CLI::PositiveNumber );
  cmd.add_option( "--height", cfg.height, "frame height in pixels" )->required()->check( CLI::PositiveNumber );
  cmd.add_option( "--format", cfg.format, "gray8 | yuv420p" )->check( CLI::IsMember( { "gray8", "yuv420p" } ) );
  cmd.add_option( "--orig-frame", cfg.orig_frame, "frame index inside --orig" )->check( CLI::NonNegativeNumber );
  cmd.add_option( "--ref-frame", cfg.ref_frame, "frame index inside --ref" )->check( CLI::NonNegativeNumber );
  cmd.add_option( "--qp", cfg.qp, "QP used to derive lambda" )->check( CLI::Range( 0, 63 ) );
  cmd.add_option( "--lambda-q16", cfg.lambda_q16, "explicit lambda in Q16, overrides --qp" );
  cmd.add_option( "--range", cfg.range, "integer search range in pels" )->check( CLI::Range( 1, 64 ) );
  cmd.add_option( "--metric", cfg.metric, "integer search metric: sad | satd" )
    ->check( CLI::IsMember( { "sad", "satd" } ) );
  cmd.add_option( "--sizes", cfg.sizes, "CU size set: full | quadtree" )
    ->check( CLI::IsMember( { "full", "quadtree" } ) );
  cmd.add_option( "--ctu-count", cfg.ctu_count, "exact_area | ceil_grid" )
    ->check( CLI::IsMember( { "exact_area", "ceil_grid" } ) );
  cmd.add_option( "--fps", cfg.fps, "frame rate for the throughput figure" )->check( CLI::PositiveNumber );
  cmd.add_option( "--max-quarter", cfg.max_quarter, "clamp of the fractional offset (2 or 3 quarters)" )
    ->check( CLI::Range( 2, 3 ) );
  cmd.add_flag( "--chain-context", cfg.chain_context, "feed neighboring CTUs' edge MVs into the predictor grid" );
  cmd.add_option( "-o,--output", cfg.output, "output file (stdout when omitted)" );
}

fme::CtuConfig ctu_config( const RunConfig& cfg )
{
  fme::CtuConfig c;
  c.search.range  = cfg.range;
  c.search.metric = fme::parse_metric( cfg.metric );
  c.lambda = cfg.lambda_q16 >= 0 ? fme::LambdaFixed{ static_cast<uint64_t>( cfg.lambda_q16 ) }
                                 : fme::LambdaFixed::from_qp( cfg.qp );
  c.refine.max_quarter = cfg.max_quarter;
  return c;
}

struct FramePair
{
  fme::Plane orig;
  fme::Plane ref;  // carries a margin wide enough for every search window
};

FramePair load_pair( const RunConfig& cfg )
{
  const fme::RawFormat fmt = fme::parse_raw_format( cfg.format );
  FME_CHECK( cfg.width >= 8 && cfg.height >= 8, InvalidArgument, "frames must be at least 8x8" );
  auto orig = fme::load_raw_frames( cfg.orig_path, cfg.width, cfg.height, fmt, cfg.orig_frame + 1 );
  auto ref  = fme::load_raw_frames( cfg.ref_path, cfg.width, cfg.height, fmt, cfg.ref_frame + 1 );
  // integer window + 1 pel for the 3x3 grid, + 1 for the oracle's +-3 quarters, + 1 bilinear tap
  const int margin = cfg.range + 3;
  return { std::move( orig[static_cast<std::size_t>( cfg.orig_frame )] ),
           ref[static_cast<std::size_t>( cfg.ref_frame )].with_margin( margin ) };
}

// Runs every full CTU of the frame in raster order.
template<typename Visit>
void for_each_ctu( const FramePair& fp, const RunConfig& cfg, const fme::CuSizeSet& sizes, const fme::CtuConfig& ccfg,
                   Visit&& visit )
{
  const int cols = fp.orig.width() / fme::kCtuSize;
  const int rows = fp.orig.height() / fme::kCtuSize;
  std::vector<fme::MvGrid> previous_row( static_cast<std::size_t>( cols ) );
  for( int cy = 0; cy < rows; cy++ )
  {
    std::optional<fme::MvGrid> left;
    for( int cx = 0; cx < cols; cx++ )
    {
      std::optional<fme::MvContext> ctx;
      if( cfg.chain_context )
      {
        fme::MvContext c;
        if( left )
        {
          c.left_column = left->right_column();
        }
        if( cy > 0 )
        {
          c.top_row = previous_row[static_cast<std::size_t>( cx )].bottom_row();
        }
        ctx = c;
      }
      fme::CtuPass pass = fme::run_ctu( fp.orig, fp.ref, cx * fme::kCtuSize, cy * fme::kCtuSize, sizes, ccfg, ctx );
      FME_CHECK( pass.unwritten_cmvp_reads == 0, Invariant, "CMVP read an MV grid slot before it was written" );
      visit( pass );
      left = pass.grid;
      previous_row[static_cast<std::size_t>( cx )] = pass.grid;
    }
  }
  log_info( "processed " + std::to_string( cols * rows ) + " CTUs" );
}

void emit( const RunConfig& cfg, const std::string& text )
{
  if( cfg.output.empty() )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( cfg.output, std::ios::binary );
  FME_CHECK( out.good(), Io, "cannot create '" + cfg.output + "'" );
  out << text;
  FME_CHECK( out.good(), Io, "write error in '" + cfg.output + "'" );
}

int cmd_estimate( const RunConfig& cfg )
{
  const FramePair fp           = load_pair( cfg );
  const fme::CuSizeSet sizes   = fme::cu_size_set( fme::parse_size_mode( cfg.sizes ) );
  const fme::CtuConfig ccfg    = ctu_config( cfg );
  fme::ScheduleReport report   = fme::make_schedule_report( sizes, cfg.width, cfg.height, cfg.fps,
                                                            fme::parse_ctu_count_mode( cfg.ctu_count ) );
  for_each_ctu( fp, cfg, sizes, ccfg, [&]( const fme::CtuPass& pass ) {
    report.records.insert( report.records.end(), pass.records.begin(), pass.records.end() );
  } );
  std::sort( report.records.begin(), report.records.end(), fme::canonical_less );

  if( cfg.out_format == "csv" )
  {
    std::ostringstream os;
    fme::write_csv( os, report, cfg.orig_frame );
    emit( cfg, os.str() );
  }
  else
  {
    emit( cfg, fme::to_json( report, cfg.orig_frame ).dump( 1 ) + "\n" );
  }
  return kExitOk;
}

std::optional<fme::MotionVector> parse_mv( const std::string& text )
{
  if( text.empty() )
  {
    return std::nullopt;
  }
  std::istringstream is( text );
  fme::MotionVector mv;
  char comma = 0;
  is >> mv.x >> comma >> mv.y;
  FME_CHECK( !is.fail() && comma == ',' && is.peek() == std::char_traits<char>::eof(), InvalidArgument,
             "expected a quarter-pel MV as 'x,y', got '" + text + "'" );
  return mv;
}

int cmd_evaluate( const RunConfig& cfg )
{
  const auto truth           = parse_mv( cfg.truth_mv );
  const FramePair fp         = load_pair( cfg );
  const fme::CuSizeSet sizes = fme::cu_size_set( fme::parse_size_mode( cfg.sizes ) );
  const fme::CtuConfig ccfg  = ctu_config( cfg );

  fme::EvaluationSummary total;
  total.has_truth = truth.has_value();
  for_each_ctu( fp, cfg, sizes, ccfg, [&]( const fme::CtuPass& pass ) {
    total.merge( fme::evaluate_pass( fp.orig, fp.ref, pass, ccfg.lambda, truth ) );
  } );

  nlohmann::ordered_json j;
  j["cus"]        = total.surface.count;
  j["lambda_q16"] = ccfg.lambda.q16;
  if( truth )
  {
    j["truth_mv"] = { truth->x, truth->y };
  }
  j["methods"] = fme::to_json( total );
  emit( cfg, j.dump( 1 ) + "\n" );
  return kExitOk;
}

struct ScheduleArgs
{
  std::string sizes     = "full";
  int width             = 3840;
  int height            = 2160;
  int fps               = 30;
  std::string ctu_count = "exact_area";
  bool json             = false;
  std::string output;
};

int cmd_schedule( const ScheduleArgs& a )
{
  const fme::CuSizeSet sizes = fme::cu_size_set( fme::parse_size_mode( a.sizes ) );
  const fme::CtuCountMode mode = fme::parse_ctu_count_mode( a.ctu_count );
  const fme::ScheduleReport r  = fme::make_schedule_report( sizes, a.width, a.height, a.fps, mode );

  nlohmann::ordered_json j;
  j["sizes"]          = a.sizes;
  j["size_count"]     = sizes.size();
  j["frame"]          = { a.width, a.height };
  j["fps"]            = a.fps;
  j["ctu_count_mode"] = fme::to_string( mode );
  j["cycles_per_ctu"] = r.cycles_per_ctu;
  j["ctus_per_frame"] = fme::to_json( r.ctus_per_frame );
  j["required_hz"]    = fme::to_json( r.required_hz );
  j["required_mhz"]   = fme::fixed6( r.required_hz.to_double() / 1e6 );

  if( !a.output.empty() )
  {
    std::ofstream out( a.output, std::ios::binary );
    FME_CHECK( out.good(), Io, "cannot create '" + a.output + "'" );
    out << j.dump( 1 ) << '\n';
  }
  if( a.json )
  {
    std::cout << j.dump( 1 ) << '\n';
    return kExitOk;
  }

  std::ostringstream os;
  os << std::fixed << std::setprecision( 1 );
  os << "sizes            " << a.sizes << " (" << sizes.size() << ")\n";
  os << "frame            " << a.width << "x" << a.height << " @ " << a.fps << " fps\n";
  os << "cycles_per_ctu   " << r.cycles_per_ctu << "\n";
  os << "ctus_per_frame   " << r.ctus_per_frame.num << "/" << r.ctus_per_frame.den << " ("
     << std::setprecision( 2 ) << r.ctus_per_frame.to_double() << ", " << fme::to_string( mode ) << ")\n";
  os << "required_hz      " << r.required_hz.num;
  if( r.required_hz.den != 1 )
  {
    os << "/" << r.required_hz.den;
  }
  os << " (" << std::setprecision( 1 ) << r.required_hz.to_double() / 1e6 << " MHz)\n";
  std::cout << os.str();
  return kExitOk;
}

int cmd_selftest( int iterations )
{
  bool ok = true;
  for( const auto& c : fme::run_selftest( iterations ) )
  {
    std::cout << ( c.passed ? "PASS " : "FAIL " ) << c.name << ": " << c.detail << '\n';
    ok = ok && c.passed;
  }
  return ok ? kExitOk : kExitInvariant;
}

int exit_code_for( fme::ErrorKind kind )
{
  switch( kind )
  {
  case fme::ErrorKind::InvalidArgument: return kExitUsage;
  case fme::ErrorKind::Io:              return kExitIo;
  default:                              return kExitInvariant;
  }
}

}  // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Interpolation-free fractional motion estimation model" };
  app.set_config( "--config", "", "TOML file with option defaults; command-line flags win" );
  app.require_subcommand( 1 );

  RunConfig est_cfg;
  CLI::App* estimate = app.add_subcommand( "estimate", "per-CU integer and quarter-pel MVs for a frame pair" );
  add_run_options( *estimate, est_cfg );
  estimate->add_option( "--out-format", est_cfg.out_format, "json | csv" )
    ->check( CLI::IsMember( { "json", "csv" } ) );

  RunConfig eval_cfg;
  CLI::App* evaluate = app.add_subcommand( "evaluate", "compare the surface path against interpolating searches" );
  add_run_options( *evaluate, eval_cfg );
  evaluate->add_option( "--truth-mv", eval_cfg.truth_mv, "known displacement of synthetic content, quarter-pel 'x,y'" );

  ScheduleArgs sched;
  CLI::App* schedule = app.add_subcommand( "schedule", "cycles per CTU and required clock" );
  schedule->add_option( "--sizes", sched.sizes, "full | quadtree" )->check( CLI::IsMember( { "full", "quadtree" } ) );
  schedule->add_option( "--width", sched.width, "frame width" )->check( CLI::PositiveNumber );
  schedule->add_option( "--height", sched.height, "frame height" )->check( CLI::PositiveNumber );
  schedule->add_option( "--fps", sched.fps, "frames per second" )->check( CLI::PositiveNumber );
  schedule->add_option( "--ctu-count", sched.ctu_count, "exact_area | ceil_grid" )
    ->check( CLI::IsMember( { "exact_area", "ceil_grid" } ) );
  schedule->add_flag( "--json", sched.json, "print JSON instead of the table" );
  schedule->add_option( "-o,--output", sched.output, "also write JSON to this file" );

  int iterations = 10000;
  CLI::App* selftest = app.add_subcommand( "selftest", "run the invariant suites" );
  selftest->add_option( "--iterations", iterations, "random cases per suite" )->check( CLI::PositiveNumber );

  try
  {
    app.parse( argc, argv );
  }
  catch( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch( const CLI::ParseError& e )
  {
    std::cerr << "fme: error[usage]: " << e.what() << '\n';
    return kExitUsage;
  }

  try
  {
    if( estimate->parsed() )
    {
      return cmd_estimate( est_cfg );
    }
    if( evaluate->parsed() )
    {
      return cmd_evaluate( eval_cfg );
    }
    if( schedule->parsed() )
    {
      return cmd_schedule( sched );
    }
    return cmd_selftest( iterations );
  }
  catch( const fme::Error& e )
  {
    std::cerr << "fme: error[" << fme::to_string( e.kind() ) << "]: " << e.what() << '\n';
    return exit_code_for( e.kind() );
  }
  catch( const std::exception& e )
  {
    std::cerr << "fme: error[internal]: " << e.what() << '\n';
    return kExitInvariant;
  }
}
