#pragma once

#include "fme/cmvp_grid.hpp"
#include "fme/ime.hpp"
#include "fme/pixel_io.hpp"
#include "fme/rate_cost.hpp"
#include "fme/surface.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace fme
{

struct CuSize
{
  int w = 8;
  int h = 8;

  bool operator==( const CuSize& ) const = default;
};

using CuSizeSet = std::vector<CuSize>;

enum class SizeMode
{
  Full,      // 13 sizes: squares and 2:1 rectangles from 128x128 down to 8x8
  Quadtree,  // 5 squares
};

SizeMode parse_size_mode( std::string_view name );
const char* to_string( SizeMode m );

CuSizeSet cu_size_set( SizeMode mode );

/// Morton index of an 8x8 position: x on even bits, y on odd bits.
int z_index( GridPos pos );
GridPos z_position( int index );

struct Task
{
  GridPos pos;
  CuSize size;
  int size_index = 0;
  CuRect cu;                   // CU containing `pos` for this size
  bool is_last_block = false;  // pos is the CU's bottom-right 8x8 block
};

/// Z-scan over the 16x16 positions; at each position one task per size in set order.
std::vector<Task> task_order( const CuSizeSet& sizes );

struct PipelineTiming
{
  int cycles_per_block     = 8;   // 8x1 pixels per cycle through each SATD kernel
  int first_output_latency = 12;  // first FMV leaves the pipeline 12 cycles after the first block enters
};

/// (latency - cycles_per_block) + cycles_per_block * |sizes| * 256
uint64_t cycle_count( const CuSizeSet& sizes, const PipelineTiming& timing = {} );

struct PipelineTrace
{
  uint64_t total_cycles       = 0;
  uint64_t first_output_cycle = 0;
  uint64_t outputs            = 0;
};

/// Discrete-event run of `tasks` blocks through the kernel stage and the fit/output stage.
PipelineTrace simulate_pipeline( uint64_t tasks, const PipelineTiming& timing = {} );

struct Rational
{
  int64_t num = 0;
  int64_t den = 1;

  static Rational make( int64_t num, int64_t den );
  double to_double() const { return static_cast<double>( num ) / static_cast<double>( den ); }

  Rational operator*( const Rational& o ) const;
  bool operator==( const Rational& ) const = default;
};

enum class CtuCountMode
{
  ExactArea,  // frame_w * frame_h / 128^2
  CeilGrid,   // ceil(frame_w / 128) * ceil(frame_h / 128)
};

CtuCountMode parse_ctu_count_mode( std::string_view name );
const char* to_string( CtuCountMode m );

Rational ctus_per_frame( int frame_w, int frame_h, CtuCountMode mode );

/// cycle_count * ctus_per_frame * fps, in Hz.
Rational required_frequency( const CuSizeSet& sizes, int frame_w, int frame_h, int fps, CtuCountMode mode );

struct CtuConfig
{
  SearchConfig search;
  LambdaFixed lambda;
  RefineOptions refine;
};

/// Outcome for one CU of one size.
struct CuRecord
{
  int ctu_x = 0, ctu_y = 0;  // CTU origin in frame pixels
  CuRect cu;                 // relative to the CTU
  int size_index = 0;
  MotionVector imv;
  MotionVector mvp;
  QuarterPelOffset offset;
  MotionVector mv;  // imv + offset
  CostGrid3x3 costs;

  bool operator==( const CuRecord& ) const = default;
};

/// Canonical record order: CTU raster, z-scan of the CU's top-left block, size index.
bool canonical_less( const CuRecord& a, const CuRecord& b );

struct CtuPass
{
  std::vector<CuRecord> records;  // canonical order
  MvGrid grid;
  int unwritten_cmvp_reads = 0;   // in-CTU CMVP candidates read before being written
  uint64_t satd8x8_calls   = 0;
};

/**
  One CTU through the interlaced schedule: per task, nine 8x8 SATDs (the IMV and its eight integer
  neighbors) are accumulated for the task's CU; on the CU's last block the rate terms against the
  CMVP are added, the surface is fitted and the quarter-pel MV emitted. 8x8 CUs record their MV
  into the grid so later CUs can use it as predictor.
*/
CtuPass run_ctu( const Plane& orig, const Plane& ref, int ctu_x, int ctu_y, const CuSizeSet& sizes,
                 const CtuConfig& cfg, const std::optional<MvContext>& context = std::nullopt );

struct ScheduleReport
{
  uint64_t cycles_per_ctu = 0;
  Rational ctus_per_frame;
  Rational required_hz;
  std::vector<CuRecord> records;
};

ScheduleReport make_schedule_report( const CuSizeSet& sizes, int frame_w, int frame_h, int fps, CtuCountMode mode );

}  // namespace fme
