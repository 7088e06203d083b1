#pragma once

#include "fme/distortion.hpp"
#include "fme/motion_vector.hpp"
#include "fme/pixel_io.hpp"

#include <string_view>

namespace fme
{

enum class Metric
{
  Sad,
  Satd,
};

Metric parse_metric( std::string_view name );
const char* to_string( Metric m );

struct SearchConfig
{
  int range     = 8;  // half-width of the window in integer pels
  Metric metric = Metric::Sad;
};

struct ImeResult
{
  MotionVector mv;  // integer-pel, quarter-pel units
  Distortion cost;
};

/// Integer samples needed around a block for a full search plus the surrounding 3x3 cost grid.
int ime_margin( const SearchConfig& cfg );

/**
  Exhaustive integer search over center +- range pels. Ties go to the smaller |mv_x| + |mv_y|,
  then smaller mv_y, then smaller mv_x. Every candidate window widened by one pel must lie in the
  readable area of `ref`, otherwise a Window error is thrown.
*/
ImeResult full_search( const BlockView& orig, const Plane& ref, const MotionVector& center, const SearchConfig& cfg );

}  // namespace fme
