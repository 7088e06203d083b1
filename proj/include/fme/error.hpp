#pragma once

#include <stdexcept>
#include <string>

namespace fme
{

enum class ErrorKind
{
  InvalidArgument,  // bad configuration or malformed input values
  Io,               // file missing, unreadable or too short
  Window,           // a block or search window leaves the readable plane area
  Contract,         // a caller broke an operation's precondition
  Invariant,        // internal consistency check failed
};

class Error : public std::runtime_error
{
public:
  Error( ErrorKind kind, const std::string& msg ) : std::runtime_error( msg ), m_kind( kind ) {}

  ErrorKind kind() const { return m_kind; }

private:
  ErrorKind m_kind;
};

const char* to_string( ErrorKind kind );

}  // namespace fme

#define FME_CHECK( cond, kind, msg )                   \
  do                                                   \
  {                                                    \
    if( !( cond ) )                                    \
    {                                                  \
      throw ::fme::Error( ::fme::ErrorKind::kind, msg ); \
    }                                                  \
  } while( 0 )
