#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hanging
{

/* Malformed text input: word tokens, formulas, JSON specs. */
class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& what, std::size_t position )
      : std::runtime_error( what + " at position " + std::to_string( position ) ),
        position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/* An exhaustive enumeration was asked to go past its configured size. */
class limit_exceeded : public std::runtime_error
{
public:
  limit_exceeded( const std::string& what, int limit )
      : std::runtime_error( what + " (exhaustive limit is n = " + std::to_string( limit ) + ")" ),
        limit_( limit )
  {
  }

  int limit() const noexcept { return limit_; }

private:
  int limit_;
};

/* A construction would emit more letters than the configured budget. */
class budget_exceeded : public std::runtime_error
{
public:
  budget_exceeded( std::uint64_t estimate, std::uint64_t budget )
      : std::runtime_error( "estimated length " + std::to_string( estimate ) + " exceeds letter budget " +
                            std::to_string( budget ) ),
        estimate_( estimate ),
        budget_( budget )
  {
  }

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

/* The requested fall function cannot be the fall function of any hanging. */
class unrealizable : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace hanging
