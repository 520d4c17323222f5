#include <hanging/error.hpp>
#include <hanging/word.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace hanging
{

namespace
{

bool cancels( letter a, letter b ) noexcept
{
  return a.value() == -b.value();
}

bool check_reduced( std::span<const letter> letters ) noexcept
{
  for ( std::size_t i = 1; i < letters.size(); ++i )
  {
    if ( cancels( letters[i - 1], letters[i] ) )
    {
      return false;
    }
  }
  return true;
}

bool removed( letter l, std::uint64_t mask ) noexcept
{
  const auto nail = l.nail();
  return nail <= 64 && ( ( mask >> ( nail - 1 ) ) & 1u ) != 0u;
}

} // namespace

letter letter::from_signed( std::int32_t value )
{
  if ( value == 0 )
  {
    throw std::invalid_argument( "letter value must be nonzero" );
  }
  return letter( value );
}

letter letter::clockwise( int nail )
{
  if ( nail < 1 )
  {
    throw std::invalid_argument( "nail index must be >= 1" );
  }
  return letter( nail );
}

letter letter::counterclockwise( int nail )
{
  return clockwise( nail ).inverse();
}

word::word( std::vector<letter> letters )
    : letters_( std::move( letters ) ), reduced_( check_reduced( letters_ ) )
{
}

word::word( std::initializer_list<std::int32_t> values )
    : word( from_signed( std::span<const std::int32_t>( values.begin(), values.size() ) ) )
{
}

word word::from_signed( std::span<const std::int32_t> values )
{
  std::vector<letter> letters;
  letters.reserve( values.size() );
  for ( auto v : values )
  {
    letters.push_back( letter::from_signed( v ) );
  }
  return word( std::move( letters ) );
}

int word::max_nail() const noexcept
{
  int m = 0;
  for ( auto l : letters_ )
  {
    m = std::max( m, l.nail() );
  }
  return m;
}

std::vector<std::int32_t> word::to_signed() const
{
  std::vector<std::int32_t> out;
  out.reserve( letters_.size() );
  for ( auto l : letters_ )
  {
    out.push_back( l.value() );
  }
  return out;
}

bool operator==( const word& a, const word& b )
{
  if ( a.reduced_ && b.reduced_ )
  {
    return a.letters_ == b.letters_;
  }
  return reduce( a ).letters_ == reduce( b ).letters_;
}

nail_subset::nail_subset( int n, std::uint64_t mask ) : n_( n ), mask_( mask )
{
  if ( n < 0 || n > 64 )
  {
    throw std::invalid_argument( "nail count must be in 0..64" );
  }
  if ( n < 64 && ( mask >> n ) != 0u )
  {
    throw std::invalid_argument( "subset contains a nail outside 1.." + std::to_string( n ) );
  }
}

nail_subset nail_subset::of( int n, std::span<const int> members )
{
  std::uint64_t mask = 0u;
  for ( auto m : members )
  {
    if ( m < 1 || m > n )
    {
      throw std::invalid_argument( "nail " + std::to_string( m ) + " outside 1.." + std::to_string( n ) );
    }
    mask |= std::uint64_t{ 1 } << ( m - 1 );
  }
  return nail_subset( n, mask );
}

nail_subset nail_subset::of( int n, std::initializer_list<int> members )
{
  return of( n, std::span<const int>( members.begin(), members.size() ) );
}

nail_subset nail_subset::all( int n )
{
  return nail_subset( n, n == 64 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << n ) - 1u ) );
}

bool nail_subset::contains( int nail ) const noexcept
{
  return nail >= 1 && nail <= n_ && ( ( mask_ >> ( nail - 1 ) ) & 1u ) != 0u;
}

int nail_subset::size() const noexcept
{
  return std::popcount( mask_ );
}

std::vector<int> nail_subset::members() const
{
  std::vector<int> out;
  for ( int i = 1; i <= n_; ++i )
  {
    if ( contains( i ) )
    {
      out.push_back( i );
    }
  }
  return out;
}

std::string nail_subset::to_string() const
{
  std::string s = "{";
  bool first = true;
  for ( auto m : members() )
  {
    if ( !first )
    {
      s += ',';
    }
    s += std::to_string( m );
    first = false;
  }
  return s + "}";
}

word reduce( const word& w )
{
  if ( w.is_reduced() )
  {
    return w;
  }
  std::vector<letter> stack;
  stack.reserve( w.size() );
  for ( auto l : w.letters() )
  {
    if ( !stack.empty() && cancels( stack.back(), l ) )
    {
      stack.pop_back();
    }
    else
    {
      stack.push_back( l );
    }
  }
  return word( std::move( stack ), word::already_reduced_tag{} );
}

word concat( const word& a, const word& b )
{
  std::vector<letter> letters;
  letters.reserve( a.size() + b.size() );
  letters.insert( letters.end(), a.letters().begin(), a.letters().end() );
  letters.insert( letters.end(), b.letters().begin(), b.letters().end() );
  return reduce( word( std::move( letters ) ) );
}

word inverse( const word& w )
{
  std::vector<letter> letters;
  letters.reserve( w.size() );
  for ( auto it = w.letters().rbegin(); it != w.letters().rend(); ++it )
  {
    letters.push_back( it->inverse() );
  }
  return word( std::move( letters ) );
}

word power( const word& w, long k )
{
  const auto base = reduce( k < 0 ? inverse( w ) : w );
  const auto reps = static_cast<std::size_t>( k < 0 ? -k : k );
  std::vector<letter> letters;
  letters.reserve( base.size() * reps );
  for ( std::size_t i = 0; i < reps; ++i )
  {
    letters.insert( letters.end(), base.letters().begin(), base.letters().end() );
  }
  return reduce( word( std::move( letters ) ) );
}

word commutator( const word& a, const word& b )
{
  return concat( concat( a, b ), concat( inverse( a ), inverse( b ) ) );
}

word remove_nails( const word& w, const nail_subset& removed_nails )
{
  std::vector<letter> kept;
  kept.reserve( w.size() );
  for ( auto l : w.letters() )
  {
    if ( !removed( l, removed_nails.mask() ) )
    {
      kept.push_back( l );
    }
  }
  return reduce( word( std::move( kept ) ) );
}

bool falls( const word& w, const nail_subset& removed_nails )
{
  return falls_mask( w.letters(), removed_nails.mask() );
}

std::size_t residual_length( std::span<const letter> letters, std::uint64_t mask )
{
  thread_local std::vector<letter> stack;
  stack.clear();
  for ( auto l : letters )
  {
    if ( removed( l, mask ) )
    {
      continue;
    }
    if ( !stack.empty() && cancels( stack.back(), l ) )
    {
      stack.pop_back();
    }
    else
    {
      stack.push_back( l );
    }
  }
  return stack.size();
}

bool falls_mask( std::span<const letter> letters, std::uint64_t mask )
{
  return residual_length( letters, mask ) == 0u;
}

word parse_word( std::string_view text )
{
  std::vector<letter> letters;
  std::size_t i = 0;
  while ( i < text.size() )
  {
    if ( std::isspace( static_cast<unsigned char>( text[i] ) ) )
    {
      ++i;
      continue;
    }
    const auto start = i;
    const char head = text[i];
    if ( head != 'x' && head != 'X' )
    {
      throw parse_error( std::string( "expected 'x' or 'X', found '" ) + head + "'", start );
    }
    ++i;
    std::int64_t nail = 0;
    const auto digits_start = i;
    while ( i < text.size() && std::isdigit( static_cast<unsigned char>( text[i] ) ) )
    {
      nail = nail * 10 + ( text[i] - '0' );
      if ( nail > 1'000'000'000 )
      {
        throw parse_error( "nail index too large", digits_start );
      }
      ++i;
    }
    if ( i == digits_start )
    {
      throw parse_error( "missing nail index", digits_start );
    }
    if ( text[digits_start] == '0' )
    {
      throw parse_error( "nail index must be >= 1 without leading zeros", digits_start );
    }
    if ( i < text.size() && !std::isspace( static_cast<unsigned char>( text[i] ) ) )
    {
      throw parse_error( std::string( "unexpected character '" ) + text[i] + "'", i );
    }
    const auto n = static_cast<int>( nail );
    letters.push_back( head == 'x' ? letter::clockwise( n ) : letter::counterclockwise( n ) );
  }
  return word( std::move( letters ) );
}

std::string format_word( const word& w )
{
  std::string out;
  out.reserve( w.size() * 3 );
  bool first = true;
  for ( auto l : w.letters() )
  {
    if ( !first )
    {
      out += ' ';
    }
    out += l.is_clockwise() ? 'x' : 'X';
    out += std::to_string( l.nail() );
    first = false;
  }
  return out;
}

std::vector<std::size_t> nail_tallies( const word& w, int n )
{
  std::vector<std::size_t> tallies( static_cast<std::size_t>( std::max( n, w.max_nail() ) ) + 1u, 0u );
  for ( auto l : w.letters() )
  {
    ++tallies[static_cast<std::size_t>( l.nail() )];
  }
  return tallies;
}

} // namespace hanging
