#include <hanging/error.hpp>
#include <hanging/formula.hpp>
#include <hanging/sortnet.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace hanging
{

namespace
{

enum class token_kind
{
  variable,
  number,
  kw_true,
  kw_false,
  kw_atleast,
  op_and,
  op_or,
  lparen,
  rparen,
  comma,
  semicolon,
  end
};

struct token
{
  token_kind kind;
  std::size_t position;
  long long value = 0;
};

std::vector<token> tokenize( std::string_view text )
{
  std::vector<token> tokens;
  std::size_t i = 0;
  const auto read_number = [&]( std::size_t start ) {
    long long v = 0;
    while ( i < text.size() && std::isdigit( static_cast<unsigned char>( text[i] ) ) )
    {
      v = v * 10 + ( text[i] - '0' );
      if ( v > 1'000'000'000 )
      {
        throw parse_error( "number too large", start );
      }
      ++i;
    }
    return v;
  };
  while ( i < text.size() )
  {
    const char ch = text[i];
    const auto start = i;
    if ( std::isspace( static_cast<unsigned char>( ch ) ) )
    {
      ++i;
      continue;
    }
    if ( std::isdigit( static_cast<unsigned char>( ch ) ) )
    {
      tokens.push_back( { token_kind::number, start, read_number( start ) } );
      continue;
    }
    if ( std::isalpha( static_cast<unsigned char>( ch ) ) )
    {
      while ( i < text.size() && std::isalnum( static_cast<unsigned char>( text[i] ) ) )
      {
        ++i;
      }
      const auto ident = text.substr( start, i - start );
      if ( ident == "true" )
      {
        tokens.push_back( { token_kind::kw_true, start } );
      }
      else if ( ident == "false" )
      {
        tokens.push_back( { token_kind::kw_false, start } );
      }
      else if ( ident == "atleast" )
      {
        tokens.push_back( { token_kind::kw_atleast, start } );
      }
      else if ( ident.size() >= 2 && ident[0] == 'r' &&
                ident.find_first_not_of( "0123456789", 1 ) == std::string_view::npos )
      {
        if ( ident[1] == '0' )
        {
          throw parse_error( "variable index must be >= 1 without leading zeros", start + 1 );
        }
        if ( ident.size() > 10 )
        {
          throw parse_error( "variable index too large", start + 1 );
        }
        tokens.push_back( { token_kind::variable, start, std::stoll( std::string( ident.substr( 1 ) ) ) } );
      }
      else
      {
        throw parse_error( "unknown identifier '" + std::string( ident ) + "'", start );
      }
      continue;
    }
    token_kind kind;
    switch ( ch )
    {
    case '&':
      kind = token_kind::op_and;
      break;
    case '|':
      kind = token_kind::op_or;
      break;
    case '(':
      kind = token_kind::lparen;
      break;
    case ')':
      kind = token_kind::rparen;
      break;
    case ',':
      kind = token_kind::comma;
      break;
    case ';':
      kind = token_kind::semicolon;
      break;
    default:
      throw parse_error( std::string( "unexpected character '" ) + ch + "'", start );
    }
    tokens.push_back( { kind, start } );
    ++i;
  }
  tokens.push_back( { token_kind::end, text.size() } );
  return tokens;
}

class parser
{
public:
  parser( std::vector<token> tokens, monotone_circuit& c ) : tokens_( std::move( tokens ) ), c_( c ) {}

  node_id parse()
  {
    const auto root = parse_or();
    if ( peek().kind != token_kind::end )
    {
      throw parse_error( "unexpected token after formula", peek().position );
    }
    return root;
  }

private:
  const token& peek() const { return tokens_[pos_]; }
  const token& next() { return tokens_[pos_++]; }

  const token& expect( token_kind kind, const char* what )
  {
    if ( peek().kind != kind )
    {
      throw parse_error( std::string( "expected " ) + what, peek().position );
    }
    return next();
  }

  node_id parse_or()
  {
    auto lhs = parse_and();
    while ( peek().kind == token_kind::op_or )
    {
      next();
      lhs = c_.add_or( lhs, parse_and() );
    }
    return lhs;
  }

  node_id parse_and()
  {
    auto lhs = parse_primary();
    while ( peek().kind == token_kind::op_and )
    {
      next();
      lhs = c_.add_and( lhs, parse_primary() );
    }
    return lhs;
  }

  node_id parse_primary()
  {
    const auto& t = next();
    switch ( t.kind )
    {
    case token_kind::variable:
      if ( t.value > c_.n() )
      {
        throw parse_error( "variable r" + std::to_string( t.value ) + " exceeds n = " + std::to_string( c_.n() ),
                           t.position );
      }
      return c_.add_input( static_cast<int>( t.value ) );
    case token_kind::kw_true:
      return c_.add_constant( true );
    case token_kind::kw_false:
      return c_.add_constant( false );
    case token_kind::lparen:
    {
      const auto inner = parse_or();
      expect( token_kind::rparen, "')'" );
      return inner;
    }
    case token_kind::kw_atleast:
    {
      expect( token_kind::lparen, "'(' after atleast" );
      const auto& k = expect( token_kind::number, "threshold count" );
      expect( token_kind::semicolon, "';' after threshold count" );
      std::vector<node_id> args{ parse_or() };
      while ( peek().kind == token_kind::comma )
      {
        next();
        args.push_back( parse_or() );
      }
      expect( token_kind::rparen, "')' closing atleast" );
      if ( k.value < 1 || k.value > static_cast<long long>( args.size() ) )
      {
        throw parse_error( "atleast count " + std::to_string( k.value ) + " outside 1.." +
                               std::to_string( args.size() ),
                           k.position );
      }
      return add_threshold( c_, static_cast<int>( k.value ), args );
    }
    case token_kind::end:
      throw parse_error( "unexpected end of formula", t.position );
    default:
      throw parse_error( "expected a variable, constant, atleast or '('", t.position );
    }
  }

  std::vector<token> tokens_;
  std::size_t pos_ = 0;
  monotone_circuit& c_;
};

} // namespace

monotone_circuit parse_formula( std::string_view text, int n )
{
  if ( n < 0 )
  {
    throw std::invalid_argument( "variable count must be non-negative" );
  }
  auto tokens = tokenize( text );
  if ( n == 0 )
  {
    for ( const auto& t : tokens )
    {
      if ( t.kind == token_kind::variable )
      {
        n = std::max( n, static_cast<int>( t.value ) );
      }
    }
  }
  monotone_circuit c( n );
  parser p( std::move( tokens ), c );
  c.set_output( p.parse() );
  return c;
}

} // namespace hanging
