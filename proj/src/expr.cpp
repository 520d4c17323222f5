#include <hanging/expr.hpp>

#include <utility>
#include <vector>

namespace hanging
{

struct expr::node
{
  enum class kind : std::uint8_t
  {
    leaf,
    concat,
    inverse,
    power
  };

  kind k = kind::leaf;
  word leaf;
  std::shared_ptr<const node> lhs;
  std::shared_ptr<const node> rhs;
  long exponent = 1;
  std::uint64_t length = 0u;
};

expr::expr() : expr( word{} ) {}

expr::expr( word w )
{
  auto n = std::make_shared<node>();
  n->k = node::kind::leaf;
  n->length = w.size();
  n->leaf = std::move( w );
  root_ = std::move( n );
}

expr::expr( letter l ) : expr( word( std::vector<letter>{ l } ) ) {}

expr::expr( std::shared_ptr<const node> root ) : root_( std::move( root ) ) {}

std::uint64_t expr::length() const noexcept
{
  return root_->length;
}

expr expr::inverse() const
{
  if ( root_->k == node::kind::inverse )
  {
    return expr( root_->lhs );
  }
  auto n = std::make_shared<node>();
  n->k = node::kind::inverse;
  n->lhs = root_;
  n->length = root_->length;
  return expr( std::move( n ) );
}

expr expr::pow( long k ) const
{
  auto n = std::make_shared<node>();
  n->k = node::kind::power;
  n->lhs = root_;
  n->exponent = k;
  n->length = sat_mul( root_->length, static_cast<std::uint64_t>( k < 0 ? -k : k ) );
  return expr( std::move( n ) );
}

expr operator*( const expr& a, const expr& b )
{
  auto n = std::make_shared<expr::node>();
  n->k = expr::node::kind::concat;
  n->lhs = a.root_;
  n->rhs = b.root_;
  n->length = sat_add( a.root_->length, b.root_->length );
  return expr( std::move( n ) );
}

template<class Sink>
void expr::walk( Sink&& sink ) const
{
  struct frame
  {
    const node* n;
    bool inverted;
  };
  std::vector<frame> stack{ { root_.get(), false } };
  while ( !stack.empty() )
  {
    const auto [n, inverted] = stack.back();
    stack.pop_back();
    switch ( n->k )
    {
    case node::kind::leaf:
    {
      const auto letters = n->leaf.letters();
      if ( inverted )
      {
        for ( auto it = letters.rbegin(); it != letters.rend(); ++it )
        {
          sink( it->inverse() );
        }
      }
      else
      {
        for ( auto l : letters )
        {
          sink( l );
        }
      }
      break;
    }
    case node::kind::concat:
      /* (ab)^-1 = b^-1 a^-1; the stack pops in reverse push order */
      if ( inverted )
      {
        stack.push_back( { n->lhs.get(), true } );
        stack.push_back( { n->rhs.get(), true } );
      }
      else
      {
        stack.push_back( { n->rhs.get(), false } );
        stack.push_back( { n->lhs.get(), false } );
      }
      break;
    case node::kind::inverse:
      stack.push_back( { n->lhs.get(), !inverted } );
      break;
    case node::kind::power:
    {
      const bool flip = n->exponent < 0 ? !inverted : inverted;
      const auto reps = n->exponent < 0 ? -n->exponent : n->exponent;
      for ( long i = 0; i < reps; ++i )
      {
        stack.push_back( { n->lhs.get(), flip } );
      }
      break;
    }
    }
  }
}

word expr::flatten() const
{
  std::vector<letter> out;
  out.reserve( static_cast<std::size_t>( length() ) );
  walk( [&out]( letter l ) { out.push_back( l ); } );
  return word( std::move( out ) );
}

word expr::reduced() const
{
  std::vector<letter> stack;
  walk( [&stack]( letter l ) {
    if ( !stack.empty() && stack.back().value() == -l.value() )
    {
      stack.pop_back();
    }
    else
    {
      stack.push_back( l );
    }
  } );
  return reduce( word( std::move( stack ) ) );
}

expr commutator( const expr& a, const expr& b )
{
  return a * b * a.inverse() * b.inverse();
}

} // namespace hanging
