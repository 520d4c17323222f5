#include <hanging/render.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace hanging
{

namespace
{

constexpr int cell = 4;

struct wrap_counts
{
  std::size_t cw = 0;
  std::size_t ccw = 0;
};

std::vector<wrap_counts> count_wraps( const word& w, int n )
{
  std::vector<wrap_counts> counts( static_cast<std::size_t>( n ) + 1u );
  for ( auto l : w.letters() )
  {
    auto& c = counts[static_cast<std::size_t>( l.nail() )];
    ( l.is_clockwise() ? c.cw : c.ccw ) += 1u;
  }
  return counts;
}

void legend_lines( std::ostream& os, const word& w, int n, const char* prefix, const char* suffix )
{
  const auto counts = count_wraps( w, n );
  os << prefix << w.size() << ( w.size() == 1u ? " letter" : " letters" ) << suffix;
  for ( int i = 1; i <= n; ++i )
  {
    const auto& c = counts[static_cast<std::size_t>( i )];
    os << prefix << "nail " << i << ": " << ( c.cw + c.ccw ) << " wraps (" << c.cw << " cw, " << c.ccw << " ccw)"
       << suffix;
  }
}

std::string pad( std::string s, std::size_t width )
{
  if ( s.size() < width )
  {
    s.insert( 0, width - s.size(), ' ' );
  }
  return s;
}

std::string render_text( const word& w, int n )
{
  std::ostringstream os;
  const auto label_width = std::to_string( w.size() ).size() + 2u;
  const std::string margin( label_width, ' ' );
  os << margin;
  for ( int i = 1; i <= n; ++i )
  {
    os << pad( std::to_string( i ), cell );
  }
  os << '\n' << margin;
  for ( int i = 1; i <= n; ++i )
  {
    os << pad( "O", cell );
  }
  os << '\n';
  std::size_t row = 0;
  for ( auto l : w.letters() )
  {
    ++row;
    os << pad( std::to_string( row ), label_width - 2u ) << "  ";
    for ( int i = 1; i <= n; ++i )
    {
      os << pad( i == l.nail() ? ( l.is_clockwise() ? ">" : "<" ) : "|", cell );
    }
    os << "   " << ( l.is_clockwise() ? 'x' : 'X' ) << l.nail() << ( l.is_clockwise() ? " cw" : " ccw" ) << '\n';
  }
  legend_lines( os, w, n, "", "\n" );
  return os.str();
}

std::string render_svg( const word& w, int n )
{
  constexpr int spacing = 60;
  constexpr int top = 40;
  constexpr int row = 30;
  constexpr int radius = 10;
  const int width = spacing * ( n + 1 );
  const int rope_bottom = top + row * ( static_cast<int>( w.size() ) + 1 );
  const int legend_top = rope_bottom + 30;
  const int height = legend_top + 20 * ( n + 1 ) + 10;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  for ( int i = 1; i <= n; ++i )
  {
    const int x = spacing * i;
    os << "  <line x1=\"" << x << "\" y1=\"" << top << "\" x2=\"" << x << "\" y2=\"" << rope_bottom
       << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    os << "  <circle cx=\"" << x << "\" cy=\"" << top << "\" r=\"5\" fill=\"black\"/>\n";
    os << "  <text x=\"" << x << "\" y=\"" << ( top - 12 ) << "\" text-anchor=\"middle\" font-size=\"12\">" << i
       << "</text>\n";
  }

  if ( !w.empty() )
  {
    /* start left of the first nail, one loop per letter, end below the last */
    os << "  <path fill=\"none\" stroke=\"#b03020\" stroke-width=\"2\" d=\"M " << ( spacing / 2 ) << ' ' << top;
    int y = top;
    for ( auto l : w.letters() )
    {
      y += row;
      const int cx = spacing * l.nail();
      const int sweep = l.is_clockwise() ? 1 : 0;
      /* enter on the left of the nail, go around it and leave on the left */
      os << " L " << ( cx - radius ) << ' ' << y;
      os << " A " << radius << ' ' << radius << " 0 1 " << sweep << ' ' << ( cx + radius ) << ' ' << y;
      os << " A " << radius << ' ' << radius << " 0 1 " << sweep << ' ' << ( cx - radius ) << ' ' << y;
    }
    os << " L " << ( spacing / 2 ) << ' ' << rope_bottom << "\"/>\n";
    y = top;
    for ( auto l : w.letters() )
    {
      y += row;
      os << "  <text x=\"" << ( spacing * l.nail() + radius + 4 ) << "\" y=\"" << ( y + 4 )
         << "\" font-size=\"10\">" << ( l.is_clockwise() ? 'x' : 'X' ) << l.nail()
         << ( l.is_clockwise() ? " cw" : " ccw" ) << "</text>\n";
    }
  }

  std::ostringstream legend;
  legend_lines( legend, w, n, "", "\n" );
  std::istringstream lines( legend.str() );
  std::string line;
  int y = legend_top;
  while ( std::getline( lines, line ) )
  {
    os << "  <text x=\"10\" y=\"" << y << "\" font-size=\"12\">" << line << "</text>\n";
    y += 20;
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace

diagram_format parse_diagram_format( const std::string& name )
{
  if ( name == "svg" )
  {
    return diagram_format::svg;
  }
  if ( name == "text" )
  {
    return diagram_format::text;
  }
  throw std::invalid_argument( "unsupported diagram format '" + name + "' (expected svg or text)" );
}

std::string to_diagram( const word& w, int n, diagram_format format )
{
  if ( n < 0 || w.max_nail() > n )
  {
    throw std::invalid_argument( "diagram needs n >= the largest nail in the word" );
  }
  return format == diagram_format::svg ? render_svg( w, n ) : render_text( w, n );
}

} // namespace hanging
