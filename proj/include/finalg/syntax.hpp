/*!
  \file syntax.hpp
  \brief Prefix concrete syntax for terms and polynomials

  Grammar (whitespace is insignificant):

      term     := variable | constant | symbol '(' term (',' term)* ')'
      variable := 'x' digits          (1-based)
      constant := '#' digits          (a carrier value)
      symbol   := identifier | single punctuation glyph

  Example: the term x_1 x_2 + x_3 is written `+(*(x1,x2),x3)`.
*/

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "algebra.hpp"
#include "term.hpp"

namespace finalg
{

/*! \brief Syntax error carrying the 0-based character offset */
class parse_error : public error
{
public:
  parse_error( const std::string& message, std::size_t position )
      : error( message + " at position " + std::to_string( position ) ), position_( position )
  {
  }

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

namespace detail
{

class term_parser
{
public:
  term_parser( std::string_view text, const signature& sig ) : text_( text ), sig_( sig ) {}

  term parse_all()
  {
    auto t = parse_term();
    skip_ws();
    if ( pos_ != text_.size() )
    {
      throw parse_error( "unexpected trailing input '" + std::string( text_.substr( pos_, 8 ) ) + "'", pos_ );
    }
    return t;
  }

private:
  void skip_ws()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::uint64_t parse_digits( std::size_t start, const char* what )
  {
    const auto begin = pos_;
    std::uint64_t v = 0;
    while ( !at_end() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      v = v * 10 + static_cast<std::uint64_t>( text_[pos_] - '0' );
      if ( v > max_table_entries )
      {
        throw parse_error( std::string( "malformed " ) + what + ": number too large", start );
      }
      ++pos_;
    }
    if ( pos_ == begin )
    {
      throw parse_error( std::string( "malformed " ) + what + ": expected digits", start );
    }
    return v;
  }

  term parse_term()
  {
    skip_ws();
    if ( at_end() )
    {
      throw parse_error( "unexpected end of input, expected a term", pos_ );
    }
    const auto start = pos_;
    const auto c = static_cast<unsigned char>( text_[pos_] );

    if ( c == '#' )
    {
      ++pos_;
      const auto v = parse_digits( start, "constant" );
      if ( v >= sig_.carrier_size )
      {
        throw parse_error( "malformed constant: #" + std::to_string( v ) + " is outside the carrier 0.." + std::to_string( sig_.carrier_size - 1 ), start );
      }
      return term::constant( static_cast<value_type>( v ) );
    }

    std::string symbol;
    if ( std::isalpha( c ) || c == '_' )
    {
      while ( !at_end() && ( std::isalnum( static_cast<unsigned char>( text_[pos_] ) ) || text_[pos_] == '_' ) )
      {
        symbol += text_[pos_++];
      }
      if ( symbol[0] == 'x' && symbol.size() > 1 && std::isdigit( static_cast<unsigned char>( symbol[1] ) ) )
      {
        if ( !is_variable_name( symbol ) )
        {
          throw parse_error( "malformed variable '" + symbol + "'", start );
        }
        const auto v = std::stoull( symbol.substr( 1 ) );
        if ( v == 0 || v > max_arity )
        {
          throw parse_error( "malformed variable '" + symbol + "': index must be in 1.." + std::to_string( max_arity ), start );
        }
        return term::var( static_cast<std::uint32_t>( v ) );
      }
    }
    else if ( std::ispunct( c ) && c != '(' && c != ')' && c != ',' )
    {
      symbol = std::string( 1, static_cast<char>( c ) );
      ++pos_;
    }
    else
    {
      throw parse_error( std::string( "unexpected character '" ) + static_cast<char>( c ) + "'", start );
    }

    const auto arity = sig_.arity_of( symbol );
    if ( !arity )
    {
      throw parse_error( "unknown symbol '" + symbol + "'", start );
    }

    skip_ws();
    if ( at_end() || text_[pos_] != '(' )
    {
      throw parse_error( "expected '(' after symbol '" + symbol + "'", pos_ );
    }
    ++pos_;
    std::vector<term> children;
    while ( true )
    {
      children.push_back( parse_term() );
      skip_ws();
      if ( at_end() )
      {
        throw parse_error( "unexpected end of input, expected ',' or ')'", pos_ );
      }
      if ( text_[pos_] == ',' )
      {
        ++pos_;
        continue;
      }
      if ( text_[pos_] == ')' )
      {
        ++pos_;
        break;
      }
      throw parse_error( std::string( "expected ',' or ')', found '" ) + text_[pos_] + "'", pos_ );
    }
    if ( children.size() != *arity )
    {
      throw parse_error( "arity mismatch: '" + symbol + "' expects " + std::to_string( *arity ) + " argument(s), got " + std::to_string( children.size() ), start );
    }
    return term::apply( std::move( symbol ), std::move( children ) );
  }

  std::string_view text_;
  const signature& sig_;
  std::size_t pos_ = 0;
};

} // namespace detail

/*! \brief Parses a term or polynomial in prefix syntax against a signature */
inline term parse( std::string_view text, const signature& sig )
{
  return detail::term_parser( text, sig ).parse_all();
}

/// Canonical rendering, e.g. `+(*(x1,x2),x3)`.
inline std::string print( const term& t )
{
  switch ( t.node )
  {
  case term::kind::variable:
    return "x" + std::to_string( t.index );
  case term::kind::constant:
    return "#" + std::to_string( t.index );
  case term::kind::apply:
    break;
  }
  std::string out = t.symbol + "(";
  for ( std::size_t i = 0; i < t.args.size(); ++i )
  {
    if ( i )
    {
      out += ",";
    }
    out += print( t.args[i] );
  }
  return out + ")";
}

} // namespace finalg
