/*!
  \file term.hpp
  \brief Terms and polynomials over a signature

  A term is built from variables x_1, x_2, ... and operation symbols.  A
  polynomial may additionally contain constant leaves #a naming carrier
  elements.
*/

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "table.hpp"

namespace finalg
{

struct term
{
  enum class kind : std::uint8_t
  {
    variable,
    constant,
    apply
  };

  kind node = kind::variable;
  /// Variable index (1-based) or constant value, unused for applications.
  std::uint32_t index = 1;
  std::string symbol;
  std::vector<term> args;

  static term var( std::uint32_t i )
  {
    if ( i == 0 )
    {
      throw precondition_error( "variable indices are 1-based" );
    }
    return term{ kind::variable, i, {}, {} };
  }

  static term constant( value_type c ) { return term{ kind::constant, c, {}, {} }; }

  static term apply( std::string sym, std::vector<term> children )
  {
    return term{ kind::apply, 0, std::move( sym ), std::move( children ) };
  }

  bool is_variable() const { return node == kind::variable; }
  bool is_constant() const { return node == kind::constant; }
  bool is_apply() const { return node == kind::apply; }

  bool operator==( const term& ) const = default;
};

/// Visits every node in pre-order.
template<typename Fn>
void for_each_node( const term& t, Fn&& fn )
{
  fn( t );
  for ( const auto& c : t.args )
  {
    for_each_node( c, fn );
  }
}

/// var(t)
inline var_set variables( const term& t )
{
  var_set vs;
  for_each_node( t, [&]( const term& s ) {
    if ( s.is_variable() )
    {
      vs.insert( s.index );
    }
  } );
  return vs;
}

/// Largest variable index occurring in t, 0 for ground polynomials.
inline std::uint32_t max_variable( const term& t )
{
  std::uint32_t m = 0;
  for_each_node( t, [&]( const term& s ) {
    if ( s.is_variable() )
    {
      m = std::max( m, s.index );
    }
  } );
  return m;
}

/// True for terms proper (no constant leaves).
inline bool is_pure_term( const term& t )
{
  bool pure = true;
  for_each_node( t, [&]( const term& s ) { pure = pure && !s.is_constant(); } );
  return pure;
}

inline std::size_t node_count( const term& t )
{
  std::size_t n = 0;
  for_each_node( t, [&]( const term& ) { ++n; } );
  return n;
}

} // namespace finalg
