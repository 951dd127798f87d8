/*!
  \file induced.hpp
  \brief Term and polynomial operations induced on a finite algebra

  `induced_operation` builds the table bottom-up: variables become
  projections, constants become constant operations, and applications
  compose tables pointwise.  `interpret` evaluates a polynomial at a single
  tuple by direct recursion and serves as the second route to the same
  values.
*/

#pragma once

#include <span>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "term.hpp"

namespace finalg
{

namespace detail
{

inline std::size_t resolve_symbol( const finite_algebra& alg, const term& t )
{
  const auto op = alg.find( t.symbol );
  if ( !op )
  {
    throw precondition_error( "unknown symbol '" + t.symbol + "' for algebra '" + alg.name() + "'" );
  }
  if ( alg.operations()[*op].arity != t.args.size() )
  {
    throw precondition_error( "symbol '" + t.symbol + "' applied to " + std::to_string( t.args.size() ) + " argument(s), arity is " + std::to_string( alg.operations()[*op].arity ) );
  }
  return *op;
}

inline std::vector<value_type> tabulate( const term& t, const finite_algebra& alg, std::uint32_t n, std::size_t size )
{
  const auto k = alg.carrier_size();
  switch ( t.node )
  {
  case term::kind::variable:
    return function_table::projection( n, k, t.index ).values();
  case term::kind::constant:
    if ( t.index >= k )
    {
      throw precondition_error( "constant #" + std::to_string( t.index ) + " is outside the carrier of '" + alg.name() + "'" );
    }
    return std::vector<value_type>( size, t.index );
  case term::kind::apply:
    break;
  }

  const auto op = resolve_symbol( alg, t );
  std::vector<std::vector<value_type>> columns;
  columns.reserve( t.args.size() );
  for ( const auto& c : t.args )
  {
    columns.push_back( tabulate( c, alg, n, size ) );
  }
  const auto& table = alg.operations()[op].table;
  std::vector<value_type> out( size );
  for ( std::size_t idx = 0; idx < size; ++idx )
  {
    std::size_t pos = 0;
    for ( const auto& col : columns )
    {
      pos = pos * k + col[idx];
    }
    out[idx] = table[pos];
  }
  return out;
}

} // namespace detail

/*! \brief The n-ary operation p^U induced by a term or polynomial

  Requires n >= max_variable(p) and every symbol of p in the signature.
*/
inline function_table induced_operation( const term& p, const finite_algebra& alg, std::uint32_t n )
{
  if ( const auto m = max_variable( p ); m > n )
  {
    throw precondition_error( "variable x" + std::to_string( m ) + " exceeds the context arity " + std::to_string( n ) );
  }
  const auto size = checked_power( alg.carrier_size(), n );
  return function_table( n, alg.carrier_size(), detail::tabulate( p, alg, n, size ) );
}

/*! \brief Value of p under the total evaluation x_i -> tuple[i-1], by direct recursion */
inline value_type interpret( const term& p, const finite_algebra& alg, std::span<const value_type> tuple )
{
  switch ( p.node )
  {
  case term::kind::variable:
    if ( p.index > tuple.size() )
    {
      throw precondition_error( "variable x" + std::to_string( p.index ) + " is unassigned" );
    }
    return tuple[p.index - 1];
  case term::kind::constant:
    if ( p.index >= alg.carrier_size() )
    {
      throw precondition_error( "constant #" + std::to_string( p.index ) + " is outside the carrier" );
    }
    return p.index;
  case term::kind::apply:
    break;
  }
  const auto op = detail::resolve_symbol( alg, p );
  std::vector<value_type> args;
  args.reserve( p.args.size() );
  for ( const auto& c : p.args )
  {
    args.push_back( interpret( c, alg, tuple ) );
  }
  return alg.apply( op, args );
}

/*! \brief Table of h-bar(p) computed from the table of p

  The result keeps the declared arity n; the positions assigned by `ev`
  become fictitious.
*/
inline function_table restrict_table( const function_table& table, const evaluation& ev )
{
  const auto n = table.arity();
  const auto k = table.carrier_size();
  for ( const auto& [i, c] : ev.assigned )
  {
    if ( i == 0 || i > n )
    {
      throw precondition_error( "restrict_table: variable x" + std::to_string( i ) + " outside x1..x" + std::to_string( n ) );
    }
    if ( c >= k )
    {
      throw precondition_error( "restrict_table: value " + std::to_string( c ) + " for x" + std::to_string( i ) + " is outside the carrier" );
    }
  }
  if ( ev.assigned.empty() )
  {
    return table;
  }

  std::vector<value_type> tuple( n, 0 ), fixed( n, 0 );
  std::vector<value_type> values( table.size() );
  std::size_t idx = 0;
  do
  {
    fixed = tuple;
    for ( const auto& [i, c] : ev.assigned )
    {
      fixed[i - 1] = c;
    }
    values[idx++] = table.at( fixed );
  } while ( next_tuple( tuple, k ) );
  return function_table( n, k, std::move( values ) );
}

} // namespace finalg
