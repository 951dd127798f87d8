/*!
  \file substitution.hpp
  \brief Syntactic maps on polynomials: evaluations of variable sets,
         variable renamings, and constant remappings
*/

#pragma once

#include <string>
#include <vector>

#include "term.hpp"

namespace finalg
{

/*! \brief h-bar(p) for the evaluation h of M = dom(ev) with the sequence C

  Each x_i with i in M becomes the constant #C_i; everything else is kept.
  The result satisfies var(h-bar(p)) = var(p) \ M.
*/
inline term apply_evaluation( const term& p, const evaluation& ev )
{
  switch ( p.node )
  {
  case term::kind::variable:
    if ( auto it = ev.assigned.find( p.index ); it != ev.assigned.end() )
    {
      return term::constant( it->second );
    }
    return p;
  case term::kind::constant:
    return p;
  case term::kind::apply:
    break;
  }
  std::vector<term> children;
  children.reserve( p.args.size() );
  for ( const auto& c : p.args )
  {
    children.push_back( apply_evaluation( c, ev ) );
  }
  return term::apply( p.symbol, std::move( children ) );
}

/// Checks that sigma (sigma[i-1] is the image of i) permutes {1..n}.
inline void check_permutation( const std::vector<std::uint32_t>& sigma )
{
  std::vector<bool> hit( sigma.size() + 1, false );
  for ( auto s : sigma )
  {
    if ( s == 0 || s > sigma.size() || hit[s] )
    {
      throw precondition_error( "not a permutation of 1.." + std::to_string( sigma.size() ) );
    }
    hit[s] = true;
  }
}

namespace detail
{

inline term rename_unchecked( const term& t, const std::vector<std::uint32_t>& sigma )
{
  if ( t.is_variable() )
  {
    if ( t.index > sigma.size() )
    {
      throw precondition_error( "rename_variables: x" + std::to_string( t.index ) + " lies outside the permutation's domain 1.." + std::to_string( sigma.size() ) );
    }
    return term::var( sigma[t.index - 1] );
  }
  if ( t.is_constant() )
  {
    return t;
  }
  std::vector<term> children;
  children.reserve( t.args.size() );
  for ( const auto& c : t.args )
  {
    children.push_back( rename_unchecked( c, sigma ) );
  }
  return term::apply( t.symbol, std::move( children ) );
}

} // namespace detail

/*! \brief f_sigma(t): replaces every x_i by x_sigma(i)

  `sigma[i-1]` is the image of i; sigma must be a permutation of {1..n}
  with n at least max_variable(t).
*/
inline term rename_variables( const term& t, const std::vector<std::uint32_t>& sigma )
{
  check_permutation( sigma );
  return detail::rename_unchecked( t, sigma );
}

/// sigma(M)
inline var_set rename_set( var_set m, const std::vector<std::uint32_t>& sigma )
{
  var_set out;
  for ( auto i : m.indices() )
  {
    out.insert( sigma.at( i - 1 ) );
  }
  return out;
}

/*! \brief f_g(p): replaces every constant #c by #g(c), keeping variables */
inline term map_constants( const term& p, const std::vector<value_type>& g )
{
  if ( p.is_variable() )
  {
    return p;
  }
  if ( p.is_constant() )
  {
    if ( p.index >= g.size() )
    {
      throw precondition_error( "map_constants: mapping undefined on #" + std::to_string( p.index ) );
    }
    return term::constant( g[p.index] );
  }
  std::vector<term> children;
  children.reserve( p.args.size() );
  for ( const auto& c : p.args )
  {
    children.push_back( map_constants( c, g ) );
  }
  return term::apply( p.symbol, std::move( children ) );
}

} // namespace finalg
