/*!
  \file semantics.hpp
  \brief Essential variables, identities, separable sets, and the subterm
         relation with respect to a finite algebra

  Essentiality and separability with respect to the variety V(U) generated
  by a finite algebra U coincide with the notions with respect to U itself,
  so every function here takes the generating algebra.
*/

#pragma once

#include <algorithm>
#include <vector>

#include "induced.hpp"
#include "substitution.hpp"

namespace finalg
{

/*! \brief Ess of a tabulated function

  Position i is essential iff two tuples differing only at position i are
  mapped to different values.
*/
inline var_set essential_vars( const function_table& table )
{
  const auto n = table.arity();
  const auto k = table.carrier_size();
  const auto& v = table.values();
  var_set ess;
  for ( std::uint32_t i = 1; i <= n; ++i )
  {
    const auto stride = table.stride( i );
    const auto block = stride * k;
    bool found = false;
    for ( std::size_t base = 0; base < v.size() && !found; base += block )
    {
      for ( std::size_t off = 0; off < stride && !found; ++off )
      {
        const auto first = v[base + off];
        for ( value_type a = 1; a < k; ++a )
        {
          if ( v[base + off + a * stride] != first )
          {
            found = true;
            break;
          }
        }
      }
    }
    if ( found )
    {
      ess.insert( i );
    }
  }
  return ess;
}

/// Ess(t, U) in the context X_n. Always a subset of var(t).
inline var_set ess( const term& t, const finite_algebra& alg, std::uint32_t n )
{
  return essential_vars( induced_operation( t, alg, n ) );
}

/// U |= s ~ t, for terms or polynomials.
inline bool satisfies_identity( const finite_algebra& alg, const term& s, const term& t, std::uint32_t n )
{
  return induced_operation( s, alg, n ) == induced_operation( t, alg, n );
}

/*! \brief Decides x_i in Ess(t, U) through an identity check

  Renames x_i to the fresh variable x_(n+1) and tests whether t and the
  renamed term still form an identity.
*/
inline bool ess_via_lemma35( const term& t, const finite_algebra& alg, std::uint32_t n, std::uint32_t i )
{
  if ( i == 0 || i > n )
  {
    throw precondition_error( "ess_via_lemma35: variable x" + std::to_string( i ) + " outside x1..x" + std::to_string( n ) );
  }
  std::vector<std::uint32_t> sigma( n + 1 );
  for ( std::uint32_t j = 1; j <= n + 1; ++j )
  {
    sigma[j - 1] = j;
  }
  std::swap( sigma[i - 1], sigma[n] );
  // x_(n+1) does not occur in t, so the swap acts as the substitution x_i -> x_(n+1)
  const auto renamed = rename_variables( t, sigma );
  return !satisfies_identity( alg, t, renamed, n + 1 );
}

namespace detail
{

inline void check_separable_args( var_set m, var_set essential )
{
  if ( m.empty() )
  {
    throw precondition_error( "separability is defined for nonempty variable sets only" );
  }
  if ( !m.is_subset_of( essential ) )
  {
    const auto offending = ( m - essential ).indices().front();
    throw precondition_error( "x" + std::to_string( offending ) + " is not essential, so " + m.to_string() + " is not a set of essential variables" );
  }
}

/// Calls fn(evaluation) for every assignment of constants to `domain`; stops when fn returns true.
template<typename Fn>
bool any_evaluation( std::uint32_t n, var_set domain, value_type k, Fn&& fn )
{
  const auto idx = domain.indices();
  std::vector<value_type> c( idx.size(), 0 );
  do
  {
    std::map<std::uint32_t, value_type> assignment;
    for ( std::size_t j = 0; j < idx.size(); ++j )
    {
      assignment.emplace( idx[j], c[j] );
    }
    if ( fn( evaluation( n, std::move( assignment ) ) ) )
    {
      return true;
    }
  } while ( next_tuple( c, k ) );
  return false;
}

} // namespace detail

/*! \brief Whether M is separable in the function given by `table`

  M must be a nonempty set of essential variables.  Searches for an
  evaluation of X_n \ M that leaves exactly M essential.
*/
inline bool is_separable( const function_table& table, var_set m )
{
  const auto n = table.arity();
  detail::check_separable_args( m, essential_vars( table ) );
  return detail::any_evaluation( n, var_set::all( n ) - m, table.carrier_size(), [&]( const evaluation& ev ) {
    return essential_vars( restrict_table( table, ev ) ) == m;
  } );
}

inline bool is_separable( const term& t, const finite_algebra& alg, std::uint32_t n, var_set m )
{
  if ( m.max_index() > n )
  {
    throw precondition_error( "variable set " + m.to_string() + " exceeds the context arity " + std::to_string( n ) );
  }
  return is_separable( induced_operation( t, alg, n ), m );
}

/*! \brief Sep(t, U): every separable set, in lexicographic order */
inline std::vector<var_set> sep_sets( const term& t, const finite_algebra& alg, std::uint32_t n )
{
  const auto table = induced_operation( t, alg, n );
  const auto essential = essential_vars( table );
  std::vector<var_set> out;
  for ( auto m : nonempty_subsets( n ) )
  {
    if ( m.is_subset_of( essential ) && is_separable( table, m ) )
    {
      out.push_back( m );
    }
  }
  return out;
}

/*! \brief t < s: U |= t ~ h-bar(s) for some evaluation h of a subset M of var(s)

  M ranges over the proper subsets of var(s) together with the empty set,
  so the relation is reflexive.
*/
inline bool is_subterm( const term& t, const term& s, const finite_algebra& alg, std::uint32_t n )
{
  const auto target = induced_operation( t, alg, n );
  const auto vars = variables( s );
  const auto k = alg.carrier_size();
  if ( induced_operation( s, alg, n ) == target )
  {
    return true;
  }
  // enumerate nonempty proper subsets of var(s)
  const auto full = vars.mask();
  for ( std::uint64_t sub = ( full - 1 ) & full; sub != 0; sub = ( sub - 1 ) & full )
  {
    const auto found = detail::any_evaluation( n, var_set( sub ), k, [&]( const evaluation& ev ) {
      return induced_operation( apply_evaluation( s, ev ), alg, n ) == target;
    } );
    if ( found )
    {
      return true;
    }
  }
  return false;
}

} // namespace finalg
