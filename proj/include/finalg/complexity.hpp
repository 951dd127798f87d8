/*!
  \file complexity.hpp
  \brief Syntactic and semantic complexity measures of terms

  cp1 counts variable occurrences and cp2 counts operation symbols.  cp3
  counts, for each nonempty M subset of X_n, the evaluations of X_n \ M
  that leave exactly M essential.
*/

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "induced.hpp"
#include "semantics.hpp"

namespace finalg
{

/// Number of variable occurrences.
inline std::uint64_t cp1( const term& t )
{
  std::uint64_t n = 0;
  for_each_node( t, [&]( const term& s ) { n += s.is_variable() ? 1 : 0; } );
  return n;
}

/// Number of operation symbols; variables and constants count 0.
inline std::uint64_t cp2( const term& t )
{
  if ( !t.is_apply() )
  {
    return 0;
  }
  std::uint64_t sum = 1;
  for ( const auto& c : t.args )
  {
    sum += cp2( c );
  }
  return sum;
}

/*! \brief Per-set cp3 counts of one function together with their sum */
struct complexity_report
{
  std::uint32_t arity = 0;
  /// Every nonempty subset of X_n, lexicographic order.
  std::map<var_set, std::uint64_t> per_set;
  std::uint64_t total = 0;

  bool operator==( const complexity_report& ) const = default;
};

namespace detail
{

/*! \brief cp3 of one subset, read directly off the table

  For each assignment C of the positions outside M, walks the |M|-dimensional
  box of tuples that agree with C and checks that every position of M is
  essential there.  Positions outside M are constant on the box and so never
  essential.
*/
inline std::uint64_t count_separating_evaluations( const function_table& table, var_set m )
{
  const auto n = table.arity();
  const auto k = table.carrier_size();
  const auto& v = table.values();
  const auto inside = m.indices();
  const auto outside = ( var_set::all( n ) - m ).indices();

  std::vector<std::size_t> in_stride, out_stride;
  for ( auto i : inside )
  {
    in_stride.push_back( table.stride( i ) );
  }
  for ( auto i : outside )
  {
    out_stride.push_back( table.stride( i ) );
  }

  std::uint64_t count = 0;
  std::vector<value_type> c( outside.size(), 0 );
  std::vector<value_type> box( inside.size(), 0 );
  do
  {
    std::size_t base = 0;
    for ( std::size_t j = 0; j < c.size(); ++j )
    {
      base += c[j] * out_stride[j];
    }

    // bit j set once inside[j] is found essential
    std::uint64_t seen = 0;
    const std::uint64_t want = inside.size() >= 64 ? ~std::uint64_t( 0 ) : ( std::uint64_t( 1 ) << inside.size() ) - 1;
    std::fill( box.begin(), box.end(), 0 );
    do
    {
      std::size_t idx = base;
      for ( std::size_t j = 0; j < box.size(); ++j )
      {
        idx += box[j] * in_stride[j];
      }
      for ( std::size_t j = 0; j < box.size(); ++j )
      {
        if ( box[j] != 0 && !( ( seen >> j ) & 1u ) && v[idx] != v[idx - box[j] * in_stride[j]] )
        {
          seen |= std::uint64_t( 1 ) << j;
        }
      }
    } while ( seen != want && next_tuple( box, k ) );

    if ( seen == want )
    {
      ++count;
    }
  } while ( next_tuple( c, k ) );
  return count;
}

} // namespace detail

/// cp3 of M for a tabulated function.
inline std::uint64_t cp3_set_of_table( const function_table& table, var_set m )
{
  if ( m.empty() )
  {
    throw precondition_error( "cp3 is defined for nonempty variable sets only" );
  }
  if ( m.max_index() > table.arity() )
  {
    throw precondition_error( "variable set " + m.to_string() + " exceeds the arity " + std::to_string( table.arity() ) );
  }
  return detail::count_separating_evaluations( table, m );
}

/*! \brief The full cp3 report of a tabulated function */
inline complexity_report cp3_of_table( const function_table& table )
{
  complexity_report report;
  report.arity = table.arity();
  for ( auto m : nonempty_subsets( table.arity() ) )
  {
    const auto c = detail::count_separating_evaluations( table, m );
    report.per_set.emplace( m, c );
    report.total += c;
  }
  return report;
}

inline std::uint64_t cp3_set( const term& t, const finite_algebra& alg, std::uint32_t n, var_set m )
{
  return cp3_set_of_table( induced_operation( t, alg, n ), m );
}

inline complexity_report cp3_total( const term& t, const finite_algebra& alg, std::uint32_t n )
{
  return cp3_of_table( induced_operation( t, alg, n ) );
}

/// V_p^U: the distinct values of the induced operation.
inline std::set<value_type> value_set( const term& p, const finite_algebra& alg, std::uint32_t n )
{
  const auto table = induced_operation( p, alg, n );
  return std::set<value_type>( table.values().begin(), table.values().end() );
}

} // namespace finalg
