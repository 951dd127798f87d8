#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <finalg/finalg.hpp>

namespace finalg::testing
{

inline finite_algebra bu()
{
  return finite_algebra( "BU", 2, { { "+", 2, { 0, 1, 1, 0 } }, { "*", 2, { 0, 0, 0, 1 } }, { "neg", 1, { 1, 0 } } } );
}

/// ({0,1}; and, or, not)
inline finite_algebra boolean_lattice()
{
  return finite_algebra( "BA", 2, { { "and", 2, { 0, 0, 0, 1 } }, { "or", 2, { 0, 1, 1, 1 } }, { "not", 1, { 1, 0 } } } );
}

inline finite_algebra boolean_ring()
{
  return finite_algebra( "BR", 2, { { "+", 2, { 0, 1, 1, 0 } }, { "*", 2, { 0, 0, 0, 1 } } } );
}

inline finite_algebra semilattice()
{
  return finite_algebra( "SL", 2, { { "*", 2, { 0, 0, 0, 1 } } } );
}

inline finite_algebra chain3()
{
  return finite_algebra( "Chain3", 3, { { "min", 2, { 0, 0, 0, 0, 1, 1, 0, 1, 2 } }, { "max", 2, { 0, 1, 2, 1, 1, 2, 2, 2, 2 } } } );
}

inline finite_algebra z3()
{
  return finite_algebra( "Z3", 3,
                         { { "+", 2, { 0, 1, 2, 1, 2, 0, 2, 0, 1 } },
                           { "*", 2, { 0, 0, 0, 0, 1, 2, 0, 2, 1 } },
                           { "min", 2, { 0, 0, 0, 0, 1, 1, 0, 1, 2 } },
                           { "s", 1, { 1, 2, 0 } } } );
}

inline term t1( const finite_algebra& alg ) { return parse( "+(*(x1,x2),x3)", alg.sig() ); }
inline term t2( const finite_algebra& alg ) { return parse( "+(*(x1,x3),*(x2,neg(x3)))", alg.sig() ); }

/*! \brief Random term over the signature of `alg` with variables x1..xn

  Leaves are constants with probability `constant_rate`.
*/
inline term random_term( const finite_algebra& alg, std::uint32_t n, std::uint32_t depth, std::mt19937_64& rng, double constant_rate = 0.0 )
{
  std::uniform_real_distribution<double> coin( 0.0, 1.0 );
  if ( depth == 0 || alg.operations().empty() || coin( rng ) < 0.25 )
  {
    if ( coin( rng ) < constant_rate )
    {
      return term::constant( std::uniform_int_distribution<value_type>( 0, alg.carrier_size() - 1 )( rng ) );
    }
    return term::var( std::uniform_int_distribution<std::uint32_t>( 1, n )( rng ) );
  }
  const auto& op = alg.operations()[std::uniform_int_distribution<std::size_t>( 0, alg.operations().size() - 1 )( rng )];
  std::vector<term> children;
  for ( std::uint32_t i = 0; i < op.arity; ++i )
  {
    children.push_back( random_term( alg, n, depth - 1, rng, constant_rate ) );
  }
  return term::apply( op.symbol, std::move( children ) );
}

inline std::vector<std::uint32_t> random_permutation( std::uint32_t n, std::mt19937_64& rng )
{
  std::vector<std::uint32_t> sigma( n );
  for ( std::uint32_t i = 0; i < n; ++i )
  {
    sigma[i] = i + 1;
  }
  std::shuffle( sigma.begin(), sigma.end(), rng );
  return sigma;
}

inline function_table random_table( std::uint32_t n, value_type k, std::mt19937_64& rng )
{
  std::uniform_int_distribution<value_type> d( 0, k - 1 );
  std::vector<value_type> v( checked_power( k, n ) );
  for ( auto& x : v )
  {
    x = d( rng );
  }
  return function_table( n, k, std::move( v ) );
}

/// All terms over `alg` in x1..xn with at most `max_ops` operation symbols.
inline std::vector<term> all_terms( const finite_algebra& alg, std::uint32_t n, std::uint32_t max_ops )
{
  // by_ops[c] holds every term with exactly c operation symbols
  std::vector<std::vector<term>> by_ops( max_ops + 1 );
  for ( std::uint32_t i = 1; i <= n; ++i )
  {
    by_ops[0].push_back( term::var( i ) );
  }
  for ( std::uint32_t c = 1; c <= max_ops; ++c )
  {
    for ( const auto& op : alg.operations() )
    {
      // distribute c-1 symbols over op.arity children
      std::vector<std::uint32_t> split( op.arity, 0 );
      std::function<void( std::uint32_t, std::uint32_t, std::vector<term>& )> fill = [&]( std::uint32_t pos, std::uint32_t left, std::vector<term>& children ) {
        if ( pos == op.arity )
        {
          if ( left == 0 )
          {
            by_ops[c].push_back( term::apply( op.symbol, children ) );
          }
          return;
        }
        for ( std::uint32_t take = 0; take <= left; ++take )
        {
          for ( const auto& child : by_ops[take] )
          {
            children.push_back( child );
            fill( pos + 1, left - take, children );
            children.pop_back();
          }
        }
      };
      std::vector<term> children;
      fill( 0, c - 1, children );
    }
  }
  std::vector<term> out;
  for ( auto& bucket : by_ops )
  {
    out.insert( out.end(), bucket.begin(), bucket.end() );
  }
  return out;
}

} // namespace finalg::testing
