/*!
  \file clone.hpp
  \brief n-ary clone enumeration and the n-complexity of a finite algebra

  The n-ary part of the clone of term operations is the least set of n-ary
  tables that contains the projections and is closed under applying the
  basic operations pointwise.  Its members are in bijection with the
  elements of the free algebra F_{V(U)}(X_n).
*/

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "complexity.hpp"
#include "term.hpp"

namespace finalg
{

inline constexpr std::size_t default_clone_budget = 1'000'000;

/*! \brief How a clone member was first obtained */
struct derivation
{
  /// Operation index, or no value for a projection.
  std::optional<std::size_t> op;
  /// Projection index (1-based) when op is empty.
  std::uint32_t projection = 0;
  /// Member indices of the arguments.
  std::vector<std::uint32_t> args;
};

/*! \brief The deduplicated n-ary term operations of an algebra

  Members appear in discovery order: the projections e_1..e_n first, then
  breadth-first by composition depth, with ties broken by operation order
  and then by the lexicographic order of argument member indices.
*/
class clone_level
{
public:
  clone_level( std::uint32_t arity, value_type carrier_size, std::vector<std::string> symbols )
      : arity_( arity ), carrier_size_( carrier_size ), symbols_( std::move( symbols ) )
  {
  }

  std::uint32_t arity() const { return arity_; }
  value_type carrier_size() const { return carrier_size_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<function_table>& members() const { return members_; }
  const derivation& derivation_of( std::size_t member ) const { return derivations_[member]; }

  std::optional<std::size_t> find( const function_table& table ) const { return find( table.values() ); }

  std::optional<std::size_t> find( const std::vector<value_type>& values ) const
  {
    if ( auto it = index_.find( values ); it != index_.end() )
    {
      return it->second;
    }
    return std::nullopt;
  }

  /// A term generating the member, rebuilt from the derivation DAG.
  term witness( std::size_t member ) const
  {
    const auto& d = derivations_.at( member );
    if ( !d.op )
    {
      return term::var( d.projection );
    }
    std::vector<term> children;
    children.reserve( d.args.size() );
    for ( auto a : d.args )
    {
      children.push_back( witness( a ) );
    }
    return term::apply( symbols_[*d.op], std::move( children ) );
  }

  /// Inserts a table if new; returns its member index and whether it was added.
  std::pair<std::size_t, bool> insert( function_table table, derivation how )
  {
    auto [it, added] = index_.emplace( table.values(), members_.size() );
    if ( added )
    {
      members_.push_back( std::move( table ) );
      derivations_.push_back( std::move( how ) );
    }
    return { it->second, added };
  }

private:
  struct values_hash
  {
    std::size_t operator()( const std::vector<value_type>& v ) const noexcept
    {
      std::uint64_t h = 1469598103934665603ull;
      for ( auto x : v )
      {
        h ^= x;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>( h );
    }
  };

  std::uint32_t arity_;
  value_type carrier_size_;
  std::vector<std::string> symbols_;
  std::vector<function_table> members_;
  std::vector<derivation> derivations_;
  std::unordered_map<std::vector<value_type>, std::size_t, values_hash> index_;
};

/*! \brief Computes the n-ary clone of `alg` as a least fixpoint

  Each round applies every operation to all argument tuples of members that
  involve at least one member found in the previous round.  Throws
  budget_error once the clone grows past `max_size`.
*/
inline clone_level make_clone_level( const finite_algebra& alg, std::uint32_t n, std::size_t max_size = default_clone_budget )
{
  const auto k = alg.carrier_size();
  const auto size = checked_power( k, n );
  std::vector<std::string> symbols;
  for ( const auto& op : alg.operations() )
  {
    symbols.push_back( op.symbol );
  }
  clone_level clone( n, k, std::move( symbols ) );

  auto check_budget = [&]() {
    if ( clone.size() > max_size )
    {
      throw budget_error( "clone enumeration exceeded the budget of " + std::to_string( max_size ) + " members (reached " + std::to_string( clone.size() ) + ")" );
    }
  };

  for ( std::uint32_t i = 1; i <= n; ++i )
  {
    clone.insert( function_table::projection( n, k, i ), derivation{ std::nullopt, i, {} } );
    check_budget();
  }

  std::size_t frontier_begin = 0;
  std::vector<value_type> values( size );
  while ( frontier_begin < clone.size() )
  {
    const auto frontier_end = clone.size();
    for ( std::size_t o = 0; o < alg.operations().size(); ++o )
    {
      const auto& op = alg.operations()[o];
      std::vector<value_type> args( op.arity, 0 );
      do
      {
        bool touches_frontier = false;
        for ( auto a : args )
        {
          touches_frontier = touches_frontier || a >= frontier_begin;
        }
        if ( !touches_frontier )
        {
          continue;
        }
        for ( std::size_t idx = 0; idx < size; ++idx )
        {
          std::size_t pos = 0;
          for ( auto a : args )
          {
            pos = pos * k + clone.members()[a][idx];
          }
          values[idx] = op.table[pos];
        }
        if ( clone.find( values ) )
        {
          continue;
        }
        clone.insert( function_table( n, k, values ), derivation{ o, 0, std::vector<std::uint32_t>( args.begin(), args.end() ) } );
        check_budget();
      } while ( next_tuple( args, static_cast<value_type>( frontier_end ) ) );
    }
    frontier_begin = frontier_end;
  }
  return clone;
}

/*! \brief The n-complexity of an algebra and its distribution over the clone */
struct algebra_census
{
  std::string algebra;
  std::uint32_t n = 0;
  std::uint64_t clone_size = 0;
  std::uint64_t total = 0;
  /// cp3 total -> number of clone members with that total
  std::map<std::uint64_t, std::uint64_t> histogram;

  bool operator==( const algebra_census& ) const = default;
};

/// Sums cp3 over the members of a precomputed clone (counts taken in U).
inline algebra_census census_of( const clone_level& clone, std::string algebra_name )
{
  algebra_census census{ std::move( algebra_name ), clone.arity(), clone.size(), 0, {} };
  for ( const auto& member : clone.members() )
  {
    const auto c = cp3_of_table( member ).total;
    census.total += c;
    ++census.histogram[c];
  }
  return census;
}

/*! \brief Sum of cp3(t*, U) over the n-ary free algebra, i.e. over the n-ary clone */
inline algebra_census algebra_n_complexity( const finite_algebra& alg, std::uint32_t n, std::size_t max_size = default_clone_budget )
{
  return census_of( make_clone_level( alg, n, max_size ), alg.name() );
}

/*! \brief The free algebra F_{V(U)}(X_n) realized on the n-ary clone

  Element i is clone member i; operations act pointwise on tables.
*/
inline finite_algebra free_algebra( const finite_algebra& alg, std::uint32_t n, std::size_t max_size = default_clone_budget )
{
  const auto clone = make_clone_level( alg, n, max_size );
  const auto size = static_cast<value_type>( clone.size() );
  const auto entries = checked_power( alg.carrier_size(), n );
  std::vector<operation> ops;
  for ( std::size_t o = 0; o < alg.operations().size(); ++o )
  {
    const auto& op = alg.operations()[o];
    operation free_op{ op.symbol, op.arity, {} };
    free_op.table.reserve( checked_power( size, op.arity ) );
    std::vector<value_type> values( entries );
    detail::for_each_tuple( size, op.arity, [&]( std::span<const value_type> args ) {
      for ( std::size_t idx = 0; idx < entries; ++idx )
      {
        std::size_t pos = 0;
        for ( auto a : args )
        {
          pos = pos * alg.carrier_size() + clone.members()[a][idx];
        }
        values[idx] = op.table[pos];
      }
      free_op.table.push_back( static_cast<value_type>( *clone.find( values ) ) );
    } );
    ops.push_back( std::move( free_op ) );
  }
  return finite_algebra( "F(" + alg.name() + "," + std::to_string( n ) + ")", size, std::move( ops ) );
}

} // namespace finalg
