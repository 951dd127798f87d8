/*!
  \file algebra.hpp
  \brief Finite algebras given by operation tables, and the standard
         constructions on them (direct powers, subalgebras, isomorphic copies)
*/

#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "table.hpp"

namespace finalg
{

/*! \brief Raised when an algebra description violates an invariant */
class validation_error : public error
{
public:
  using error::error;
};

/*! \brief A basic operation: its symbol, arity, and flat table of length k^arity */
struct operation
{
  std::string symbol;
  std::uint32_t arity = 0;
  std::vector<value_type> table;

  bool operator==( const operation& ) const = default;
};

/*! \brief Unchecked algebra description, e.g. as read from a file */
struct algebra_description
{
  std::string name;
  std::int64_t carrier = 0;
  std::vector<operation> operations;
};

/*! \brief Operation symbols with their arities plus the carrier size

  Constant symbols #0..#(k-1) are part of every signature.
*/
struct signature
{
  value_type carrier_size = 1;
  std::vector<std::pair<std::string, std::uint32_t>> symbols;

  std::optional<std::uint32_t> arity_of( std::string_view symbol ) const
  {
    for ( const auto& [s, a] : symbols )
    {
      if ( s == symbol )
      {
        return a;
      }
    }
    return std::nullopt;
  }
};

namespace detail
{

inline bool is_identifier( std::string_view s )
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s[0] ) ) || s[0] == '_' ) )
  {
    return false;
  }
  for ( auto c : s )
  {
    if ( !( std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' ) )
    {
      return false;
    }
  }
  return true;
}

/// x followed by digits only: reserved for variables
inline bool is_variable_name( std::string_view s )
{
  if ( s.size() < 2 || s[0] != 'x' )
  {
    return false;
  }
  for ( std::size_t i = 1; i < s.size(); ++i )
  {
    if ( !std::isdigit( static_cast<unsigned char>( s[i] ) ) )
    {
      return false;
    }
  }
  return true;
}

inline bool is_glyph( std::string_view s )
{
  if ( s.size() != 1 )
  {
    return false;
  }
  const auto c = static_cast<unsigned char>( s[0] );
  return std::ispunct( c ) && c != '(' && c != ')' && c != ',' && c != '#' && c != '_';
}

} // namespace detail

/// Symbols usable in the prefix term syntax.
inline bool is_valid_symbol( std::string_view s )
{
  return ( detail::is_identifier( s ) && !detail::is_variable_name( s ) ) || detail::is_glyph( s );
}

/*! \brief A finite algebra U = ({0..k-1}; f_1, ..., f_r)

  Instances are always valid: the constructor checks table lengths, entry
  ranges, and symbol uniqueness.
*/
class finite_algebra
{
public:
  finite_algebra( std::string name, value_type carrier_size, std::vector<operation> operations )
      : name_( std::move( name ) ), carrier_size_( carrier_size ), operations_( std::move( operations ) )
  {
    if ( carrier_size_ < 1 )
    {
      throw validation_error( "algebra '" + name_ + "': carrier size must be at least 1" );
    }
    std::set<std::string> seen;
    for ( std::size_t pos = 0; pos < operations_.size(); ++pos )
    {
      const auto& op = operations_[pos];
      const auto where = "operation '" + op.symbol + "' (position " + std::to_string( pos ) + ")";
      if ( !is_valid_symbol( op.symbol ) )
      {
        throw validation_error( where + ": symbol must be an identifier other than x<digits> or a single punctuation glyph" );
      }
      if ( !seen.insert( op.symbol ).second )
      {
        throw validation_error( where + ": duplicate symbol" );
      }
      if ( op.arity < 1 )
      {
        throw validation_error( where + ": arity must be positive" );
      }
      std::uint64_t expected = 0;
      try
      {
        expected = checked_power( carrier_size_, op.arity );
      }
      catch ( const budget_error& e )
      {
        throw validation_error( where + ": " + e.what() );
      }
      if ( op.table.size() != expected )
      {
        throw validation_error( where + ": table length " + std::to_string( op.table.size() ) + " does not equal " + std::to_string( carrier_size_ ) + "^" + std::to_string( op.arity ) + " = " + std::to_string( expected ) );
      }
      for ( std::size_t i = 0; i < op.table.size(); ++i )
      {
        if ( op.table[i] >= carrier_size_ )
        {
          throw validation_error( where + ": entry " + std::to_string( op.table[i] ) + " at index " + std::to_string( i ) + " is outside 0.." + std::to_string( carrier_size_ - 1 ) );
        }
      }
    }
  }

  const std::string& name() const { return name_; }
  value_type carrier_size() const { return carrier_size_; }
  const std::vector<operation>& operations() const { return operations_; }

  std::optional<std::size_t> find( std::string_view symbol ) const
  {
    for ( std::size_t i = 0; i < operations_.size(); ++i )
    {
      if ( operations_[i].symbol == symbol )
      {
        return i;
      }
    }
    return std::nullopt;
  }

  signature sig() const
  {
    signature s{ carrier_size_, {} };
    for ( const auto& op : operations_ )
    {
      s.symbols.emplace_back( op.symbol, op.arity );
    }
    return s;
  }

  /// f_op(args) by table lookup.
  value_type apply( std::size_t op, std::span<const value_type> args ) const
  {
    const auto& o = operations_[op];
    std::size_t idx = 0;
    for ( auto a : args )
    {
      idx = idx * carrier_size_ + a;
    }
    return o.table[idx];
  }

  bool operator==( const finite_algebra& ) const = default;

private:
  std::string name_;
  value_type carrier_size_;
  std::vector<operation> operations_;
};

/*! \brief Checks a raw description and returns the validated algebra

  Errors name the offending operation symbol and its position.
*/
inline finite_algebra validate_algebra( const algebra_description& raw )
{
  if ( raw.carrier < 1 )
  {
    throw validation_error( "algebra '" + raw.name + "': carrier size must be at least 1, got " + std::to_string( raw.carrier ) );
  }
  if ( raw.carrier > static_cast<std::int64_t>( max_table_entries ) )
  {
    throw validation_error( "algebra '" + raw.name + "': carrier size " + std::to_string( raw.carrier ) + " is too large" );
  }
  return finite_algebra( raw.name, static_cast<value_type>( raw.carrier ), raw.operations );
}

namespace detail
{

/// Calls fn(tuple) for every tuple in {0..k-1}^m in index order.
template<typename Fn>
void for_each_tuple( value_type k, std::uint32_t m, Fn&& fn )
{
  std::vector<value_type> tuple( m, 0 );
  do
  {
    fn( std::span<const value_type>( tuple ) );
  } while ( next_tuple( tuple, k ) );
}

} // namespace detail

/*! \brief The direct power U^m with coordinatewise operations

  Element e of U^m encodes the tuple (e div k^(m-1), ..., e mod k), first
  coordinate most significant.
*/
inline finite_algebra direct_power( const finite_algebra& alg, std::uint32_t m, std::uint64_t budget = std::uint64_t( 1 ) << 24 )
{
  if ( m < 1 )
  {
    throw precondition_error( "direct_power: exponent must be positive" );
  }
  const auto k = alg.carrier_size();
  const auto big_k = checked_power( k, m, budget );
  std::vector<operation> ops;
  for ( std::size_t o = 0; o < alg.operations().size(); ++o )
  {
    const auto& op = alg.operations()[o];
    const auto size = checked_power( big_k, op.arity, budget );
    operation power_op{ op.symbol, op.arity, std::vector<value_type>( size ) };

    std::vector<value_type> coords( static_cast<std::size_t>( op.arity ) * m );
    std::vector<value_type> column( op.arity );
    std::size_t idx = 0;
    detail::for_each_tuple( static_cast<value_type>( big_k ), op.arity, [&]( std::span<const value_type> tuple ) {
      for ( std::uint32_t a = 0; a < op.arity; ++a )
      {
        auto e = tuple[a];
        for ( std::uint32_t c = m; c-- > 0; )
        {
          coords[a * m + c] = e % k;
          e /= k;
        }
      }
      value_type result = 0;
      for ( std::uint32_t c = 0; c < m; ++c )
      {
        for ( std::uint32_t a = 0; a < op.arity; ++a )
        {
          column[a] = coords[a * m + c];
        }
        result = result * k + alg.apply( o, column );
      }
      power_op.table[idx++] = result;
    } );
    ops.push_back( std::move( power_op ) );
  }
  return finite_algebra( alg.name() + "^" + std::to_string( m ), static_cast<value_type>( big_k ), std::move( ops ) );
}

/*! \brief The subalgebra on `subset`, re-indexed along its sorted order

  Throws precondition_error with a witness tuple if the subset is not
  closed under some operation.
*/
inline finite_algebra subalgebra( const finite_algebra& alg, const std::set<value_type>& subset )
{
  if ( subset.empty() )
  {
    throw precondition_error( "subalgebra: subset must be nonempty" );
  }
  if ( *subset.rbegin() >= alg.carrier_size() )
  {
    throw precondition_error( "subalgebra: element " + std::to_string( *subset.rbegin() ) + " is not in the carrier" );
  }
  const std::vector<value_type> elements( subset.begin(), subset.end() );
  std::vector<value_type> position( alg.carrier_size(), 0 );
  for ( std::size_t i = 0; i < elements.size(); ++i )
  {
    position[elements[i]] = static_cast<value_type>( i );
  }
  const auto k = static_cast<value_type>( elements.size() );

  std::vector<operation> ops;
  for ( std::size_t o = 0; o < alg.operations().size(); ++o )
  {
    const auto& op = alg.operations()[o];
    operation sub_op{ op.symbol, op.arity, {} };
    sub_op.table.reserve( checked_power( k, op.arity ) );
    std::vector<value_type> args( op.arity );
    detail::for_each_tuple( k, op.arity, [&]( std::span<const value_type> tuple ) {
      for ( std::uint32_t a = 0; a < op.arity; ++a )
      {
        args[a] = elements[tuple[a]];
      }
      const auto r = alg.apply( o, args );
      if ( !subset.contains( r ) )
      {
        std::string witness = op.symbol + "(";
        for ( std::uint32_t a = 0; a < op.arity; ++a )
        {
          witness += ( a ? "," : "" ) + std::to_string( args[a] );
        }
        throw precondition_error( "subalgebra: subset not closed, " + witness + ") = " + std::to_string( r ) );
      }
      sub_op.table.push_back( position[r] );
    } );
    ops.push_back( std::move( sub_op ) );
  }
  return finite_algebra( alg.name() + "|sub", k, std::move( ops ) );
}

/*! \brief The isomorphic copy B with phi : U -> B given by `bijection`

  f^B(phi(a_1), ..., phi(a_m)) = phi(f^U(a_1, ..., a_m)).
*/
inline finite_algebra transport_algebra( const finite_algebra& alg, const std::vector<value_type>& bijection )
{
  const auto k = alg.carrier_size();
  if ( bijection.size() != k )
  {
    throw precondition_error( "transport_algebra: bijection has " + std::to_string( bijection.size() ) + " entries for carrier size " + std::to_string( k ) );
  }
  std::vector<value_type> inverse( k, k );
  for ( value_type a = 0; a < k; ++a )
  {
    if ( bijection[a] >= k || inverse[bijection[a]] != k )
    {
      throw precondition_error( "transport_algebra: mapping is not a permutation of the carrier" );
    }
    inverse[bijection[a]] = a;
  }

  std::vector<operation> ops;
  for ( std::size_t o = 0; o < alg.operations().size(); ++o )
  {
    const auto& op = alg.operations()[o];
    operation t_op{ op.symbol, op.arity, {} };
    t_op.table.reserve( op.table.size() );
    std::vector<value_type> preimage( op.arity );
    detail::for_each_tuple( k, op.arity, [&]( std::span<const value_type> tuple ) {
      for ( std::uint32_t a = 0; a < op.arity; ++a )
      {
        preimage[a] = inverse[tuple[a]];
      }
      t_op.table.push_back( bijection[alg.apply( o, preimage )] );
    } );
    ops.push_back( std::move( t_op ) );
  }
  return finite_algebra( alg.name(), k, std::move( ops ) );
}

} // namespace finalg
