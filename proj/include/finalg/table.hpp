/*!
  \file table.hpp
  \brief Tabulated functions A^n -> A, variable sets, and partial evaluations

  A function table stores the n-ary function in a flat vector.  The tuple
  (a_1, ..., a_n) lives at index sum_i a_i * k^(n-i), i.e. the first
  argument is the most significant digit.  Every serialized table in this
  library uses that order.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace finalg
{

using value_type = std::uint32_t;

/*! \brief Base class of all domain errors raised by the library */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Raised when a caller violates an operation's precondition */
class precondition_error : public error
{
public:
  using error::error;
};

/*! \brief Raised when an enumeration or a table would exceed its size budget */
class budget_error : public error
{
public:
  using error::error;
};

/// Largest number of entries a single table may hold.
inline constexpr std::uint64_t max_table_entries = std::uint64_t( 1 ) << 28;

/// Largest supported arity (bounded by the width of var_set).
inline constexpr std::uint32_t max_arity = 63;

/*! \brief Computes k^n, throwing budget_error once the result exceeds `limit` */
inline std::uint64_t checked_power( std::uint64_t base, std::uint32_t exponent, std::uint64_t limit = max_table_entries )
{
  std::uint64_t result = 1;
  for ( std::uint32_t i = 0; i < exponent; ++i )
  {
    if ( base != 0 && result > limit / base )
    {
      throw budget_error( "size " + std::to_string( base ) + "^" + std::to_string( exponent ) + " exceeds the table budget of " + std::to_string( limit ) );
    }
    result *= base;
  }
  if ( result > limit )
  {
    throw budget_error( "size " + std::to_string( result ) + " exceeds the table budget of " + std::to_string( limit ) );
  }
  return result;
}

/*! \brief A set of variables x_1..x_63 stored as a bit mask (bit i-1 is x_i)

  Ordering is lexicographic on the sorted index lists, so {1} < {1,2} <
  {1,2,3} < {1,3} < {2}.
*/
class var_set
{
public:
  constexpr var_set() = default;
  constexpr explicit var_set( std::uint64_t mask ) : mask_( mask ) {}

  var_set( std::initializer_list<std::uint32_t> indices )
  {
    for ( auto i : indices )
    {
      insert( i );
    }
  }

  static var_set from_indices( std::span<const std::uint32_t> indices )
  {
    var_set s;
    for ( auto i : indices )
    {
      s.insert( i );
    }
    return s;
  }

  /// {x_1, ..., x_n}
  static constexpr var_set all( std::uint32_t n )
  {
    return var_set( n >= 64 ? ~std::uint64_t( 0 ) : ( std::uint64_t( 1 ) << n ) - 1 );
  }

  void insert( std::uint32_t index )
  {
    if ( index == 0 || index > max_arity )
    {
      throw precondition_error( "variable index " + std::to_string( index ) + " out of range 1.." + std::to_string( max_arity ) );
    }
    mask_ |= std::uint64_t( 1 ) << ( index - 1 );
  }

  constexpr void erase( std::uint32_t index ) { mask_ &= ~( std::uint64_t( 1 ) << ( index - 1 ) ); }

  constexpr bool contains( std::uint32_t index ) const
  {
    return index >= 1 && index <= 64 && ( ( mask_ >> ( index - 1 ) ) & 1u );
  }

  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint32_t size() const { return static_cast<std::uint32_t>( std::popcount( mask_ ) ); }
  constexpr std::uint64_t mask() const { return mask_; }

  constexpr bool is_subset_of( var_set other ) const { return ( mask_ & ~other.mask_ ) == 0; }

  constexpr var_set operator|( var_set o ) const { return var_set( mask_ | o.mask_ ); }
  constexpr var_set operator&( var_set o ) const { return var_set( mask_ & o.mask_ ); }
  /// Set difference.
  constexpr var_set operator-( var_set o ) const { return var_set( mask_ & ~o.mask_ ); }

  /// Largest member, 0 when empty.
  constexpr std::uint32_t max_index() const { return static_cast<std::uint32_t>( std::bit_width( mask_ ) ); }

  std::vector<std::uint32_t> indices() const
  {
    std::vector<std::uint32_t> out;
    for ( auto m = mask_; m != 0; m &= m - 1 )
    {
      out.push_back( static_cast<std::uint32_t>( std::countr_zero( m ) ) + 1 );
    }
    return out;
  }

  constexpr bool operator==( const var_set& ) const = default;

  /// Lexicographic comparison of the sorted index lists.
  friend constexpr bool operator<( var_set a, var_set b )
  {
    auto x = a.mask_, y = b.mask_;
    while ( x != 0 && y != 0 )
    {
      const auto lx = x & ( ~x + 1 ), ly = y & ( ~y + 1 );
      if ( lx != ly )
      {
        return lx < ly;
      }
      x ^= lx;
      y ^= ly;
    }
    return x == 0 && y != 0;
  }

  /// Renders as {x1,x3}.
  std::string to_string() const
  {
    std::string out = "{";
    bool first = true;
    for ( auto i : indices() )
    {
      if ( !first )
      {
        out += ",";
      }
      out += "x" + std::to_string( i );
      first = false;
    }
    return out + "}";
  }

private:
  std::uint64_t mask_ = 0;
};

/*! \brief All nonempty subsets of {x_1..x_n} in lexicographic order */
inline std::vector<var_set> nonempty_subsets( std::uint32_t n )
{
  std::vector<var_set> out;
  const auto full = var_set::all( n ).mask();
  for ( std::uint64_t m = 1; m != 0 && m <= full; ++m )
  {
    out.emplace_back( m );
  }
  std::sort( out.begin(), out.end() );
  return out;
}

/*! \brief An n-ary function on {0..k-1} stored as a flat value vector */
class function_table
{
public:
  function_table() = default;

  function_table( std::uint32_t arity, value_type carrier_size, std::vector<value_type> values )
      : arity_( arity ), carrier_size_( carrier_size ), values_( std::move( values ) )
  {
    if ( carrier_size_ == 0 )
    {
      throw error( "function table: carrier size must be positive" );
    }
    if ( arity_ > max_arity )
    {
      throw budget_error( "function table: arity " + std::to_string( arity_ ) + " exceeds " + std::to_string( max_arity ) );
    }
    const auto expected = checked_power( carrier_size_, arity_ );
    if ( values_.size() != expected )
    {
      throw error( "function table: expected " + std::to_string( expected ) + " values, got " + std::to_string( values_.size() ) );
    }
    for ( std::size_t i = 0; i < values_.size(); ++i )
    {
      if ( values_[i] >= carrier_size_ )
      {
        throw error( "function table: value " + std::to_string( values_[i] ) + " at index " + std::to_string( i ) + " is outside 0.." + std::to_string( carrier_size_ - 1 ) );
      }
    }
  }

  static function_table constant( std::uint32_t arity, value_type carrier_size, value_type c )
  {
    return function_table( arity, carrier_size, std::vector<value_type>( checked_power( carrier_size, arity ), c ) );
  }

  /// The projection e_i^n onto the (1-based) i-th argument.
  static function_table projection( std::uint32_t arity, value_type carrier_size, std::uint32_t i )
  {
    if ( i == 0 || i > arity )
    {
      throw precondition_error( "projection index " + std::to_string( i ) + " outside 1.." + std::to_string( arity ) );
    }
    const auto size = checked_power( carrier_size, arity );
    const auto stride = checked_power( carrier_size, arity - i );
    std::vector<value_type> values( size );
    for ( std::uint64_t idx = 0; idx < size; ++idx )
    {
      values[idx] = static_cast<value_type>( ( idx / stride ) % carrier_size );
    }
    return function_table( arity, carrier_size, std::move( values ) );
  }

  std::uint32_t arity() const { return arity_; }
  value_type carrier_size() const { return carrier_size_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<value_type>& values() const { return values_; }

  value_type operator[]( std::size_t index ) const { return values_[index]; }

  /// Flat index of a tuple (first argument most significant).
  std::size_t index_of( std::span<const value_type> tuple ) const
  {
    std::size_t idx = 0;
    for ( auto a : tuple )
    {
      idx = idx * carrier_size_ + a;
    }
    return idx;
  }

  value_type at( std::span<const value_type> tuple ) const
  {
    if ( tuple.size() != arity_ )
    {
      throw precondition_error( "function table: tuple of length " + std::to_string( tuple.size() ) + " for arity " + std::to_string( arity_ ) );
    }
    return values_[index_of( tuple )];
  }

  /// Distance in the flat vector between tuples differing by one in argument i.
  std::size_t stride( std::uint32_t i ) const
  {
    std::size_t s = 1;
    for ( auto j = i; j < arity_; ++j )
    {
      s *= carrier_size_;
    }
    return s;
  }

  bool operator==( const function_table& ) const = default;

private:
  std::uint32_t arity_ = 0;
  value_type carrier_size_ = 1;
  std::vector<value_type> values_{ 0 };
};

/*! \brief Assignment of constants to a subset M of {x_1..x_n}

  The keys of `assigned` form M, the values the sequence C.
*/
struct evaluation
{
  std::uint32_t context_arity = 0;
  std::map<std::uint32_t, value_type> assigned;

  evaluation() = default;

  evaluation( std::uint32_t n, std::map<std::uint32_t, value_type> assignment )
      : context_arity( n ), assigned( std::move( assignment ) )
  {
    for ( const auto& [index, value] : assigned )
    {
      if ( index == 0 || index > context_arity )
      {
        throw precondition_error( "evaluation: variable x" + std::to_string( index ) + " outside x1..x" + std::to_string( context_arity ) );
      }
    }
  }

  var_set domain() const
  {
    var_set s;
    for ( const auto& entry : assigned )
    {
      s.insert( entry.first );
    }
    return s;
  }
};

/*! \brief Advances a mixed-radix counter of base k; returns false after the last tuple */
inline bool next_tuple( std::span<value_type> digits, value_type k )
{
  for ( auto i = digits.size(); i-- > 0; )
  {
    if ( ++digits[i] < k )
    {
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

} // namespace finalg
