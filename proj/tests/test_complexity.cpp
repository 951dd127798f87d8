#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace finalg;
using namespace finalg::testing;

namespace
{

std::map<var_set, std::uint64_t> oracle_per_set( const function_table& table )
{
  const auto n = table.arity();
  const auto counts = oracle::cp3_per_subset( oracle::from_values( table.values(), table.carrier_size() ), n, table.carrier_size() );
  std::map<var_set, std::uint64_t> out;
  for ( std::uint64_t j = 1; j < counts.size(); ++j )
  {
    out[oracle::subset_of_code( j, n )] = counts[j];
  }
  return out;
}

} // namespace

TEST( SyntacticMeasures, Examples )
{
  const auto alg = bu();
  EXPECT_EQ( cp1( t1( alg ) ), 3u );
  EXPECT_EQ( cp1( t2( alg ) ), 4u );
  EXPECT_EQ( cp1( term::var( 5 ) ), 1u );
  EXPECT_EQ( cp2( t1( alg ) ), 2u );
  EXPECT_EQ( cp2( t2( alg ) ), 4u );
  EXPECT_EQ( cp2( term::var( 1 ) ), 0u );
  EXPECT_EQ( cp2( parse( "+(x1,#1)", alg.sig() ) ), 1u );
}

TEST( Cp3, RunningExamplesMatchBruteForce )
{
  const auto alg = bu();
  // independent formulas for t1 = x1x2 xor x3 and t2 = x1x3 xor x2(not x3)
  const oracle::function f1 = []( const std::vector<std::uint32_t>& a ) { return ( a[0] & a[1] ) ^ a[2]; };
  const oracle::function f2 = []( const std::vector<std::uint32_t>& a ) { return ( a[0] & a[2] ) ^ ( a[1] & ( 1 - a[2] ) ); };
  EXPECT_EQ( oracle::cp3_total( f1, 3, 2 ), 13u );
  EXPECT_EQ( oracle::cp3_total( f2, 3, 2 ), 11u );

  const auto r1 = cp3_total( t1( alg ), alg, 3 );
  const auto r2 = cp3_total( t2( alg ), alg, 3 );
  EXPECT_EQ( r1.total, 13u );
  EXPECT_EQ( r2.total, 11u );

  const std::map<var_set, std::uint64_t> expected2{ { { 1 }, 2 }, { { 2 }, 2 }, { { 3 }, 2 }, { { 1, 2 }, 0 }, { { 1, 3 }, 2 }, { { 2, 3 }, 2 }, { { 1, 2, 3 }, 1 } };
  EXPECT_EQ( r2.per_set, expected2 );
  const std::map<var_set, std::uint64_t> expected1{ { { 1 }, 2 }, { { 2 }, 2 }, { { 3 }, 4 }, { { 1, 2 }, 2 }, { { 1, 3 }, 1 }, { { 2, 3 }, 1 }, { { 1, 2, 3 }, 1 } };
  EXPECT_EQ( r1.per_set, expected1 );

  EXPECT_EQ( cp3_set( t2( alg ), alg, 3, { 3 } ), 2u );
  EXPECT_EQ( cp3_set( t2( alg ), alg, 3, { 1, 2, 3 } ), 1u );
}

TEST( Cp3, OrReadingOfPlusGivesNine )
{
  // with + read as disjunction t1 would only reach 9, which rules that reading out
  const auto ba = boolean_lattice();
  EXPECT_EQ( cp3_total( parse( "or(and(x1,x2),x3)", ba.sig() ), ba, 3 ).total, 9u );
}

TEST( Cp3, SmallCases )
{
  const auto alg = bu();
  EXPECT_EQ( cp3_total( term::var( 1 ), alg, 1 ).total, 1u );
  EXPECT_EQ( cp3_set( term::constant( 0 ), alg, 3, { 2 } ), 0u );
  EXPECT_EQ( cp3_total( term::constant( 1 ), alg, 3 ).total, 0u );
  EXPECT_THROW( cp3_set( t1( alg ), alg, 3, var_set() ), precondition_error );
  EXPECT_THROW( cp3_set( t1( alg ), alg, 3, { 4 } ), precondition_error );

  const finite_algebra trivial( "one", 1, { { "f", 2, { 0 } } } );
  EXPECT_EQ( cp3_total( parse( "f(x1,x2)", trivial.sig() ), trivial, 2 ).total, 0u );
}

TEST( Cp3OfTable, Examples )
{
  EXPECT_EQ( cp3_of_table( function_table( 3, 2, { 0, 1, 1, 0, 1, 0, 0, 1 } ) ).total, 19u );
  EXPECT_EQ( cp3_of_table( function_table::constant( 3, 2, 0 ) ).total, 0u );
  const auto e1 = cp3_of_table( function_table::projection( 3, 2, 1 ) );
  EXPECT_EQ( e1.total, 4u );
  EXPECT_EQ( e1.per_set.at( var_set{ 1 } ), 4u );
}

TEST( Cp3OfTable, AgreesWithCp3Total )
{
  std::mt19937_64 rng( 59 );
  for ( const auto& alg : { bu(), z3() } )
  {
    for ( int trial = 0; trial < 50; ++trial )
    {
      const auto t = random_term( alg, 3, 4, rng );
      EXPECT_EQ( cp3_of_table( induced_operation( t, alg, 3 ) ), cp3_total( t, alg, 3 ) );
    }
  }
}

TEST( Cp3OfTable, AgreesWithNestedLoopOracle )
{
  for ( std::uint32_t code = 0; code < 256; ++code )
  {
    std::vector<value_type> v( 8 );
    for ( int i = 0; i < 8; ++i )
    {
      v[i] = ( code >> ( 7 - i ) ) & 1u;
    }
    const function_table table( 3, 2, v );
    ASSERT_EQ( cp3_of_table( table ).per_set, oracle_per_set( table ) ) << code;
  }
  std::mt19937_64 rng( 61 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const auto table = random_table( 2, 3, rng );
    ASSERT_EQ( cp3_of_table( table ).per_set, oracle_per_set( table ) );
  }
  for ( int trial = 0; trial < 10; ++trial )
  {
    const auto table = random_table( 3, 3, rng );
    ASSERT_EQ( cp3_of_table( table ).per_set, oracle_per_set( table ) );
  }
}

TEST( Cp3, BoundsAndSupport )
{
  std::mt19937_64 rng( 67 );
  for ( const auto& alg : { bu(), z3() } )
  {
    const auto k = alg.carrier_size();
    for ( int trial = 0; trial < 60; ++trial )
    {
      const auto t = random_term( alg, 3, 4, rng );
      const auto table = induced_operation( t, alg, 3 );
      const auto e = essential_vars( table );
      const auto report = cp3_of_table( table );
      std::uint64_t sum = 0;
      for ( const auto& [m, c] : report.per_set )
      {
        sum += c;
        EXPECT_LE( c, oracle::ipow( k, 3 - m.size() ) );
        if ( m.is_subset_of( e ) )
        {
          EXPECT_EQ( c >= 1, is_separable( table, m ) );
        }
        else
        {
          EXPECT_EQ( c, 0u );
        }
      }
      EXPECT_LE( report.per_set.at( var_set::all( 3 ) ), 1u );
      EXPECT_EQ( sum, report.total );
    }
  }
}

TEST( Cp3, InvariantUnderIdentities )
{
  std::mt19937_64 rng( 71 );
  const auto alg = bu();
  const auto clone = make_clone_level( alg, 3 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const auto s = random_term( alg, 3, 5, rng );
    const auto member = clone.find( induced_operation( s, alg, 3 ) );
    ASSERT_TRUE( member );
    const auto t = clone.witness( *member );
    ASSERT_TRUE( satisfies_identity( alg, s, t, 3 ) );
    EXPECT_EQ( cp3_total( s, alg, 3 ), cp3_total( t, alg, 3 ) );
  }
}

TEST( Cp3, InvariantUnderVariablePermutation )
{
  std::mt19937_64 rng( 73 );
  for ( const auto& alg : { bu(), z3() } )
  {
    for ( int trial = 0; trial < 60; ++trial )
    {
      const auto t = random_term( alg, 3, 4, rng );
      const auto sigma = random_permutation( 3, rng );
      const auto renamed = rename_variables( t, sigma );
      for ( auto m : nonempty_subsets( 3 ) )
      {
        EXPECT_EQ( cp3_set( t, alg, 3, m ), cp3_set( renamed, alg, 3, rename_set( m, sigma ) ) );
      }
    }
  }
}

TEST( Cp3, ConstantMapsBijectiveOnValues )
{
  const auto alg = bu();
  const auto p = parse( "+(x1,#0)", alg.sig() );
  const auto q = map_constants( p, { 1, 0 } );
  EXPECT_EQ( value_set( p, alg, 1 ), ( std::set<value_type>{ 0, 1 } ) );
  EXPECT_EQ( cp3_total( p, alg, 1 ), cp3_total( q, alg, 1 ) );
}

TEST( Cp3, ConstantMapsInjectiveOnValuesCanChangeCp3 )
{
  // g = swap is injective on V_p = {0}, yet *(x1,#0) is constant while *(x1,#1) is x1
  const auto alg = bu();
  const auto p = parse( "*(x1,#0)", alg.sig() );
  const auto q = map_constants( p, { 1, 0 } );
  EXPECT_EQ( value_set( p, alg, 1 ), ( std::set<value_type>{ 0 } ) );
  EXPECT_EQ( cp3_total( p, alg, 1 ).total, 0u );
  EXPECT_EQ( cp3_total( q, alg, 1 ).total, 1u );
}

TEST( Cp3, InvariantUnderIsomorphicCopies )
{
  std::mt19937_64 rng( 79 );
  for ( const auto& alg : { bu(), z3(), chain3() } )
  {
    for ( int trial = 0; trial < 40; ++trial )
    {
      std::vector<value_type> phi( alg.carrier_size() );
      std::iota( phi.begin(), phi.end(), 0u );
      std::shuffle( phi.begin(), phi.end(), rng );
      const auto copy = transport_algebra( alg, phi );
      const auto t = random_term( alg, 3, 4, rng );
      EXPECT_EQ( cp3_total( t, alg, 3 ), cp3_total( t, copy, 3 ) );
    }
  }
}

TEST( ValueSet, Examples )
{
  EXPECT_EQ( value_set( term::constant( 1 ), bu(), 2 ), ( std::set<value_type>{ 1 } ) );
  EXPECT_EQ( value_set( t1( bu() ), bu(), 3 ), ( std::set<value_type>{ 0, 1 } ) );
  EXPECT_EQ( value_set( term::var( 1 ), z3(), 1 ), ( std::set<value_type>{ 0, 1, 2 } ) );
}
