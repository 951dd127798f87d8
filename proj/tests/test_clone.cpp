#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace finalg;
using namespace finalg::testing;

TEST( CloneLevel, PrimalAlgebraHasAllFunctions )
{
  const auto clone = make_clone_level( bu(), 3 );
  EXPECT_EQ( clone.size(), 256u );
  EXPECT_EQ( make_clone_level( bu(), 2 ).size(), 16u );
  EXPECT_EQ( make_clone_level( bu(), 1 ).size(), 4u );
}

TEST( CloneLevel, SemilatticeBinaryClone )
{
  const auto clone = make_clone_level( semilattice(), 2 );
  ASSERT_EQ( clone.size(), 3u );
  EXPECT_EQ( clone.members()[0], function_table::projection( 2, 2, 1 ) );
  EXPECT_EQ( clone.members()[1], function_table::projection( 2, 2, 2 ) );
  EXPECT_EQ( clone.members()[2].values(), ( std::vector<value_type>{ 0, 0, 0, 1 } ) );
  EXPECT_EQ( print( clone.witness( 2 ) ), "*(x1,x2)" );
  // nonempty products of x1..x3
  EXPECT_EQ( make_clone_level( semilattice(), 3 ).size(), 7u );
}

TEST( CloneLevel, ContainsIdentityAndIsClosed )
{
  for ( const auto& alg : { bu(), semilattice(), chain3() } )
  {
    const auto clone = make_clone_level( alg, 1 );
    EXPECT_TRUE( clone.find( function_table::projection( 1, alg.carrier_size(), 1 ) ) );
  }
  const auto alg = chain3();
  const auto clone = make_clone_level( alg, 2 );
  for ( std::size_t o = 0; o < alg.operations().size(); ++o )
  {
    for ( const auto& a : clone.members() )
    {
      for ( const auto& b : clone.members() )
      {
        std::vector<value_type> v( a.size() );
        for ( std::size_t i = 0; i < v.size(); ++i )
        {
          const std::vector<value_type> args{ a[i], b[i] };
          v[i] = alg.apply( o, args );
        }
        EXPECT_TRUE( clone.find( v ) );
      }
    }
  }
}

TEST( CloneLevel, WitnessesGenerateTheirMembers )
{
  for ( const auto& alg : { bu(), chain3() } )
  {
    const auto clone = make_clone_level( alg, 2 );
    for ( std::size_t i = 0; i < clone.size(); ++i )
    {
      EXPECT_EQ( induced_operation( clone.witness( i ), alg, 2 ), clone.members()[i] );
    }
  }
}

TEST( CloneLevel, Deterministic )
{
  const auto a = make_clone_level( bu(), 3 );
  const auto b = make_clone_level( bu(), 3 );
  EXPECT_EQ( a.members(), b.members() );
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    EXPECT_EQ( a.witness( i ), b.witness( i ) );
  }
}

TEST( CloneLevel, BudgetExceeded )
{
  try
  {
    make_clone_level( bu(), 3, 100 );
    FAIL();
  }
  catch ( const budget_error& e )
  {
    EXPECT_NE( std::string( e.what() ).find( "101" ), std::string::npos ) << e.what();
  }
}

TEST( Census, UnaryPrimal )
{
  const auto census = algebra_n_complexity( bu(), 1 );
  EXPECT_EQ( census.clone_size, 4u );
  EXPECT_EQ( census.total, 2u );
  EXPECT_EQ( census.histogram, ( std::map<std::uint64_t, std::uint64_t>{ { 0, 2 }, { 1, 2 } } ) );
}

TEST( Census, TernaryPrimalMatchesBruteForce )
{
  // the oracle walks all 256 ternary Boolean functions independently of the clone
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t total = 0;
  for ( std::uint32_t code = 0; code < 256; ++code )
  {
    std::vector<std::uint32_t> v( 8 );
    for ( int i = 0; i < 8; ++i )
    {
      v[i] = ( code >> ( 7 - i ) ) & 1u;
    }
    const auto c = oracle::cp3_total( oracle::from_values( v, 2 ), 3, 2 );
    ++histogram[c];
    total += c;
  }
  const std::map<std::uint64_t, std::uint64_t> frozen{ { 19, 2 }, { 16, 16 }, { 13, 40 }, { 12, 72 }, { 11, 24 }, { 10, 6 },
                                                       { 9, 48 }, { 7, 16 }, { 6, 24 }, { 4, 6 }, { 0, 2 } };
  EXPECT_EQ( histogram, frozen );
  EXPECT_EQ( total, 2714u );

  const auto census = algebra_n_complexity( bu(), 3 );
  EXPECT_EQ( census.clone_size, 256u );
  EXPECT_EQ( census.histogram, frozen );
  EXPECT_EQ( census.total, 2714u );
}

TEST( Census, AndTypeBinaryFunctionsHaveComplexitySix )
{
  EXPECT_EQ( cp3_total( parse( "*(x1,x2)", bu().sig() ), bu(), 3 ).total, 6u );
  EXPECT_EQ( cp3_total( parse( "neg(*(neg(x1),x3))", bu().sig() ), bu(), 3 ).total, 6u );
}

TEST( Census, HistogramConsistency )
{
  for ( const auto& alg : { semilattice(), chain3(), bu() } )
  {
    const auto census = algebra_n_complexity( alg, 2 );
    std::uint64_t count = 0, weighted = 0;
    for ( const auto& [value, members] : census.histogram )
    {
      count += members;
      weighted += value * members;
    }
    EXPECT_EQ( count, census.clone_size );
    EXPECT_EQ( weighted, census.total );
  }
}

TEST( FreeAlgebra, SemilatticeSeparabilityAgreesButCountsDiffer )
{
  const auto sl = semilattice();
  const auto free3 = free_algebra( sl, 3 );
  EXPECT_EQ( free3.carrier_size(), 7u );
  for ( const auto* text : { "*(x1,x2)", "x1", "*(x2,*(x1,x2))" } )
  {
    const auto t = parse( text, sl.sig() );
    EXPECT_EQ( ess( t, free3, 2 ), ess( t, sl, 2 ) ) << text;
    EXPECT_EQ( sep_sets( t, free3, 2 ), sep_sets( t, sl, 2 ) ) << text;
  }
  const auto t = parse( "*(x1,x2)", sl.sig() );
  EXPECT_EQ( cp3_set( t, sl, 2, { 1 } ), 1u );
  EXPECT_EQ( cp3_set( t, free_algebra( sl, 2 ), 2, { 1 } ), 2u );
}
