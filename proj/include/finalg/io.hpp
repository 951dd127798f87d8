/*!
  \file io.hpp
  \brief JSON encodings of algebras, complexity reports, censuses, and clones

  Algebra files look like

      {
        "name": "BU",
        "carrier": 2,
        "operations": [
          {"symbol": "+", "arity": 2, "table": [0, 1, 1, 0]},
          ...
        ]
      }

  with every table in first-argument-most-significant order.  Writers emit
  fields in a fixed order so output is stable and diffable.
*/

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "algebra.hpp"
#include "clone.hpp"
#include "complexity.hpp"
#include "syntax.hpp"

namespace finalg
{

using json = nlohmann::ordered_json;

/*! \brief Raised for malformed JSON or missing fields */
class format_error : public error
{
public:
  using error::error;
};

namespace detail
{

template<typename T>
T field( const json& j, const char* key, const std::string& where )
{
  if ( !j.is_object() || !j.contains( key ) )
  {
    throw format_error( where + ": missing field '" + key + "'" );
  }
  try
  {
    return j.at( key ).get<T>();
  }
  catch ( const nlohmann::json::exception& )
  {
    throw format_error( where + ": field '" + key + "' has the wrong type" );
  }
}

} // namespace detail

inline algebra_description algebra_description_from_json( const json& j )
{
  algebra_description raw;
  raw.name = detail::field<std::string>( j, "name", "algebra" );
  raw.carrier = detail::field<std::int64_t>( j, "carrier", "algebra" );
  const auto ops = detail::field<json>( j, "operations", "algebra" );
  if ( !ops.is_array() )
  {
    throw format_error( "algebra: 'operations' must be an array" );
  }
  for ( std::size_t pos = 0; pos < ops.size(); ++pos )
  {
    const auto where = "operation at position " + std::to_string( pos );
    const auto& o = ops[pos];
    operation op;
    op.symbol = detail::field<std::string>( o, "symbol", where );
    const auto arity = detail::field<std::int64_t>( o, "arity", where );
    if ( arity < 1 || arity > max_arity )
    {
      throw validation_error( "operation '" + op.symbol + "' (position " + std::to_string( pos ) + "): arity must be in 1.." + std::to_string( max_arity ) );
    }
    op.arity = static_cast<std::uint32_t>( arity );
    const auto table = detail::field<std::vector<std::int64_t>>( o, "table", where );
    for ( std::size_t i = 0; i < table.size(); ++i )
    {
      if ( table[i] < 0 || table[i] >= raw.carrier )
      {
        throw validation_error( "operation '" + op.symbol + "' (position " + std::to_string( pos ) + "): entry " + std::to_string( table[i] ) + " at index " + std::to_string( i ) + " is outside 0.." + std::to_string( raw.carrier - 1 ) );
      }
      op.table.push_back( static_cast<value_type>( table[i] ) );
    }
    raw.operations.push_back( std::move( op ) );
  }
  return raw;
}

inline finite_algebra algebra_from_json( const json& j )
{
  return validate_algebra( algebra_description_from_json( j ) );
}

inline finite_algebra parse_algebra( const std::string& text )
{
  json j;
  try
  {
    j = json::parse( text );
  }
  catch ( const nlohmann::json::parse_error& e )
  {
    throw format_error( std::string( "algebra: invalid JSON: " ) + e.what() );
  }
  return algebra_from_json( j );
}

inline finite_algebra load_algebra( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw format_error( "cannot open algebra file '" + path + "'" );
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try
  {
    return parse_algebra( buffer.str() );
  }
  catch ( const error& e )
  {
    throw format_error( path + ": " + e.what() );
  }
}

inline json to_json( const finite_algebra& alg )
{
  json ops = json::array();
  for ( const auto& op : alg.operations() )
  {
    ops.push_back( json{ { "symbol", op.symbol }, { "arity", op.arity }, { "table", op.table } } );
  }
  return json{ { "name", alg.name() }, { "carrier", alg.carrier_size() }, { "operations", ops } };
}

/*! \brief Canonical text of an algebra file

  One operation per line, tables on a single line, trailing newline.
  `serialize_algebra( parse_algebra( s ) ) == s` for any canonical s.
*/
inline std::string serialize_algebra( const finite_algebra& alg )
{
  std::string out = "{\n";
  out += "  \"name\": " + json( alg.name() ).dump() + ",\n";
  out += "  \"carrier\": " + std::to_string( alg.carrier_size() ) + ",\n";
  out += "  \"operations\": [";
  for ( std::size_t i = 0; i < alg.operations().size(); ++i )
  {
    const auto& op = alg.operations()[i];
    out += i ? ",\n" : "\n";
    out += "    {\"symbol\": " + json( op.symbol ).dump() + ", \"arity\": " + std::to_string( op.arity ) + ", \"table\": " + json( op.table ).dump() + "}";
  }
  out += alg.operations().empty() ? "]\n" : "\n  ]\n";
  return out + "}\n";
}

inline json to_json( const function_table& t )
{
  return json{ { "arity", t.arity() }, { "carrier", t.carrier_size() }, { "values", t.values() } };
}

inline function_table function_table_from_json( const json& j )
{
  return function_table( detail::field<std::uint32_t>( j, "arity", "table" ), detail::field<value_type>( j, "carrier", "table" ),
                         detail::field<std::vector<value_type>>( j, "values", "table" ) );
}

/// Machine form of a variable set: sorted index array.
inline json to_json( var_set s )
{
  return json( s.indices() );
}

inline var_set var_set_from_json( const json& j )
{
  return var_set::from_indices( j.get<std::vector<std::uint32_t>>() );
}

inline json to_json( const complexity_report& r )
{
  json sets = json::array();
  for ( const auto& [m, c] : r.per_set )
  {
    sets.push_back( json{ { "set", to_json( m ) }, { "count", c } } );
  }
  return json{ { "arity", r.arity }, { "per_set", sets }, { "total", r.total } };
}

inline complexity_report complexity_report_from_json( const json& j )
{
  complexity_report r;
  r.arity = detail::field<std::uint32_t>( j, "arity", "report" );
  for ( const auto& e : detail::field<json>( j, "per_set", "report" ) )
  {
    r.per_set.emplace( var_set_from_json( e.at( "set" ) ), e.at( "count" ).get<std::uint64_t>() );
  }
  r.total = detail::field<std::uint64_t>( j, "total", "report" );
  return r;
}

/// {algebra, n, clone_size, total, histogram} with the histogram sorted by complexity descending.
inline json to_json( const algebra_census& c )
{
  json hist = json::array();
  for ( auto it = c.histogram.rbegin(); it != c.histogram.rend(); ++it )
  {
    hist.push_back( json{ { "complexity", it->first }, { "count", it->second } } );
  }
  return json{ { "algebra", c.algebra }, { "n", c.n }, { "clone_size", c.clone_size }, { "total", c.total }, { "histogram", hist } };
}

inline algebra_census algebra_census_from_json( const json& j )
{
  algebra_census c;
  c.algebra = detail::field<std::string>( j, "algebra", "census" );
  c.n = detail::field<std::uint32_t>( j, "n", "census" );
  c.clone_size = detail::field<std::uint64_t>( j, "clone_size", "census" );
  c.total = detail::field<std::uint64_t>( j, "total", "census" );
  for ( const auto& e : detail::field<json>( j, "histogram", "census" ) )
  {
    c.histogram.emplace( e.at( "complexity" ).get<std::uint64_t>(), e.at( "count" ).get<std::uint64_t>() );
  }
  return c;
}

/// Clone summary; members (table plus witness term) only when `with_members`.
inline json to_json( const clone_level& clone, bool with_members )
{
  json j{ { "n", clone.arity() }, { "carrier", clone.carrier_size() }, { "clone_size", clone.size() } };
  if ( with_members )
  {
    json members = json::array();
    for ( std::size_t i = 0; i < clone.size(); ++i )
    {
      members.push_back( json{ { "table", clone.members()[i].values() }, { "witness", print( clone.witness( i ) ) } } );
    }
    j["members"] = members;
  }
  return j;
}

} // namespace finalg
