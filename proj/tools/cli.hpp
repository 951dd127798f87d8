// Command-line front end for finalg.
//
//   finalg <command> [options] ALGEBRA [TERM...]
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <finalg/finalg.hpp>

namespace finalg::cli
{

enum exit_code : int
{
  ok = 0,
  domain_failure = 1,
  usage_failure = 2
};

class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct invocation
{
  std::string command;
  std::string algebra_path;
  std::vector<std::string> terms;
  std::optional<std::uint32_t> arity;
  std::string measures = "1,2,3";
  std::string set;
  bool json = false;
  bool list = false;
  std::size_t max_clone_size = default_clone_budget;
};

namespace detail
{

inline std::vector<std::uint32_t> parse_index_list( const std::string& text, const char* what )
{
  std::vector<std::uint32_t> out;
  std::stringstream ss( text );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    item.erase( 0, item.find_first_not_of( " \t{" ) );
    item.erase( item.find_last_not_of( " \t}" ) + 1 );
    if ( !item.empty() && item[0] == 'x' )
    {
      item.erase( 0, 1 );
    }
    if ( item.empty() || item.find_first_not_of( "0123456789" ) != std::string::npos || item.size() > 9 )
    {
      throw usage_error( std::string( "malformed " ) + what + " '" + text + "'" );
    }
    out.push_back( static_cast<std::uint32_t>( std::stoul( item ) ) );
  }
  if ( out.empty() )
  {
    throw usage_error( std::string( "empty " ) + what );
  }
  return out;
}

inline std::string bool_text( bool b ) { return b ? "true" : "false"; }

inline std::string sets_text( const std::vector<var_set>& sets )
{
  std::string out = "[";
  for ( std::size_t i = 0; i < sets.size(); ++i )
  {
    out += ( i ? ", " : "" ) + sets[i].to_string();
  }
  return out + "]";
}

inline std::string table_text( const function_table& t )
{
  std::string out = "[";
  for ( std::size_t i = 0; i < t.size(); ++i )
  {
    out += ( i ? "," : "" ) + std::to_string( t[i] );
  }
  return out + "]";
}

} // namespace detail

/*! \brief Executes one command, writing the report to `out` */
inline int run( const invocation& inv, std::ostream& out, std::ostream& err )
{
  try
  {
    const auto alg = load_algebra( inv.algebra_path );
    const auto sig = alg.sig();

    std::vector<term> terms;
    for ( const auto& text : inv.terms )
    {
      try
      {
        terms.push_back( parse( text, sig ) );
      }
      catch ( const parse_error& e )
      {
        throw parse_error( "term '" + text + "': " + e.what(), e.position() );
      }
    }

    std::uint32_t max_var = 0;
    for ( const auto& t : terms )
    {
      max_var = std::max( max_var, max_variable( t ) );
    }
    if ( inv.arity && *inv.arity < max_var )
    {
      throw usage_error( "--arity " + std::to_string( *inv.arity ) + " is smaller than the largest variable index " + std::to_string( max_var ) );
    }
    const auto n = inv.arity.value_or( max_var );

    auto expect_terms = [&]( std::size_t count ) {
      if ( terms.size() != count )
      {
        throw usage_error( "'" + inv.command + "' expects " + std::to_string( count ) + " term(s), got " + std::to_string( terms.size() ) );
      }
    };

    if ( inv.command == "alg-check" )
    {
      expect_terms( 0 );
      if ( inv.json )
      {
        out << serialize_algebra( alg );
      }
      else
      {
        out << "valid algebra '" << alg.name() << "': carrier size " << alg.carrier_size() << ", " << alg.operations().size() << " operation(s)";
        for ( const auto& op : alg.operations() )
        {
          out << " " << op.symbol << "/" << op.arity;
        }
        out << "\n";
      }
    }
    else if ( inv.command == "eval" )
    {
      expect_terms( 1 );
      const auto table = induced_operation( terms[0], alg, n );
      if ( inv.json )
      {
        out << to_json( table ).dump() << "\n";
      }
      else
      {
        out << detail::table_text( table ) << "\n";
      }
    }
    else if ( inv.command == "ess" )
    {
      expect_terms( 1 );
      const auto e = ess( terms[0], alg, n );
      if ( inv.json )
      {
        out << json{ { "arity", n }, { "ess", to_json( e ) } }.dump() << "\n";
      }
      else
      {
        out << e.to_string() << "\n";
      }
    }
    else if ( inv.command == "sep" )
    {
      expect_terms( 1 );
      if ( !inv.set.empty() )
      {
        const auto m = var_set::from_indices( detail::parse_index_list( inv.set, "variable set" ) );
        const auto verdict = is_separable( terms[0], alg, n, m );
        if ( inv.json )
        {
          out << json{ { "set", to_json( m ) }, { "separable", verdict } }.dump() << "\n";
        }
        else
        {
          out << m.to_string() << " separable: " << detail::bool_text( verdict ) << "\n";
        }
      }
      else
      {
        const auto sets = sep_sets( terms[0], alg, n );
        if ( inv.json )
        {
          json arr = json::array();
          for ( auto m : sets )
          {
            arr.push_back( to_json( m ) );
          }
          out << json{ { "arity", n }, { "sep", arr } }.dump() << "\n";
        }
        else
        {
          out << detail::sets_text( sets ) << "\n";
        }
      }
    }
    else if ( inv.command == "subterm" || inv.command == "identity" )
    {
      expect_terms( 2 );
      const bool verdict = inv.command == "subterm" ? is_subterm( terms[0], terms[1], alg, n ) : satisfies_identity( alg, terms[0], terms[1], n );
      if ( inv.json )
      {
        out << json{ { inv.command, verdict } }.dump() << "\n";
      }
      else
      {
        out << detail::bool_text( verdict ) << "\n";
      }
    }
    else if ( inv.command == "cp" )
    {
      expect_terms( 1 );
      const auto measures = detail::parse_index_list( inv.measures, "measure list" );
      bool want[4] = { false, false, false, false };
      for ( auto m : measures )
      {
        if ( m < 1 || m > 3 )
        {
          throw usage_error( "unknown measure " + std::to_string( m ) + " (expected 1, 2 or 3)" );
        }
        want[m] = true;
      }
      json j{ { "term", print( terms[0] ) }, { "arity", n } };
      if ( want[1] )
      {
        j["cp1"] = cp1( terms[0] );
      }
      if ( want[2] )
      {
        j["cp2"] = cp2( terms[0] );
      }
      std::optional<complexity_report> report;
      if ( want[3] )
      {
        report = cp3_total( terms[0], alg, n );
        j["cp3"] = to_json( *report );
      }
      if ( inv.json )
      {
        out << j.dump() << "\n";
      }
      else
      {
        if ( want[1] )
        {
          out << "Cp1 = " << cp1( terms[0] ) << "\n";
        }
        if ( want[2] )
        {
          out << "Cp2 = " << cp2( terms[0] ) << "\n";
        }
        if ( report )
        {
          for ( const auto& [m, c] : report->per_set )
          {
            out << "Cp3 " << m.to_string() << " = " << c << "\n";
          }
          out << "Cp3 total = " << report->total << "\n";
        }
      }
    }
    else if ( inv.command == "census" || inv.command == "clone" )
    {
      expect_terms( 0 );
      if ( !inv.arity )
      {
        throw usage_error( "'" + inv.command + "' requires --arity" );
      }
      const auto clone = make_clone_level( alg, n, inv.max_clone_size );
      if ( inv.command == "census" )
      {
        const auto census = census_of( clone, alg.name() );
        if ( inv.json )
        {
          out << to_json( census ).dump( 2 ) << "\n";
        }
        else
        {
          out << "algebra " << census.algebra << ", n = " << census.n << ", clone size " << census.clone_size << "\n";
          for ( auto it = census.histogram.rbegin(); it != census.histogram.rend(); ++it )
          {
            out << "  complexity " << it->first << ": " << it->second << "\n";
          }
          out << "n-complexity = " << census.total << "\n";
        }
      }
      else if ( inv.json )
      {
        out << to_json( clone, inv.list ).dump( 2 ) << "\n";
      }
      else
      {
        out << "clone size " << clone.size() << "\n";
        if ( inv.list )
        {
          for ( std::size_t i = 0; i < clone.size(); ++i )
          {
            out << detail::table_text( clone.members()[i] ) << "  " << print( clone.witness( i ) ) << "\n";
          }
        }
      }
    }
    else
    {
      throw usage_error( "unknown command '" + inv.command + "'" );
    }
    return exit_code::ok;
  }
  catch ( const usage_error& e )
  {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage_failure;
  }
  catch ( const error& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_code::domain_failure;
  }
}

inline const std::vector<std::pair<std::string, std::string>>& commands()
{
  static const std::vector<std::pair<std::string, std::string>> list{
      { "alg-check", "validate an algebra file" },
      { "eval", "print the table of the induced operation of TERM" },
      { "ess", "print the essential variables of TERM" },
      { "sep", "list the separable sets of TERM, or test one set with --set" },
      { "subterm", "decide TERM1 < TERM2" },
      { "identity", "decide whether TERM1 ~ TERM2 holds in the algebra" },
      { "cp", "complexity measures of TERM" },
      { "census", "n-complexity of the algebra with its distribution" },
      { "clone", "size (and with --list the members) of the n-ary clone" } };
  return list;
}

/*! \brief Parses argv and runs the selected command */
inline int main( int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr )
{
  CLI::App app{ "finalg: essential variables, separable sets and term complexity over finite algebras" };
  app.require_subcommand( 1 );

  invocation inv;
  std::int64_t arity = -1;
  for ( const auto& [name, help] : commands() )
  {
    auto* sub = app.add_subcommand( name, help );
    sub->add_option( "algebra", inv.algebra_path, "algebra file (JSON)" )->required();
    sub->add_option( "terms", inv.terms, "terms in prefix syntax" );
    sub->add_option( "--arity", arity, "context arity n (default: largest variable index)" )->check( CLI::Range( 0, static_cast<int>( max_arity ) ) );
    sub->add_flag( "--json", inv.json, "machine-readable output" );
    sub->add_option( "--max-clone-size", inv.max_clone_size, "clone enumeration budget" );
    if ( name == "cp" )
    {
      sub->add_option( "--measures", inv.measures, "comma list drawn from 1,2,3" );
    }
    if ( name == "sep" )
    {
      sub->add_option( "--set", inv.set, "single variable set to test, e.g. x1,x2" );
    }
    if ( name == "clone" )
    {
      sub->add_flag( "--list", inv.list, "list members with generating terms" );
    }
  }

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    out << app.help();
    return exit_code::ok;
  }
  catch ( const CLI::ParseError& e )
  {
    err << "usage error: " << e.what() << "\n" << app.help();
    return exit_code::usage_failure;
  }

  inv.command = app.get_subcommands().front()->get_name();
  if ( arity >= 0 )
  {
    inv.arity = static_cast<std::uint32_t>( arity );
  }
  return run( inv, out, err );
}

} // namespace finalg::cli
