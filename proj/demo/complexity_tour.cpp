// Walks through the two running example terms over the two-element Boolean
// algebra ({0,1}; xor, and, not) and prints their essential variables,
// separable sets and complexities, then the 3-complexity of the algebra.

#include <iostream>

#include <finalg/finalg.hpp>

int main()
{
  using namespace finalg;

  const finite_algebra bu( "BU", 2,
                           { { "+", 2, { 0, 1, 1, 0 } },
                             { "*", 2, { 0, 0, 0, 1 } },
                             { "neg", 1, { 1, 0 } } } );

  for ( const auto* text : { "+(*(x1,x2),x3)", "+(*(x1,x3),*(x2,neg(x3)))" } )
  {
    const auto t = parse( text, bu.sig() );
    const auto report = cp3_total( t, bu, 3 );
    std::cout << print( t ) << "\n";
    std::cout << "  Ess = " << ess( t, bu, 3 ).to_string() << "\n";
    std::cout << "  Sep =";
    for ( auto m : sep_sets( t, bu, 3 ) )
    {
      std::cout << " " << m.to_string();
    }
    std::cout << "\n  Cp1 = " << cp1( t ) << ", Cp2 = " << cp2( t ) << ", Cp3 = " << report.total << "\n";
    for ( const auto& [m, c] : report.per_set )
    {
      std::cout << "    " << m.to_string() << ": " << c << "\n";
    }
  }

  const auto census = algebra_n_complexity( bu, 3 );
  std::cout << "3-complexity of BU: " << census.total << " over " << census.clone_size << " term operations\n";
  return 0;
}
