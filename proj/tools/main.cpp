#include "cli.hpp"

int main( int argc, char** argv )
{
  return finalg::cli::main( argc, argv );
}
