/*!
  \file finalg.hpp
  \brief Umbrella header
*/

#pragma once

#include "table.hpp"
#include "algebra.hpp"
#include "term.hpp"
#include "syntax.hpp"
#include "substitution.hpp"
#include "induced.hpp"
#include "semantics.hpp"
#include "complexity.hpp"
#include "clone.hpp"
#include "io.hpp"
