#ifndef WNLIE_WNLIE_HPP
#define WNLIE_WNLIE_HPP

#include "wnlie/derivation.hpp"
#include "wnlie/expr.hpp"
#include "wnlie/generation.hpp"
#include "wnlie/graded.hpp"
#include "wnlie/linalg.hpp"
#include "wnlie/monomial.hpp"
#include "wnlie/polynomial.hpp"
#include "wnlie/random.hpp"
#include "wnlie/rational.hpp"
#include "wnlie/reptheory.hpp"
#include "wnlie/structure.hpp"
#include "wnlie/version.hpp"

#endif  // WNLIE_WNLIE_HPP
