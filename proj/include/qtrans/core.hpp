#ifndef QTRANS_CORE_HPP
#define QTRANS_CORE_HPP

#include "expr.hpp"
#include "gcd.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "poly.hpp"
#include "poly_map.hpp"
#include "poly_matrix.hpp"
#include "rank.hpp"
#include "rational.hpp"

#endif
