#ifndef QTRANS_QTRANS_HPP
#define QTRANS_QTRANS_HPP

#include "core.hpp"
#include "quasitrans.hpp"
#include "hessian.hpp"
#include "classify.hpp"
#include "catalog.hpp"

#endif
