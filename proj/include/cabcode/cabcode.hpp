#ifndef CABCODE_CABCODE_HPP
#define CABCODE_CABCODE_HPP

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "poly.hpp"
#include "groebner.hpp"
#include "cab.hpp"
#include "linalg.hpp"
#include "bounds.hpp"
#include "codes.hpp"
#include "oracle.hpp"

#endif
