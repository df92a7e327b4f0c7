#pragma once

// Everything in one include.

#include "steencalc/arith/finite_field.hpp"
#include "steencalc/arith/fq_poly.hpp"
#include "steencalc/arith/power_class.hpp"
#include "steencalc/arith/prime.hpp"
#include "steencalc/char_classes.hpp"
#include "steencalc/chow_ring.hpp"
#include "steencalc/equivariant.hpp"
#include "steencalc/errors.hpp"
#include "steencalc/expression.hpp"
#include "steencalc/graded_algebra.hpp"
#include "steencalc/io.hpp"
#include "steencalc/milnor_k.hpp"
#include "steencalc/steenrod.hpp"
#include "steencalc/suites.hpp"
