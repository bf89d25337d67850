#pragma once

#include "kunzcount/arith.hpp"
#include "kunzcount/census.hpp"
#include "kunzcount/closed_forms.hpp"
#include "kunzcount/enumerate.hpp"
#include "kunzcount/errors.hpp"
#include "kunzcount/linear_system.hpp"
#include "kunzcount/oracle.hpp"
#include "kunzcount/semigroup.hpp"
#include "kunzcount/verify.hpp"
