#pragma once

#include "vloci/error.hpp"
#include "vloci/geometry.hpp"
#include "vloci/inverse.hpp"
#include "vloci/linear_locus.hpp"
#include "vloci/oracle.hpp"
#include "vloci/quadratic_locus.hpp"
#include "vloci/tolerance.hpp"
