#pragma once

#include "projgb/affine.hpp"
#include "projgb/certificate.hpp"
#include "projgb/chart_lift.hpp"
#include "projgb/errors.hpp"
#include "projgb/groebner.hpp"
#include "projgb/homogeneous.hpp"
#include "projgb/io.hpp"
#include "projgb/linalg.hpp"
#include "projgb/merge.hpp"
#include "projgb/monomial.hpp"
#include "projgb/points.hpp"
#include "projgb/polynomial.hpp"
#include "projgb/projective.hpp"
#include "projgb/rational.hpp"
#include "projgb/render.hpp"
#include "projgb/staircase.hpp"
