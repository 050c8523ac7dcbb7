#pragma once

#include "hyperex/errors.hpp"
#include "hyperex/extension.hpp"
#include "hyperex/functionals.hpp"
#include "hyperex/geometry.hpp"
#include "hyperex/measures.hpp"
#include "hyperex/parallel.hpp"
#include "hyperex/quadrature.hpp"
#include "hyperex/specfun.hpp"
