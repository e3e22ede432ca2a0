#pragma once

#include "nilalg/catalog.hpp"
#include "nilalg/error.hpp"
#include "nilalg/invariants.hpp"
#include "nilalg/parse.hpp"
#include "nilalg/poly.hpp"
#include "nilalg/rational.hpp"
#include "nilalg/report.hpp"
#include "nilalg/scalar.hpp"
#include "nilalg/solver.hpp"
#include "nilalg/structconst.hpp"
