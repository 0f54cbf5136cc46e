#pragma once

#include "constants.hpp"
#include "gamma_bounds.hpp"
#include "geometry.hpp"
#include "kappa.hpp"
#include "optimizer.hpp"
#include "precision.hpp"
#include "published_tables.hpp"
#include "quadrature.hpp"
#include "reproduce.hpp"
#include "serialize.hpp"
#include "verify.hpp"
#include "zeta.hpp"
