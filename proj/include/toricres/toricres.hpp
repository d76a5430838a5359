#pragma once

#include "errors.hpp"
#include "lattice.hpp"
#include "fan.hpp"
#include "binomial.hpp"
#include "blowup.hpp"
#include "groebner.hpp"
#include "hasse.hpp"
#include "standard_basis.hpp"
#include "hypersurface.hpp"
#include "marked_ideal.hpp"
#include "resolve_general.hpp"
#include "fiber.hpp"
#include "io.hpp"
