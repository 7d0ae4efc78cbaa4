#pragma once

#include "agalg/core.hpp"
#include "agalg/lp.hpp"
#include "agalg/lattice.hpp"
#include "agalg/graver.hpp"
#include "agalg/hilbert.hpp"
#include "agalg/groebner.hpp"
#include "agalg/census.hpp"
#include "agalg/coherence.hpp"
#include "agalg/structure.hpp"
#include "agalg/paramspace.hpp"
