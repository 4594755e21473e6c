#pragma once

#include "cesolve/cubic.hpp"
#include "cesolve/errors.hpp"
#include "cesolve/grid.hpp"
#include "cesolve/jacobi.hpp"
#include "cesolve/natanzon.hpp"
#include "cesolve/oracle.hpp"
#include "cesolve/potential.hpp"
#include "cesolve/spectrum.hpp"
#include "cesolve/susy.hpp"
#include "cesolve/transform.hpp"
#include "cesolve/wavefunction.hpp"
