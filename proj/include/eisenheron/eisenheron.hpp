#pragma once

#include "errors.hpp"
#include "numeric.hpp"
#include "triangle.hpp"
#include "pell.hpp"
#include "classification.hpp"
#include "lattice.hpp"
#include "render.hpp"
#include "records.hpp"
#include "verify.hpp"
