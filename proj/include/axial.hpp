#pragma once

#include "axial/error.hpp"
#include "axial/rational.hpp"
#include "axial/linalg.hpp"
#include "axial/algebra.hpp"
#include "axial/axial.hpp"
#include "axial/jordan_half.hpp"
#include "axial/permutation.hpp"
#include "axial/constructions.hpp"
#include "axial/io.hpp"
#include "axial/sampling.hpp"
