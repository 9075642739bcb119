#pragma once

/**
 * Umbrella header: the full postulation toolkit.
 */

#include "fatpoints/certificate.hpp"
#include "fatpoints/checker.hpp"
#include "fatpoints/dense_matrix.hpp"
#include "fatpoints/horace.hpp"
#include "fatpoints/interpolation.hpp"
#include "fatpoints/monomials.hpp"
#include "fatpoints/prime_field.hpp"
#include "fatpoints/rank.hpp"
#include "fatpoints/reduction.hpp"
#include "fatpoints/rng.hpp"
#include "fatpoints/scheme.hpp"
#include "fatpoints/sweeps.hpp"
#include "fatpoints/version.hpp"
