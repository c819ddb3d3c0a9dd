#pragma once

// Umbrella header: Gabor systems with two-interval indicator windows --
// closed-form short-time Fourier transforms, zero-set catalogs, exact
// tiling/packing verification, basis certification and spectral pairs.

#include "gabortiles/classify.hpp"
#include "gabortiles/fourier.hpp"
#include "gabortiles/gabor.hpp"
#include "gabortiles/interval.hpp"
#include "gabortiles/quadrature.hpp"
#include "gabortiles/rational.hpp"
#include "gabortiles/scalar.hpp"
#include "gabortiles/spectral.hpp"
#include "gabortiles/tiling.hpp"
#include "gabortiles/translation_set.hpp"
#include "gabortiles/window.hpp"
#include "gabortiles/zeroset.hpp"
