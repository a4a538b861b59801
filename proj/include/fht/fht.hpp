#pragma once

#include "asymptotics.hpp"
#include "bounds.hpp"
#include "dense.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "recursion.hpp"
#include "serialize.hpp"
#include "special.hpp"
#include "spectral.hpp"
#include "symbols.hpp"
#include "toeplitz.hpp"
