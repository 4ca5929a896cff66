#pragma once

/** Umbrella header for the period-doubling word library. */

#include "pdw/envelope.hpp"
#include "pdw/error.hpp"
#include "pdw/factor_index.hpp"
#include "pdw/morphism.hpp"
#include "pdw/return_sequence.hpp"
#include "pdw/sequence.hpp"
#include "pdw/spectrum.hpp"
#include "pdw/verify.hpp"
#include "pdw/word.hpp"
