// compo.hpp -- umbrella header for the whole library

#pragma once

#include "composition.hpp"
#include "deck.hpp"
#include "layered.hpp"
#include "oracle.hpp"
#include "reconstruct.hpp"
#include "verify.hpp"
