#pragma once

#include "polychrome/bounds.hpp"
#include "polychrome/bounds_basic.hpp"
#include "polychrome/certificate.hpp"
#include "polychrome/codec.hpp"
#include "polychrome/colorings.hpp"
#include "polychrome/errors.hpp"
#include "polychrome/groups.hpp"
#include "polychrome/search.hpp"
#include "polychrome/verifier.hpp"
