#pragma once

#include "constitution/amendment.hpp"
#include "constitution/axioms.hpp"
#include "constitution/core.hpp"
#include "constitution/errors.hpp"
#include "constitution/preferences.hpp"
#include "constitution/random_profiles.hpp"
#include "constitution/rational.hpp"
#include "constitution/selfcheck.hpp"
#include "constitution/serialization.hpp"
