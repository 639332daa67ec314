#pragma once

#include "mzv/combination.hpp"
#include "mzv/composition.hpp"
#include "mzv/diagrams.hpp"
#include "mzv/identities.hpp"
#include "mzv/linalg.hpp"
#include "mzv/numerics.hpp"
#include "mzv/rational.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/verify.hpp"
